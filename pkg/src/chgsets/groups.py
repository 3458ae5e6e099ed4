"""Ambient spaces, elements, element sets, and translation classes.

Three ambient kinds are supported: the cyclic group Z_n, the coordinate
product Z_q^d, and the integer interval of size n viewed as a subset of Z.
The interval is *not* a group under its addition: translation is plain
integer addition, sums may leave the window, and containment questions are
the business of whoever asked for the translate.

Elements are plain ints (cyclic / interval) or d-tuples of ints (product),
always reduced to canonical residues for the group kinds.  The natural
Python ordering (numeric, or lexicographic on tuples) is the canonical
element order, and ``elem_key`` provides an order-compatible mixed-radix
integer encoding used by the hot counting loops elsewhere.

Interval sets are stored 0-based internally; file and CLI output shift
them to the 1-based window {1, ..., n}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product

from .errors import ParameterError

Elem = int | tuple


@dataclass(frozen=True)
class Cyclic:
    """The cyclic group Z_n, elements 0..n-1."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"cyclic order must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Product:
    """The direct product Z_q^d, elements are d-tuples of residues mod q."""

    q: int
    d: int

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"product modulus must be >= 2, got {self.q}")
        if self.d < 1:
            raise ParameterError(f"product dimension must be >= 1, got {self.d}")


@dataclass(frozen=True)
class Interval:
    """The integer window of size n inside Z, stored 0-based.

    Not a group: addition is ordinary integer addition and may leave the
    window.  Element validity only requires a non-negative integer; the
    operations that promise containment in [0, n) assert it themselves.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"interval size must be >= 1, got {self.n}")


Group = Cyclic | Product | Interval


def order(group) -> int:
    """Ambient size: group order, or the interval window size."""
    if isinstance(group, Product):
        return group.q**group.d
    return group.n


def zero(group):
    if isinstance(group, Product):
        return (0,) * group.d
    return 0


def validate_elem(group, e):
    """Check canonical form for the group kind; return the element."""
    if isinstance(group, Product):
        if not isinstance(e, tuple) or len(e) != group.d:
            raise ParameterError(f"expected a {group.d}-tuple for {group}, got {e!r}")
        if not all(isinstance(c, int) and 0 <= c < group.q for c in e):
            raise ParameterError(f"coordinates of {e!r} out of range for {group}")
        return e
    if not isinstance(e, int) or isinstance(e, bool):
        raise ParameterError(f"expected an int element for {group}, got {e!r}")
    if isinstance(group, Cyclic):
        if not 0 <= e < group.n:
            raise ParameterError(f"element {e} out of range for {group}")
    elif e < 0:
        raise ParameterError(f"interval elements must be >= 0, got {e}")
    return e


def add(group, a, b):
    """Group addition; plain integer addition for intervals."""
    if isinstance(group, Product):
        if not (isinstance(a, tuple) and isinstance(b, tuple) and len(a) == len(b) == group.d):
            raise ParameterError(f"dimension mismatch adding {a!r} + {b!r} in {group}")
        q = group.q
        return tuple((x + y) % q for x, y in zip(a, b))
    if isinstance(a, tuple) or isinstance(b, tuple):
        raise ParameterError(f"dimension mismatch adding {a!r} + {b!r} in {group}")
    if isinstance(group, Cyclic):
        return (a + b) % group.n
    return a + b


def sub(group, a, b):
    """a - b.  For intervals this is signed integer subtraction."""
    if isinstance(group, Product):
        q = group.q
        return tuple((x - y) % q for x, y in zip(a, b))
    if isinstance(group, Cyclic):
        return (a - b) % group.n
    return a - b


def elem_key(group, e) -> int:
    """Order-compatible integer encoding (mixed radix, first coord most
    significant for products; the value itself otherwise)."""
    if isinstance(group, Product):
        k = 0
        for c in e:
            k = k * group.q + c
        return k
    return e


def elem_from_key(group, k: int):
    if isinstance(group, Product):
        coords = []
        for _ in range(group.d):
            k, r = divmod(k, group.q)
            coords.append(r)
        return tuple(reversed(coords))
    return k


def iter_elements(group):
    """All ambient elements in canonical (sorted) order."""
    if isinstance(group, Product):
        return iter_product(range(group.q), repeat=group.d)
    return iter(range(group.n))


@dataclass(frozen=True)
class GSet:
    """A finite, sorted, duplicate-free set of elements of one ambient space."""

    group: object
    elems: tuple

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, e):
        return e in self.elems


def gset(group, elems) -> GSet:
    """Build a GSet: validates, deduplicates, sorts."""
    uniq = sorted({validate_elem(group, e) for e in elems})
    return GSet(group, tuple(uniq))


def _gset_unchecked(group, sorted_elems) -> GSet:
    return GSet(group, tuple(sorted_elems))


def translate(group, xs: GSet, k) -> GSet:
    """The translate {x + k : x in X}; cardinality is always preserved.

    Interval translates may leave the window, which is why the result skips
    range validation for that kind.
    """
    shifted = sorted(add(group, x, k) for x in xs.elems)
    if len(set(shifted)) != len(xs.elems):
        raise ParameterError(f"translation by {k!r} collapsed elements in {group}")
    return _gset_unchecked(group, shifted)


def canonical_shift_tuple(group, subset):
    """Canonical (pattern, shift) for a tuple of distinct elements.

    The pattern is the lexicographically smallest sorted tuple among the
    |X| candidates X - x (x in X); for intervals the only sensible shift is
    min(X).  Patterns always contain the zero element, and two sets get the
    same pattern exactly when they are translates of one another.
    """
    if not subset:
        raise ParameterError("cannot canonicalize an empty set")
    if isinstance(group, Interval):
        m = min(subset)
        return tuple(sorted(x - m for x in subset)), m
    best = None
    best_shift = None
    for x in sorted(subset):
        cand = tuple(sorted(sub(group, y, x) for y in subset))
        if best is None or cand < best:
            best = cand
            best_shift = x
    return best, best_shift


def canonicalize(group, xs: GSet):
    """Canonical representative of the translation class of X.

    Returns ``(pattern, shift)`` with ``pattern = X - shift``.
    """
    pattern, shift = canonical_shift_tuple(group, xs.elems)
    return _gset_unchecked(group, pattern), shift


def stabilizer(group, pattern):
    """All t with pattern + t = pattern (pattern must contain zero).

    Trivial for intervals and for any aperiodic pattern; for group kinds a
    nontrivial stabilizer means the pattern is a union of cosets of the
    subgroup it generates.
    """
    pset = set(pattern)
    return [t for t in pattern if all(add(group, x, t) in pset for x in pattern)]


def h_subsets_colex(elems, h):
    """h-subsets of a sorted sequence in colexicographic order."""

    def gen(k, limit):
        if k == 0:
            yield ()
            return
        for last in range(k - 1, limit):
            for rest in gen(k - 1, last):
                yield rest + (elems[last],)

    yield from gen(h, len(elems))


@dataclass(frozen=True)
class PatternClass:
    """A translation class of h-subsets inside a host set.

    ``pattern`` is the canonical representative; ``bases`` is the full,
    sorted list of translation offsets k with pattern + k inside the host
    (offsets, not member subsets: a pattern with a nontrivial stabilizer
    has several offsets per member).
    """

    pattern: GSet
    bases: tuple


def enumerate_pattern_classes(group, host: GSet, h: int) -> list:
    """Partition the h-subsets of ``host`` into translation classes.

    Returns classes sorted by canonical pattern.  The number of member
    subsets summed over classes is C(|host|, h); the ``bases`` lists are
    exhaustive offset lists, which coincide with the member subsets except
    when a pattern has a nontrivial stabilizer (then each member accounts
    for |stabilizer| offsets).
    """
    if h < 2:
        raise ParameterError(f"pattern size h must be >= 2, got {h}")
    elems = host.elems
    if h > len(elems):
        return []
    classes: dict = {}
    for subset in h_subsets_colex(elems, h):
        pattern, shift = canonical_shift_tuple(group, subset)
        classes.setdefault(pattern, []).append(shift)
    out = []
    for pattern in sorted(classes):
        shifts = classes[pattern]
        stab = stabilizer(group, pattern)
        if len(stab) > 1:
            bases = sorted({add(group, s, t) for s in shifts for t in stab})
        else:
            bases = sorted(shifts)
        out.append(PatternClass(_gset_unchecked(group, pattern), tuple(bases)))
    return out


def subset_count(host_size: int, h: int) -> int:
    return math.comb(host_size, h)
