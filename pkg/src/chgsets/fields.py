"""Prime-field and extension-field arithmetic for the norm construction.

Extension fields F_{q^h} (q prime) are represented in the polynomial basis
1, t, ..., t^{h-1}: an element is an h-tuple of residues mod q, constant
term first.  The defining modulus is the lexicographically smallest monic
irreducible polynomial of degree h, found by exhaustive testing, so every
run builds the identical field.

The norm map N(x) = x^{1+q+...+q^{h-1}} lands in the base field and is
computed by square-and-multiply on the explicit exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .errors import ParameterError, ResourceCapError

DEFAULT_FIELD_CAP = 4096

# Deterministic Miller-Rabin witness set, exact for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """F_p; primality is checked at construction."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")


def quadratic_character(p: int, a: int) -> int:
    """Euler's criterion: +1 for a nonzero square mod p, -1 otherwise, 0 at 0."""
    if p == 2 or not is_prime(p):
        raise ParameterError(f"need an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, constant term first, over F_q)


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(q, a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _poly_trim(out)


def _poly_mod(q, a, m):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        a = _poly_trim(a)
        if len(a) - 1 < dm:
            break
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % q
        a = _poly_trim(a)
    return a


def _poly_eval(q, a, x):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % q
    return acc


@lru_cache(maxsize=None)
def _monic_irreducibles(q: int, deg: int) -> tuple:
    out = []
    for coeffs in iter_product(range(q), repeat=deg):
        f = tuple(coeffs) + (1,)
        if is_poly_irreducible(q, f):
            out.append(f)
    return tuple(out)


def is_poly_irreducible(q: int, f) -> bool:
    """Exhaustive irreducibility test: roots for degree <= 3, trial division
    by lower-degree monic irreducibles in general."""
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if any(_poly_eval(q, f, x) == 0 for x in range(q)):
        return False
    if deg <= 3:
        return True
    for d in range(2, deg // 2 + 1):
        for m in _monic_irreducibles(q, d):
            if not _poly_mod(q, f, list(m)):
                return False
    return True


def find_irreducible(q: int, h: int, cap: int = DEFAULT_FIELD_CAP) -> tuple:
    """Smallest monic irreducible of degree h over F_q.

    Candidates are ordered by their value at t = q (lexicographic on
    coefficients from the highest power down), the usual way these tables
    are written.  The result is returned constant term first, leading 1
    included.
    """
    if not is_prime(q):
        raise ParameterError(f"base {q} is not prime")
    if h < 2:
        raise ParameterError(f"extension degree must be >= 2, got {h}")
    if q**h > cap:
        raise ResourceCapError(f"field size {q}^{h} exceeds cap {cap}")
    for k in range(q**h):
        coeffs = []
        v = k
        for _ in range(h):
            v, r = divmod(v, q)
            coeffs.append(r)
        f = tuple(coeffs) + (1,)
        if is_poly_irreducible(q, f):
            return f
    raise RuntimeError("no irreducible polynomial found (impossible)")


@dataclass(frozen=True)
class ExtField:
    """F_{q^h} = F_q[t] / (modulus); modulus is monic irreducible of degree h."""

    q: int
    h: int
    modulus: tuple

    def __post_init__(self):
        if not is_prime(self.q):
            raise ParameterError(f"base {self.q} is not prime")
        if self.h < 2:
            raise ParameterError(f"extension degree must be >= 2, got {self.h}")
        m = self.modulus
        if len(m) != self.h + 1 or m[-1] != 1:
            raise ParameterError(f"modulus {m} is not monic of degree {self.h}")
        if not all(0 <= c < self.q for c in m):
            raise ParameterError(f"modulus {m} has coefficients out of range mod {self.q}")
        if not is_poly_irreducible(self.q, m):
            raise ParameterError(f"modulus {m} is reducible over F_{self.q}")

    @property
    def size(self) -> int:
        return self.q**self.h

    def zero(self):
        return (0,) * self.h

    def one(self):
        return (1,) + (0,) * (self.h - 1)


def ext_field(q: int, h: int, cap: int = DEFAULT_FIELD_CAP) -> ExtField:
    return ExtField(q, h, find_irreducible(q, h, cap))


def _pad(field, coeffs):
    return tuple(coeffs) + (0,) * (field.h - len(coeffs))


def ext_add(field: ExtField, a, b):
    q = field.q
    return tuple((x + y) % q for x, y in zip(a, b))


def ext_mul(field: ExtField, a, b):
    prod = _poly_mul(field.q, list(a), list(b))
    return _pad(field, _poly_mod(field.q, prod, list(field.modulus)))


def ext_pow(field: ExtField, a, e: int):
    result = field.one()
    base = a
    while e:
        if e & 1:
            result = ext_mul(field, result, base)
        base = ext_mul(field, base, base)
        e >>= 1
    return result


def iter_field(field: ExtField):
    """All q^h elements, constant term varying fastest."""
    for coeffs in iter_product(range(field.q), repeat=field.h):
        yield coeffs


def norm(field: ExtField, x) -> int:
    """The norm to F_q: x^((q^h - 1) / (q - 1)), returned as a residue.

    A non-constant result means the modulus was not irreducible, which the
    constructor rules out, so it is reported as an internal error.
    """
    e = (field.q**field.h - 1) // (field.q - 1)
    y = ext_pow(field, x, e)
    if any(c != 0 for c in y[1:]):
        raise RuntimeError(f"norm of {x} not in base field: {y} (broken modulus?)")
    return y[0]


def additive_coords(field: ExtField, x) -> tuple:
    """Additive-group isomorphism onto Z_q^h: the coefficient vector itself."""
    return tuple(x)
