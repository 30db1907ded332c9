"""Exact arithmetic in F_{q^n} with a primitive-element exponent representation.

A field is fixed by a prime q, a degree n and a monic degree-n polynomial
p(x) over F_q whose root x generates the multiplicative group (a primitive
polynomial).  Nonzero elements are stored as exponents e, meaning gamma^e
where gamma is the class of x; coordinate vectors in the polynomial basis
{1, x, ..., x^{n-1}} are packed into a single integer with digit i holding
the coefficient of x^i (base-q digits, so plain bits when q = 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DegreeMismatch,
    NoDefault,
    NotPrime,
    NotPrimitive,
    TooLarge,
    ZeroInverse,
)

# Largest supported multiplicative group; log/antilog tables are dense.
DEFAULT_MAX_GROUP_ORDER = 1 << 24

# Primitive polynomials, constant term first.  The (2,4), (2,5), (2,6),
# (2,8) and (2,10) entries are the ones the shipped example codes and the
# duality tables are stated against; changing them changes those results.
DEFAULT_POLYS = {
    (2, 1): (1, 1),                                  # x + 1
    (2, 2): (1, 1, 1),                               # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),                            # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),                         # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),                      # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),                   # x^6 + x^4 + x^3 + x + 1
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),                # x^7 + x + 1
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),             # x^8 + x^4 + x^3 + x^2 + 1
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),          # x^9 + x^4 + 1
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),      # x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),   # x^11 + x^2 + 1
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),                                  # x + 1
    (3, 2): (2, 1, 1),                               # x^2 + x + 2
    (3, 3): (1, 2, 0, 1),                            # x^3 + 2x + 1
    (3, 4): (2, 1, 0, 0, 1),                         # x^4 + x + 2
    (5, 1): (2, 1),                                  # x + 2
    (5, 2): (2, 1, 1),                               # x^2 + x + 2
    (7, 1): (4, 1),                                  # x + 4
    (7, 2): (3, 1, 1),                               # x^2 + x + 3
}


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def default_poly(q: int, n: int) -> tuple:
    """Return the built-in primitive polynomial for F_{q^n}, constant term first."""
    try:
        return DEFAULT_POLYS[(q, n)]
    except KeyError:
        raise NoDefault(f"no built-in primitive polynomial for q={q}, n={n}") from None


def parse_poly(text: str, q: int) -> tuple:
    """Parse a polynomial given as coefficients "1,1,0,0,1" or terms "x^4+x+1"."""
    text = text.strip()
    if "," in text or text.lstrip("-").isdigit():
        coeffs = tuple(int(c) % q for c in text.split(","))
        return coeffs
    coeffs = {}
    for term in text.replace("-", "+").split("+"):
        term = term.strip()
        if not term:
            continue
        if "x" not in term:
            coeffs[0] = coeffs.get(0, 0) + int(term)
        else:
            c, _, rest = term.partition("x")
            c = int(c.rstrip("*")) if c.strip() else 1
            e = int(rest.lstrip("^")) if rest.strip() else 1
            coeffs[e] = coeffs.get(e, 0) + c
    deg = max(coeffs)
    return tuple(coeffs.get(i, 0) % q for i in range(deg + 1))


def poly_str(poly: tuple) -> str:
    """Render a coefficient tuple (constant first) as "x^4+x+1"."""
    terms = []
    for e in range(len(poly) - 1, -1, -1):
        c = poly[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            x = "x" if e == 1 else f"x^{e}"
            terms.append(x if c == 1 else f"{c}{x}")
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldElement:
    """Either zero (exp is None) or gamma^exp."""

    field: "FieldSpec"
    exp: int | None

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    @property
    def coords(self) -> tuple:
        """Coordinate vector over F_q in the polynomial basis."""
        f = self.field
        packed = 0 if self.exp is None else f.antilog[self.exp]
        return f.unpack_coords(packed)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self.field.add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self.field.mul(self, other)


class FieldSpec:
    """F_{q^n} with full log/antilog tables; immutable once built."""

    def __init__(self, q: int, n: int, poly: tuple,
                 max_group_order: int = DEFAULT_MAX_GROUP_ORDER):
        if not is_prime(q):
            raise NotPrime(f"q={q} is not prime")
        if n < 1:
            raise DegreeMismatch(f"n={n} must be >= 1")
        poly = tuple(int(c) for c in poly)
        if len(poly) != n + 1:
            raise DegreeMismatch(f"polynomial has degree {len(poly) - 1}, expected {n}")
        if poly[-1] != 1:
            raise DegreeMismatch("polynomial must be monic")
        if any(c < 0 or c >= q for c in poly):
            raise DegreeMismatch(f"coefficients must lie in [0, {q})")
        order = q ** n
        if order - 1 > max_group_order:
            raise TooLarge(f"q^n-1 = {order - 1} exceeds limit {max_group_order}")

        self.q = q
        self.n = n
        self.poly = poly
        self.order = order
        self.group_order = order - 1

        # antilog[e] = packed coordinates of gamma^e; log[packed] = e.
        antilog = [0] * self.group_order
        log = [-1] * order
        val = 1  # packed coords of 1
        for e in range(self.group_order):
            if log[val] != -1:
                raise NotPrimitive(
                    f"{poly_str(poly)} is not primitive over F_{q} "
                    f"(x has order {e})")
            antilog[e] = val
            log[val] = e
            val = self._mul_by_x(val)
        if val != 1:
            raise NotPrimitive(f"{poly_str(poly)} is not primitive over F_{q}")
        self.antilog = antilog
        self.log = log
        self._hash = hash((q, n, poly))

    def _mul_by_x(self, packed: int) -> int:
        """Multiply a packed coordinate vector by x, reducing mod poly."""
        q, n = self.q, self.n
        if q == 2:
            packed <<= 1
            if packed >> n:
                packed ^= self._packed_poly_gf2()
            return packed
        digits = self.unpack_coords(packed)
        top = digits[-1]
        shifted = [0] + list(digits[:-1])
        if top:
            for i in range(n):
                shifted[i] = (shifted[i] - top * self.poly[i]) % q
        return self.pack_coords(shifted)

    def _packed_poly_gf2(self) -> int:
        val = 0
        for i, c in enumerate(self.poly):
            if c:
                val |= 1 << i
        return val

    # -- coordinate packing ------------------------------------------------

    def pack_coords(self, digits) -> int:
        q = self.q
        val = 0
        for d in reversed(list(digits)):
            val = val * q + d
        return val

    def unpack_coords(self, packed: int) -> tuple:
        q = self.q
        out = []
        for _ in range(self.n):
            packed, d = divmod(packed, q) if q != 2 else (packed >> 1, packed & 1)
            out.append(d)
        return tuple(out)

    def coord_add(self, a: int, b: int) -> int:
        """Add two packed coordinate vectors."""
        if self.q == 2:
            return a ^ b
        return self.pack_coords(
            (x + y) % self.q
            for x, y in zip(self.unpack_coords(a), self.unpack_coords(b)))

    def coord_scale(self, a: int, s: int) -> int:
        if self.q == 2:
            return a if s & 1 else 0
        return self.pack_coords((x * s) % self.q for x in self.unpack_coords(a))

    # -- elements ----------------------------------------------------------

    def zero(self) -> FieldElement:
        return FieldElement(self, None)

    def element(self, exp: int) -> FieldElement:
        if not 0 <= exp < self.group_order:
            raise ValueError(f"exponent {exp} out of range [0, {self.group_order})")
        return FieldElement(self, exp)

    def one(self) -> FieldElement:
        return FieldElement(self, 0)

    def from_coords(self, digits) -> FieldElement:
        packed = self.pack_coords(digits)
        if packed == 0:
            return self.zero()
        return FieldElement(self, self.log[packed])

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check_same(a, b)
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        packed = self.coord_add(self.antilog[a.exp], self.antilog[b.exp])
        if packed == 0:
            return self.zero()
        return FieldElement(self, self.log[packed])

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check_same(a, b)
        if a.is_zero or b.is_zero:
            return self.zero()
        return FieldElement(self, (a.exp + b.exp) % self.group_order)

    def inv(self, a: FieldElement) -> FieldElement:
        if a.is_zero:
            raise ZeroInverse("zero has no multiplicative inverse")
        return FieldElement(self, (-a.exp) % self.group_order)

    def _check_same(self, a: FieldElement, b: FieldElement) -> None:
        if a.field is not self or b.field is not self:
            if a.field != self or b.field != self:
                raise ValueError("elements belong to different fields")

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec)
                and self.q == other.q and self.n == other.n
                and self.poly == other.poly)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, n={self.n}, poly={poly_str(self.poly)})"


def make_field(q: int, n: int, poly=None,
               max_group_order: int = DEFAULT_MAX_GROUP_ORDER) -> FieldSpec:
    """Build and validate a FieldSpec; poly defaults to the built-in table."""
    if poly is None:
        poly = default_poly(q, n)
    elif isinstance(poly, str):
        poly = parse_poly(poly, q)
    return FieldSpec(q, n, tuple(poly), max_group_order=max_group_order)
