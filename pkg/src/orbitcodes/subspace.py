"""Characteristic-bitvector subspaces of F_{q^n} and the coordinate-matrix bridge.

A subspace V is stored as an integer bitset over exponents 0..q^n-2: bit j
is set iff gamma^j lies in V (the zero vector is implicit).  Intersection is
a bitwise AND, multiplying every element by gamma^e rotates the bitset by e
positions, and the dimension k is recovered from popcount = q^k - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    AllZero,
    DuplicateExponent,
    ExponentOutOfRange,
    FieldMismatch,
    NotASubspace,
)
from .gfext import FieldElement, FieldSpec


def dimension_from_popcount(popcount: int, q: int) -> int:
    """Return k with q^k - 1 = popcount, or raise NotASubspace."""
    if q == 2:
        k = popcount.bit_length()
        if (1 << k) - 1 != popcount:
            raise NotASubspace(f"popcount {popcount} is not of the form 2^k-1")
        return k
    k, size = 0, 1
    while size - 1 < popcount:
        if size - 1 == popcount:
            break
        size *= q
        k += 1
    if size - 1 != popcount:
        raise NotASubspace(f"popcount {popcount} is not of the form {q}^k-1")
    return k


def rotate_bits(bits: int, e: int, length: int) -> int:
    """Rotate a length-bit bitset left by e positions (exponent shift by +e)."""
    e %= length
    if e == 0:
        return bits
    mask = (1 << length) - 1
    return ((bits << e) | (bits >> (length - e))) & mask


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_{q^n} as a characteristic bitset over exponents."""

    field: FieldSpec
    bits: int
    dim: int

    def __post_init__(self):
        pc = self.bits.bit_count()
        if dimension_from_popcount(pc, self.field.q) != self.dim:
            raise NotASubspace(f"popcount {pc} inconsistent with dim {self.dim}")

    @property
    def exponents(self) -> tuple:
        """Sorted exponents of the nonzero elements."""
        bits, out, j = self.bits, [], 0
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def contains_exp(self, e: int) -> bool:
        return bool((self.bits >> e) & 1)

    def __contains__(self, elt: FieldElement) -> bool:
        if elt.is_zero:
            return True
        return self.contains_exp(elt.exp)

    def __repr__(self) -> str:
        exps = self.exponents
        body = ",".join(map(str, exps)) if len(exps) <= 16 else f"{len(exps)} elements"
        return f"Subspace(dim={self.dim}, [{body}])"


# -- construction ------------------------------------------------------------


def _span_packed(field: FieldSpec, basis_packed: list) -> list:
    """All packed coordinate vectors in the span of the given basis (incl. 0)."""
    q = field.q
    elts = [0]
    for b in basis_packed:
        if q == 2:
            elts += [e ^ b for e in elts]
        else:
            new = []
            for s in range(1, q):
                sb = field.coord_scale(b, s)
                new += [field.coord_add(e, sb) for e in elts]
            elts += new
    return elts


def _bits_from_packed(field: FieldSpec, packed_elts) -> int:
    log = field.log
    bits = 0
    for p in packed_elts:
        if p:
            bits |= 1 << log[p]
    return bits


def _greedy_basis_packed(field: FieldSpec, bits: int, k_hint: int | None = None) -> list:
    """Extract a basis (packed coords) from a subspace bitset by row reduction."""
    basis = []          # packed vectors
    echelon = []        # row-reduced copies used for the independence test
    q, n = field.q, field.n
    antilog = field.antilog
    e = 0
    rest = bits
    while rest:
        low = rest & -rest
        e = low.bit_length() - 1
        rest ^= low
        v = antilog[e]
        red = _reduce_against(field, v, echelon)
        if red:
            basis.append(v)
            echelon.append(_normalize_row(field, red))
            if k_hint is not None and len(basis) == k_hint:
                break
    return basis


def _leading_index(field: FieldSpec, packed: int) -> int:
    """Index of the highest nonzero coordinate digit."""
    if field.q == 2:
        return packed.bit_length() - 1
    digits = field.unpack_coords(packed)
    for i in range(field.n - 1, -1, -1):
        if digits[i]:
            return i
    return -1


def _normalize_row(field: FieldSpec, packed: int) -> int:
    """Scale a row so its leading digit is 1."""
    q = field.q
    if q == 2 or packed == 0:
        return packed
    lead = field.unpack_coords(packed)[_leading_index(field, packed)]
    inv = pow(lead, q - 2, q)
    return field.coord_scale(packed, inv)


def _reduce_against(field: FieldSpec, v: int, echelon: list) -> int:
    """Reduce v against normalized echelon rows; 0 means dependent."""
    q = field.q
    for row in echelon:
        li = _leading_index(field, row)
        if q == 2:
            if (v >> li) & 1:
                v ^= row
        else:
            c = field.unpack_coords(v)[li]
            if c:
                v = field.coord_add(v, field.coord_scale(row, q - c))
        if v == 0:
            return 0
    return v


def rank_of_packed(field: FieldSpec, vectors) -> int:
    """Rank of a set of packed coordinate vectors over F_q."""
    echelon = []
    for v in vectors:
        red = _reduce_against(field, v, echelon)
        if red:
            echelon.append(_normalize_row(field, red))
    return len(echelon)


def from_exponents(field: FieldSpec, exps) -> Subspace:
    """Build a Subspace from the exponents of its nonzero elements, validating closure."""
    seen = set()
    bits = 0
    for e in exps:
        if not 0 <= e < field.group_order:
            raise ExponentOutOfRange(f"exponent {e} out of [0, {field.group_order})")
        if e in seen:
            raise DuplicateExponent(f"exponent {e} repeated")
        seen.add(e)
        bits |= 1 << e
    pc = bits.bit_count()
    try:
        k = dimension_from_popcount(pc, field.q)
    except NotASubspace:
        raise NotASubspace(
            f"{pc} nonzero elements is not q^k-1 for q={field.q}") from None
    basis = _greedy_basis_packed(field, bits, k_hint=k)
    if len(basis) != k or _bits_from_packed(field, _span_packed(field, basis)) != bits:
        raise NotASubspace("element set is not closed under addition")
    return Subspace(field, bits, k)


def from_bits(field: FieldSpec, bits: int) -> Subspace:
    """Wrap a bitset already known to be a subspace (no closure check)."""
    return Subspace(field, bits, dimension_from_popcount(bits.bit_count(), field.q))


def span(field: FieldSpec, vectors) -> Subspace:
    """Smallest subspace containing the given field elements."""
    packed = []
    for v in vectors:
        if isinstance(v, FieldElement):
            if not v.is_zero:
                packed.append(field.antilog[v.exp])
        else:
            if not 0 <= v < field.group_order:
                raise ExponentOutOfRange(f"exponent {v} out of range")
            packed.append(field.antilog[v])
    if not packed:
        raise AllZero("span needs at least one nonzero vector")
    echelon = []
    basis = []
    for v in packed:
        red = _reduce_against(field, v, echelon)
        if red:
            basis.append(v)
            echelon.append(_normalize_row(field, red))
    bits = _bits_from_packed(field, _span_packed(field, basis))
    return Subspace(field, bits, len(basis))


def zero_subspace(field: FieldSpec) -> Subspace:
    return Subspace(field, 0, 0)


def full_space(field: FieldSpec) -> Subspace:
    return Subspace(field, (1 << field.group_order) - 1, field.n)


# -- operations ---------------------------------------------------------------


def dimension(V: Subspace) -> int:
    return V.dim


def _check_field(U: Subspace, V: Subspace) -> None:
    if U.field != V.field:
        raise FieldMismatch("subspaces live in different fields")


def intersect(U: Subspace, V: Subspace) -> Subspace:
    _check_field(U, V)
    return from_bits(U.field, U.bits & V.bits)


def distance(U: Subspace, V: Subspace) -> int:
    """Subspace distance dim U + dim V - 2 dim(U inter V)."""
    _check_field(U, V)
    both = U.bits & V.bits
    kw = dimension_from_popcount(both.bit_count(), U.field.q)
    return U.dim + V.dim - 2 * kw


def shift(V: Subspace, e: int) -> Subspace:
    """Multiply every element by gamma^e (rotate the characteristic vector)."""
    return Subspace(V.field, rotate_bits(V.bits, e, V.field.group_order), V.dim)


def basis_matrix(V: Subspace) -> list:
    """RREF basis of V as a list of coordinate tuples (rows)."""
    field = V.field
    rows = _rref(field, _greedy_basis_packed(field, V.bits, k_hint=V.dim))
    return [field.unpack_coords(r) for r in rows]


def _rref(field: FieldSpec, rows: list) -> list:
    """Row-reduce packed vectors to the unique RREF (packed rows, by pivot)."""
    q, n = field.q, field.n
    mat = [list(field.unpack_coords(r)) for r in rows]
    ri = 0
    for col in range(n):
        pr = next((i for i in range(ri, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[ri], mat[pr] = mat[pr], mat[ri]
        inv = pow(mat[ri][col], q - 2, q) if q != 2 else 1
        if inv != 1:
            mat[ri] = [(x * inv) % q for x in mat[ri]]
        for i in range(len(mat)):
            if i != ri and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % q for a, b in zip(mat[i], mat[ri])]
        ri += 1
    return [field.pack_coords(row) for row in mat[:ri] if any(row)]


def nullspace_packed(field: FieldSpec, rows: list) -> list:
    """Basis (packed) of {x : row . x = 0 for all rows} under the coordinate dot product."""
    q, n = field.q, field.n
    if q == 2:
        return _nullspace_gf2(rows, n)
    # general q: gaussian elimination on digit matrices
    mat = [list(field.unpack_coords(r)) for r in rows]
    pivots = []
    ri = 0
    for col in range(n):
        pr = next((i for i in range(ri, len(mat)) if mat[i][col]), None)
        if pr is None:
            continue
        mat[ri], mat[pr] = mat[pr], mat[ri]
        inv = pow(mat[ri][col], q - 2, q)
        mat[ri] = [(x * inv) % q for x in mat[ri]]
        for i in range(len(mat)):
            if i != ri and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % q for a, b in zip(mat[i], mat[ri])]
        pivots.append(col)
        ri += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-mat[i][fc]) % q
        basis.append(field.pack_coords(vec))
    return basis


def _nullspace_gf2(rows: list, n: int) -> list:
    mat = list(rows)
    pivots = []
    ri = 0
    for col in range(n):
        pr = next((i for i in range(ri, len(mat)) if (mat[i] >> col) & 1), None)
        if pr is None:
            continue
        mat[ri], mat[pr] = mat[pr], mat[ri]
        for i in range(len(mat)):
            if i != ri and (mat[i] >> col) & 1:
                mat[i] ^= mat[ri]
        pivots.append(col)
        ri += 1
    pivot_set = set(pivots)
    basis = []
    for fc in range(n):
        if fc in pivot_set:
            continue
        vec = 1 << fc
        for i, pc in enumerate(pivots):
            if (mat[i] >> fc) & 1:
                vec |= 1 << pc
        basis.append(vec)
    return basis


def orthogonal_complement(V: Subspace) -> Subspace:
    """Nullspace of V under the coordinate dot product in the polynomial basis."""
    field = V.field
    if V.dim == 0:
        return full_space(field)
    if V.dim == field.n:
        return zero_subspace(field)
    rows = _greedy_basis_packed(field, V.bits, k_hint=V.dim)
    nsp = nullspace_packed(field, rows)
    bits = _bits_from_packed(field, _span_packed(field, nsp))
    return Subspace(field, bits, field.n - V.dim)


def complement_bits(field: FieldSpec, bits: int, dim: int) -> int:
    """orthogonal_complement on raw bitsets (hot path for the duality search)."""
    if dim == 0:
        return (1 << field.group_order) - 1
    if dim == field.n:
        return 0
    rows = _greedy_basis_packed(field, bits, k_hint=dim)
    nsp = nullspace_packed(field, rows)
    return _bits_from_packed(field, _span_packed(field, nsp))


def canonical_rotation(V: Subspace, m: int = 1) -> tuple:
    """Canonical representative of V's m-quasi orbit and the rotation reaching it.

    The representative is the rotation of V by a multiple of m with the
    smallest bitset integer value; it is shared by every orbit member.
    """
    field = V.field
    N = field.group_order
    if m < 1 or N % m != 0:
        raise FieldMismatch(f"modulus {m} does not divide {N}")
    best, best_off = V.bits, 0
    cur = V.bits
    for j in range(1, N // m):
        cur = rotate_bits(cur, m, N)
        if cur == V.bits:
            break
        if cur < best:
            best, best_off = cur, j * m
    return Subspace(field, best, V.dim), best_off
