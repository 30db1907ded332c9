"""Subspace codes: parameters, bounds, spreads, duality and file verification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadModulus,
    FieldMismatch,
    NotADivisor,
    OddDistance,
    ParseError,
    TooSmall,
    VerificationFailed,
)
from .gfext import FieldSpec, make_field
from .subspace import (
    Subspace,
    dimension_from_popcount,
    from_bits,
    from_exponents,
    orthogonal_complement,
    rotate_bits,
)


# -- exact counting and bounds --------------------------------------------------


@lru_cache(maxsize=None)
def gaussian_coefficient(n: int, k: int, q: int) -> int:
    """Number of k-dim subspaces of F_q^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def etzion_vardy_bound(n: int, d: int, k: int, q: int) -> int:
    """Upper bound on the size of a constant-dimension code of min distance d."""
    if d % 2 != 0 or d < 2:
        raise OddDistance(f"minimum distance {d} must be even and >= 2")
    delta = (d - 2) // 2
    return gaussian_coefficient(n, k, q) // gaussian_coefficient(n - k + delta, delta, q)


# -- code objects ----------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceCode:
    """A set of subspaces, possibly of mixed dimension."""

    field: FieldSpec
    words: frozenset                  # of Subspace
    provenance: tuple = None          # ((generator Subspace, m), ...) or None
    duplicate_generators: tuple = ()  # indices of generators whose orbit repeated

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def dims(self) -> tuple:
        return tuple(sorted({w.dim for w in self.words}))

    @property
    def constant_dimension(self) -> bool:
        return len(self.dims) == 1

    def params(self) -> tuple:
        """[n, k, size, d] for constant dimension, else [n, size, d]."""
        n = self.field.n
        d = min_distance(self) if self.size >= 2 else None
        if self.constant_dimension:
            return (n, self.dims[0], self.size, d)
        return (n, self.size, d)


def _expand_orbit_bits(field: FieldSpec, bits: int, m: int) -> list:
    """All distinct rotations of bits by multiples of m, starting at bits."""
    N = field.group_order
    out = [bits]
    cur = rotate_bits(bits, m, N)
    while cur != bits:
        out.append(cur)
        cur = rotate_bits(cur, m, N)
    return out


def code_from_generators(field: FieldSpec, m: int, generators) -> SubspaceCode:
    """Union of the m-quasi orbits of the generators; duplicate orbits are merged."""
    N = field.group_order
    if m < 1 or N % m != 0:
        raise BadModulus(f"m={m} does not divide {N}")
    words = {}
    duplicates = []
    provenance = []
    for idx, gen in enumerate(generators):
        if gen.field != field:
            raise FieldMismatch("generator belongs to a different field")
        members = _expand_orbit_bits(field, gen.bits, m)
        if members[0] in words or any(b in words for b in members):
            duplicates.append(idx)
        for b in members:
            words[b] = gen.dim
        provenance.append((gen, m))
    wordset = frozenset(from_bits(field, b) for b in words)
    return SubspaceCode(field, wordset, tuple(provenance), tuple(duplicates))


def code_from_words(field: FieldSpec, words) -> SubspaceCode:
    return SubspaceCode(field, frozenset(words))


def spread_code(field: FieldSpec, t: int) -> SubspaceCode:
    """The orbit of the subfield F_{q^t}: a spread of F_q^n (requires t | n)."""
    if field.n % t != 0:
        raise NotADivisor(f"t={t} does not divide n={field.n}")
    N = field.group_order
    step = N // (field.q ** t - 1)
    subfield = from_exponents(field, range(0, N, step))
    code = code_from_generators(field, 1, [subfield])
    # spread properties: trivial pairwise intersections, exact cover
    total = 0
    union = 0
    for w in code.words:
        total += w.bits.bit_count()
        union |= w.bits
    if union != (1 << N) - 1 or total != N:
        raise VerificationFailed("spread cover property failed")
    words = list(code.words)
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            if words[i].bits & words[j].bits:
                raise VerificationFailed("spread members intersect nontrivially")
    return code


# -- minimum distance -------------------------------------------------------------


def _dist_bits(q: int, ka: int, kb: int, a: int, b: int) -> int:
    return ka + kb - 2 * dimension_from_popcount((a & b).bit_count(), q)


def min_distance(C: SubspaceCode) -> int:
    """Exact minimum distance; orbit-based when provenance is available."""
    if C.size < 2:
        raise TooSmall("minimum distance needs at least two codewords")
    if C.provenance:
        return _min_distance_orbits(C)
    return _min_distance_all_pairs(C)


def _min_distance_all_pairs(C: SubspaceCode) -> int:
    q = C.field.q
    ws = [(w.dim, w.bits) for w in C.words]
    best = None
    for i in range(len(ws)):
        ka, a = ws[i]
        for j in range(i + 1, len(ws)):
            kb, b = ws[j]
            d = ka + kb - 2 * dimension_from_popcount((a & b).bit_count(), q)
            if best is None or d < best:
                best = d
                if best == 0:
                    return 0
    return best


def _min_distance_orbits(C: SubspaceCode) -> int:
    """Shift identity: only orbit-vs-shifted-orbit comparisons are needed."""
    field = C.field
    N, q = field.group_order, field.q
    gens = []
    seen = set()
    for gen, m in C.provenance:
        members = _expand_orbit_bits(field, gen.bits, m)
        if members[0] in seen:
            continue  # duplicate orbit
        seen.update(members)
        gens.append((gen.dim, gen.bits, m, len(members)))
    best = None

    def consider(d):
        nonlocal best
        if best is None or d < best:
            best = d

    for ka, a, m, length in gens:
        cur = a
        for _ in range(length - 1):
            cur = rotate_bits(cur, m, N)
            consider(_dist_bits(q, ka, ka, a, cur))
    for i in range(len(gens)):
        ka, a, ma, _ = gens[i]
        for j in range(i + 1, len(gens)):
            kb, b, mb, _ = gens[j]
            m = ma  # generators of one code share a modulus
            cur = b
            for _ in range(N // m):
                consider(_dist_bits(q, ka, kb, a, cur))
                cur = rotate_bits(cur, m, N)
    if best is None:
        raise TooSmall("code has a single orbit of length 1")
    return best


# -- duality and cyclicity ----------------------------------------------------------


def dualize(C: SubspaceCode) -> SubspaceCode:
    """The code of orthogonal complements (provenance does not survive)."""
    return SubspaceCode(C.field, frozenset(orthogonal_complement(w) for w in C.words))


def is_quasi_cyclic(C: SubspaceCode, m: int) -> bool:
    """True iff the word set is closed under the shift by gamma^m."""
    N = C.field.group_order
    if m < 1 or N % m != 0:
        raise BadModulus(f"m={m} does not divide {N}")
    bitset = {w.bits for w in C.words}
    return all(rotate_bits(b, m, N) in bitset for b in bitset)


def is_cyclic(C: SubspaceCode) -> bool:
    return is_quasi_cyclic(C, 1)


def is_self_dual(C: SubspaceCode) -> bool:
    bitset = {w.bits for w in C.words}
    from .subspace import complement_bits
    return all(complement_bits(C.field, b, dimension_from_popcount(
        b.bit_count(), C.field.q)) in bitset for b in bitset)


# -- code files -----------------------------------------------------------------


@dataclass
class CodeFile:
    """Parsed code file: field, shift modulus, generators, optional claim."""

    field: FieldSpec
    m: int
    generators: list         # of Subspace
    claimed: dict | None


def load_code_file(path) -> CodeFile:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read code file {path}: {exc}") from exc
    try:
        fspec = doc["field"]
        field = make_field(fspec["q"], fspec["n"], fspec["poly"])
        m = doc.get("m", 1)
        generators = [from_exponents(field, exps) for exps in doc["generators"]]
    except KeyError as exc:
        raise ParseError(f"code file {path} missing key {exc}") from exc
    return CodeFile(field, m, generators, doc.get("claimed"))


def dump_code_file(path, field: FieldSpec, m: int, generators,
                   claimed: dict | None = None) -> None:
    doc = {
        "field": {"q": field.q, "n": field.n, "poly": list(field.poly)},
        "m": m,
        "generators": [list(g.exponents) for g in generators],
    }
    if claimed:
        doc["claimed"] = claimed
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def verify_code_file(path) -> dict:
    """Full verification report for a code file (computed vs claimed parameters)."""
    cf = load_code_file(path)
    field = cf.field
    code = code_from_generators(field, cf.m, cf.generators)
    orbit_sizes = [len(_expand_orbit_bits(field, g.bits, cf.m)) for g in cf.generators]
    d = min_distance(code) if code.size >= 2 else None
    report = {
        "field": {"q": field.q, "n": field.n, "poly": list(field.poly)},
        "m": cf.m,
        "generators": len(cf.generators),
        "duplicate_generators": list(code.duplicate_generators),
        "orbit_sizes": orbit_sizes,
        "size": code.size,
        "dims": list(code.dims),
        "min_dist": d,
        "claimed": cf.claimed,
        "matches_claim": None,
        "bound": None,
        "optimal": None,
        "notes": [],
    }
    if code.duplicate_generators:
        report["notes"].append(
            "duplicate generators at indices %s: their orbits repeat earlier ones"
            % list(code.duplicate_generators))
    if code.constant_dimension and d is not None:
        k = code.dims[0]
        bound = etzion_vardy_bound(field.n, d, k, field.q)
        report["bound"] = bound
        report["optimal"] = code.size == bound
        if code.size > bound:
            report["notes"].append("size exceeds the packing bound: internal error")
    if cf.claimed:
        ok = True
        for key, computed in (("n", field.n), ("size", code.size), ("d", d)):
            if key in cf.claimed and cf.claimed[key] != computed:
                ok = False
                report["notes"].append(
                    f"claimed {key}={cf.claimed[key]} but computed {computed}")
        if "k" in cf.claimed:
            if not (code.constant_dimension and code.dims[0] == cf.claimed["k"]):
                ok = False
                report["notes"].append(
                    f"claimed k={cf.claimed['k']} but dims are {list(code.dims)}")
        report["matches_claim"] = ok
    return report
