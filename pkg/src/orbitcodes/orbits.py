"""Enumeration and classification of cyclic and m-quasi-cyclic orbits.

The multiplicative group acts on subspaces by rotation of their
characteristic bitsets.  Cyclic (m=1) orbits are enumerated once per
(field, k) by walking only the subspaces that contain gamma^0 (every orbit
has such a member) and deduplicating against the members of orbits already
seen.  An m-quasi census is then derived without re-enumeration: a cyclic
orbit of length D splits into g = gcd(m, D) quasi orbits of length D/g,
all sharing the same internal minimum distance profile.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field as dc_field
from math import gcd

from .codes import gaussian_coefficient
from .errors import BadModulus, ResourceLimit, VerificationFailed
from .gfext import FieldSpec, make_field
from .subspace import (
    Subspace,
    dimension_from_popcount,
    from_bits,
    full_space,
    rotate_bits,
    zero_subspace,
)


@dataclass(frozen=True)
class Orbit:
    """One m-quasi orbit: canonical representative plus derived parameters."""

    field: FieldSpec
    m: int
    rep: Subspace
    length: int
    k: int
    min_dist: int
    stab_degree: int


@dataclass
class RunBudget:
    """Work limits for enumeration; exceeded budgets raise ResourceLimit."""

    max_seconds: float | None = None
    max_candidates: int | None = None

    def start(self):
        return _BudgetClock(self)


class _BudgetClock:
    def __init__(self, budget: RunBudget):
        self.budget = budget
        self.t0 = time.monotonic()
        self.candidates = 0

    def tick(self, n: int = 1):
        self.candidates += n
        b = self.budget
        if b.max_candidates is not None and self.candidates > b.max_candidates:
            raise ResourceLimit(f"candidate budget {b.max_candidates} exceeded")
        if b.max_seconds is not None and (self.candidates & 0x3FF) == 0:
            if time.monotonic() - self.t0 > b.max_seconds:
                raise ResourceLimit(f"time budget {b.max_seconds}s exceeded")


def divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# -- candidate enumeration -----------------------------------------------------


def _iter_candidates(field: FieldSpec, k: int):
    """Bitsets of all k-dim subspaces containing gamma^0, each exactly once.

    Subspaces containing a fixed nonzero vector v correspond to the
    (k-1)-subspaces of the quotient by v; with v = 1 = (1,0,...,0) in the
    polynomial basis the quotient is coordinates 1..n-1, so we enumerate
    RREF (k-1) x (n-1) matrices and adjoin v.
    """
    n, q = field.n, field.q
    if k == 0 or k > n:
        return
    if k == n:
        yield (1 << field.group_order) - 1
        return
    log = field.log
    if q == 2:
        for rows in _iter_rref_gf2(n - 1, k - 1):
            # lift quotient rows to coords 1..n-1 and adjoin the vector 1
            elts = [0, 1]
            for r in rows:
                b = r << 1
                elts += [e ^ b for e in elts]
            bits = 0
            for p in elts:
                if p:
                    bits |= 1 << log[p]
            yield bits
    else:
        from .subspace import _bits_from_packed, _span_packed
        for rows in _iter_rref_generic(n - 1, k - 1, q):
            basis = [1] + [field.pack_coords([0] + list(r)) for r in rows]
            yield _bits_from_packed(field, _span_packed(field, basis))


def _iter_rref_gf2(ncols: int, nrows: int):
    """All RREF matrices over GF(2), rows as ints (bit i = column i)."""
    if nrows == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(ncols), nrows):
        pivot_set = set(pivots)
        free = [(i, c) for i in range(nrows)
                for c in range(pivots[i] + 1, ncols) if c not in pivot_set]
        base = tuple(1 << p for p in pivots)
        nfree = len(free)
        for mask in range(1 << nfree):
            rows = list(base)
            mm = mask
            for (i, c) in free:
                if mm & 1:
                    rows[i] |= 1 << c
                mm >>= 1
            yield rows


def _iter_rref_generic(ncols: int, nrows: int, q: int):
    """All RREF matrices over F_q, rows as digit tuples."""
    if nrows == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(ncols), nrows):
        pivot_set = set(pivots)
        free = [(i, c) for i in range(nrows)
                for c in range(pivots[i] + 1, ncols) if c not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * ncols for _ in range(nrows)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield [tuple(r) for r in rows]


# -- cyclic orbit data ----------------------------------------------------------


@dataclass
class CyclicOrbitRecord:
    """Raw m=1 orbit data from which every quasi census is derived."""

    rep_bits: int
    length: int          # D, the cyclic orbit length
    stab_degree: int     # t with D = (q^n-1)/(q^t-1)
    min_by_class: dict   # gcd(j, D) -> min distance d(V, gamma^j V) over that class

    def min_dist_for_step(self, g: int) -> int:
        """Internal minimum distance of a quasi orbit stepping by g (g | D)."""
        if g >= self.length:
            return 0
        return min(v for c, v in self.min_by_class.items() if c % g == 0)


def _stabilizer_degree_bits(field: FieldSpec, bits: int) -> int:
    N, q = field.group_order, field.q
    for t in sorted(divisors(field.n), reverse=True):
        if rotate_bits(bits, N // (q ** t - 1), N) == bits:
            return t
    raise AssertionError("t=1 always stabilizes")  # pragma: no cover


def _process_orbit(field: FieldSpec, k: int, bits: int, visited: set) -> CyclicOrbitRecord:
    """Walk one cyclic orbit: mark members containing gamma^0, collect distances."""
    N, q = field.group_order, field.q
    t = _stabilizer_degree_bits(field, bits)
    D = N // (q ** t - 1)
    min_by_class = {}
    rep = bits
    cur = bits
    two_k = 2 * k
    if q == 2:
        for j in range(1, D):
            cur = ((cur << 1) | (cur >> (N - 1))) & ((1 << N) - 1)
            if cur & 1:
                visited.add(cur)
            if cur < rep:
                rep = cur
            d = two_k - 2 * ((bits & cur).bit_count() + 1).bit_length() + 2
            c = gcd(j, D)
            if d < min_by_class.get(c, two_k + 1):
                min_by_class[c] = d
    else:
        for j in range(1, D):
            cur = rotate_bits(cur, 1, N)
            if cur & 1:
                visited.add(cur)
            if cur < rep:
                rep = cur
            w = dimension_from_popcount((bits & cur).bit_count(), q)
            d = two_k - 2 * w
            c = gcd(j, D)
            if d < min_by_class.get(c, two_k + 1):
                min_by_class[c] = d
    return CyclicOrbitRecord(rep, D, t, min_by_class)


_CYCLIC_CACHE: dict = {}


def cyclic_orbit_data(field: FieldSpec, k: int, budget: RunBudget | None = None,
                      checkpoint=None, use_cache: bool = True) -> list:
    """All m=1 orbit records for G_q(n,k), deterministic order."""
    key = (field, k)
    if use_cache and budget is None and key in _CYCLIC_CACHE:
        return _CYCLIC_CACHE[key]
    clock = (budget or RunBudget()).start()
    records = []
    visited = set()
    skip_below = 0
    if checkpoint is not None:
        records, skip_below = checkpoint.load(field, k, visited)
    for idx, bits in enumerate(_iter_candidates(field, k)):
        if idx < skip_below:
            continue
        clock.tick()
        if bits in visited:
            continue
        rec = _process_orbit(field, k, bits, visited)
        records.append(rec)
        if checkpoint is not None:
            checkpoint.record(field, k, idx, rec)
    if checkpoint is not None:
        checkpoint.flush()
    if use_cache:
        _CYCLIC_CACHE[key] = records
    return records


class Checkpoint:
    """Append-only JSONL checkpoint for long enumerations (n=10 scale)."""

    def __init__(self, path, flush_every: int = 256):
        self.path = path
        self.flush_every = flush_every
        self._buf = []

    def load(self, field: FieldSpec, k: int, visited: set):
        records, last_idx = [], -1
        try:
            fh = open(self.path)
        except FileNotFoundError:
            return records, 0
        with fh:
            for line in fh:
                rec = json.loads(line)
                if rec.get("k") != k or rec.get("n") != field.n or rec.get("q") != field.q:
                    continue
                r = CyclicOrbitRecord(
                    int(rec["rep_bits"], 16), rec["length"], rec["stab_degree"],
                    {int(c): d for c, d in rec["min_by_class"].items()})
                records.append(r)
                last_idx = max(last_idx, rec["cand"])
                # re-mark every member containing gamma^0 as visited
                N = field.group_order
                cur = r.rep_bits
                for _ in range(r.length):
                    if cur & 1:
                        visited.add(cur)
                    cur = rotate_bits(cur, 1, N)
        return records, last_idx + 1

    def record(self, field: FieldSpec, k: int, cand_idx: int, rec: CyclicOrbitRecord):
        self._buf.append(json.dumps({
            "q": field.q, "n": field.n, "k": k, "cand": cand_idx,
            "rep_bits": format(rec.rep_bits, "x"), "length": rec.length,
            "stab_degree": rec.stab_degree,
            "min_by_class": {str(c): d for c, d in rec.min_by_class.items()},
        }))
        if len(self._buf) >= self.flush_every:
            self.flush()

    def flush(self):
        if not self._buf:
            return
        with open(self.path, "a") as fh:
            fh.write("\n".join(self._buf) + "\n")
        self._buf = []


# -- public operations -----------------------------------------------------------


def stabilizer_degree(V: Subspace) -> int:
    """Largest t | n whose subfield multiplicative group fixes V."""
    return _stabilizer_degree_bits(V.field, V.bits)


def orbit_of(V: Subspace, m: int = 1) -> Orbit:
    """The m-quasi orbit of V."""
    field = V.field
    N = field.group_order
    if m < 1 or N % m != 0:
        raise BadModulus(f"m={m} does not divide {N}")
    t = stabilizer_degree(V)
    D = N // (field.q ** t - 1)
    g = gcd(m, D)
    L = D // g
    # smallest l >= 1 with shift(V, l*m) = V -- sanity-check the formula
    rep_bits = V.bits
    cur = V.bits
    best = V.bits
    md = 2 * V.dim + 1
    for j in range(1, L):
        cur = rotate_bits(cur, m, N)
        if cur < best:
            best = cur
        w = dimension_from_popcount((V.bits & cur).bit_count(), field.q)
        md = min(md, 2 * V.dim - 2 * w)
    if rotate_bits(cur, m, N) != V.bits:
        raise VerificationFailed("orbit length formula disagrees with iteration")
    if L == 1:
        md = 0
    return Orbit(field, m, from_bits(field, best), L, V.dim, md, t)


def orbit_min_distance(O: Orbit) -> int:
    """Minimum distance within the orbit (0 for singletons)."""
    return O.min_dist


def orbit_members(O: Orbit) -> list:
    """All subspaces of the orbit, starting at the representative."""
    N = O.field.group_order
    out = []
    cur = O.rep.bits
    for _ in range(O.length):
        out.append(from_bits(O.field, cur))
        cur = rotate_bits(cur, O.m, N)
    return out


def enumerate_orbits(field: FieldSpec, k: int, m: int = 1,
                     budget: RunBudget | None = None, checkpoint=None):
    """Yield every m-quasi orbit of G_q(n,k) exactly once."""
    N = field.group_order
    if m < 1 or N % m != 0:
        raise BadModulus(f"m={m} does not divide {N}")
    if k == 0:
        yield Orbit(field, m, zero_subspace(field), 1, 0, 0, field.n)
        return
    if k == field.n:
        yield Orbit(field, m, full_space(field), 1, field.n, 0, field.n)
        return
    records = cyclic_orbit_data(field, k, budget=budget, checkpoint=checkpoint)
    for rec in records:
        g = gcd(m, rec.length)
        L = rec.length // g
        md = rec.min_dist_for_step(g)
        if g == 1:
            yield Orbit(field, m, from_bits(field, rec.rep_bits), L, k, md,
                        rec.stab_degree)
            continue
        rots = [rec.rep_bits]
        cur = rec.rep_bits
        for _ in range(rec.length - 1):
            cur = rotate_bits(cur, 1, N)
            rots.append(cur)
        for s in range(g):
            rep = min(rots[(s + j * g) % rec.length] for j in range(L))
            yield Orbit(field, m, from_bits(field, rep), L, k, md,
                        rec.stab_degree)


# -- census ---------------------------------------------------------------------


@dataclass
class CensusTable:
    """Aggregated orbit counts for one (q, n, k, m), keyed by (length, min_dist)."""

    q: int
    n: int
    k: int
    m: int
    counts: dict                      # (length, min_dist) -> number of orbits
    diffs: list = dc_field(default_factory=list)   # vs the embedded reference tables

    @property
    def full_length(self) -> int:
        return (self.q ** self.n - 1) // (self.m * (self.q - 1))

    @property
    def mass(self) -> int:
        return sum(length * c for (length, _), c in self.counts.items())

    @property
    def expected_mass(self) -> int:
        return gaussian_coefficient(self.n, self.k, self.q)

    def total_orbits(self) -> int:
        return sum(self.counts.values())

    def by_distance(self, length=None) -> dict:
        out = {}
        for (ln, d), c in self.counts.items():
            if length is None or ln == length:
                out[d] = out.get(d, 0) + c
        return out

    def lengths(self) -> list:
        return sorted({ln for (ln, _) in self.counts}, reverse=True)


def classify(field: FieldSpec, k: int, m: int = 1,
             budget: RunBudget | None = None, checkpoint=None) -> CensusTable:
    """Census of all m-quasi orbits of G_q(n,k); the mass check is enforced."""
    N = field.group_order
    if m < 1 or N % m != 0:
        raise BadModulus(f"m={m} does not divide {N}")
    counts = {}
    if k == 0 or k == field.n:
        counts[(1, 0)] = 1
    else:
        for rec in cyclic_orbit_data(field, k, budget=budget, checkpoint=checkpoint):
            g = gcd(m, rec.length)
            key = (rec.length // g, rec.min_dist_for_step(g))
            counts[key] = counts.get(key, 0) + g
    table = CensusTable(field.q, field.n, k, m, counts)
    if table.mass != table.expected_mass:
        raise VerificationFailed(
            f"mass check failed for (q={field.q}, n={field.n}, k={k}, m={m}): "
            f"{table.mass} != {table.expected_mass}")
    from .reference_tables import compare_census
    table.diffs = compare_census(table)
    return table


# -- length-law and conjecture checks ---------------------------------------------


@dataclass
class ConjectureVerdict:
    """Existence of a full-length orbit at distance >= 2k-2 for (n, k)."""

    n: int
    k: int
    applicable: bool          # the statement is posed for k < n/2
    satisfied: bool
    full_length_count_at_target: int

    @property
    def target_distance(self) -> int:
        return 2 * self.k - 2


def conjecture_check(field: FieldSpec, k: int,
                     budget: RunBudget | None = None) -> ConjectureVerdict:
    table = classify(field, k, 1, budget=budget)
    target = 2 * k - 2
    full = field.group_order // (field.q - 1)
    count = sum(c for (ln, d), c in table.counts.items()
                if ln == full and d >= target)
    return ConjectureVerdict(field.n, k, k < field.n / 2, count > 0, count)


def quasi_length_formula(field: FieldSpec, t: int, m: int) -> int:
    """Orbit length D/gcd(m, D) with D = (q^n-1)/(q^t-1)."""
    D = field.group_order // (field.q ** t - 1)
    return D // gcd(m, D)


def naive_orbit_length(V: Subspace, m: int) -> int:
    """Brute-force least l >= 1 with shift(V, l*m) = V."""
    N = V.field.group_order
    cur = rotate_bits(V.bits, m, N)
    l = 1
    while cur != V.bits:
        cur = rotate_bits(cur, m, N)
        l += 1
    return l


# -- orbit database ---------------------------------------------------------------


def write_orbit_db(orbits, path) -> int:
    """Write orbits as line-delimited JSON; returns the number of records."""
    count = 0
    with open(path, "w") as fh:
        for o in orbits:
            fh.write(json.dumps({
                "q": o.field.q, "n": o.field.n, "poly": list(o.field.poly),
                "m": o.m, "k": o.k, "length": o.length,
                "min_dist": o.min_dist, "stab_degree": o.stab_degree,
                "rep": list(o.rep.exponents),
            }) + "\n")
            count += 1
    return count


def read_orbit_db(path, field: FieldSpec | None = None) -> list:
    """Read an orbit database; all records must share one field spec."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if field is None:
                field = make_field(rec["q"], rec["n"], rec["poly"])
            bits = 0
            for e in rec["rep"]:
                bits |= 1 << e
            rep = from_bits(field, bits)
            out.append(Orbit(field, rec["m"], rep, rec["length"], rec["k"],
                             rec["min_dist"], rec["stab_degree"]))
    return out
