"""Hadamard matrices built from sign sequences.

A sign matrix of order m is Hadamard when every pair of rows disagrees
in exactly m/2 positions.  The circulant matrix of a sequence X has
row i equal to X shifted right by i, and is Hadamard exactly when the
off-peak autocorrelation of X vanishes; that pins the weight a of X to
(2a - n)^2 = n, so candidates exist only at square orders.

Beyond direct search, three structural arguments exclude whole families
of first rows: sequences partitioned into equal-weight blocks (plainly
or with alternating signs), the reversal-paired shapes (A, RA) and
(A, -RA), and circulant-core borders whose core would need a
non-integral block weight.  Each argument is packaged as a verdict with
the arithmetic certificate spelled out, plus a desk-scale exhaustive
search that confirms the verdict by enumeration.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from .autocorr import flat_offpeak
from .errors import (
    InvalidCore,
    InvalidCoreOrder,
    InvalidLength,
    InvalidWeight,
    NotHadamard,
    ScaleExceeded,
    TheoremViolation,
)
from .sequences import (
    BinarySequence,
    make_sequence,
    reverse_bits,
    rotate_bits,
    units,
)
from .ssets import CompleteSSet, complete_maximal
from .weight_ring import class_members_bits

NORMALIZE_MAX_M = 24
BRUTEFORCE_MAX_N = 16
ENUM_MAX_CANDIDATES = 10**7

VERDICT_EXCLUDED = "excluded-by-parity"
VERDICT_OPEN = "not-excluded"

PARTITION_KINDS = ("plain", "alt", "sym", "asym")


# ----------------------------------------------------------- sign matrix

@dataclass(frozen=True)
class SignMatrix:
    """A square matrix of signs, one packed integer per row."""

    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InvalidLength(f"order must be positive, got {self.m}")
        if len(self.rows) != self.m:
            raise InvalidLength(f"expected {self.m} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < 1 << self.m:
                raise InvalidLength(f"row {r:#x} does not fit order {self.m}")

    @classmethod
    def from_rows(cls, rows) -> "SignMatrix":
        seqs = [make_sequence(r) if isinstance(r, str) else r for r in rows]
        m = len(seqs)
        for s in seqs:
            if s.n != m:
                raise InvalidLength(f"row length {s.n} in a {m}-row matrix")
        return cls(m, tuple(s.bits for s in seqs))

    @classmethod
    def from_text(cls, text: str) -> "SignMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise InvalidLength("empty matrix text")
        return cls.from_rows(lines)

    def row(self, i: int) -> BinarySequence:
        return BinarySequence(self.m, self.rows[i])

    def render(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.m))

    def __str__(self) -> str:
        return self.render()

    # Equivalence moves: all preserve the Hadamard property.

    def negate_row(self, i: int) -> "SignMatrix":
        mask = (1 << self.m) - 1
        rows = list(self.rows)
        rows[i] ^= mask
        return SignMatrix(self.m, tuple(rows))

    def negate_column(self, j: int) -> "SignMatrix":
        bit = 1 << (self.m - 1 - j)
        return SignMatrix(self.m, tuple(r ^ bit for r in self.rows))

    def swap_rows(self, i: int, j: int) -> "SignMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return SignMatrix(self.m, tuple(rows))

    def swap_columns(self, i: int, j: int) -> "SignMatrix":
        bi, bj = self.m - 1 - i, self.m - 1 - j
        rows = []
        for r in self.rows:
            vi, vj = (r >> bi) & 1, (r >> bj) & 1
            if vi != vj:
                r ^= (1 << bi) | (1 << bj)
            rows.append(r)
        return SignMatrix(self.m, tuple(rows))

    def transpose(self) -> "SignMatrix":
        rows = []
        for j in range(self.m):
            bits = 0
            for i in range(self.m):
                if (self.rows[i] >> (self.m - 1 - j)) & 1:
                    bits |= 1 << (self.m - 1 - i)
            rows.append(bits)
        return SignMatrix(self.m, tuple(rows))


def is_hadamard(mat: SignMatrix) -> bool:
    """Every pair of rows disagrees in exactly m/2 positions."""
    m = mat.m
    if m == 1:
        return True
    if m % 2:
        return False
    half = m // 2
    rows = mat.rows
    return all(
        (rows[i] ^ rows[j]).bit_count() == half
        for i in range(m)
        for j in range(i + 1, m)
    )


def circulant(x: BinarySequence) -> SignMatrix:
    """Row i holds X shifted right by i: entry (i, j) is x_{(j-i) mod n}."""
    n = x.n
    return SignMatrix(n, tuple(rotate_bits(x.bits, n, (n - i) % n) for i in range(n)))


BUILTIN_H12 = SignMatrix.from_rows(
    [
        "+-----------",
        "++-+---+++-+",
        "+++-+---+++-",
        "+-++-+---+++",
        "++-++-+---++",
        "+++-++-+---+",
        "++++-++-+---",
        "+-+++-++-+--",
        "+--+++-++-+-",
        "+---+++-++-+",
        "++---+++-++-",
        "+-+---+++-++",
    ]
)


# ------------------------------------------------- weight normalization

@dataclass(frozen=True)
class ContainmentReport:
    """How a Hadamard matrix was pushed into a maximal complete S-set by
    column negations: the sign vector used, the row weights afterwards,
    and the member set that contains them."""

    m: int
    target_weight: int
    signs: str
    row_weights: tuple[int, ...]
    sset_members: tuple[int, ...]
    sset_parity: str
    already_contained: bool
    scanned: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "target_weight": self.target_weight,
            "signs": self.signs,
            "row_weights": list(self.row_weights),
            "sset_members": list(self.sset_members),
            "sset_parity": self.sset_parity,
            "already_contained": self.already_contained,
            "scanned": self.scanned,
        }


def normalize_into_complete(
    mat: SignMatrix, chunk: int = 1 << 18
) -> tuple[SignMatrix, ContainmentReport]:
    """Negate a column subset so that every row weight lands inside one
    maximal complete S-set.

    Tries the even-member set first, scanning sign vectors in ascending
    packed order, and falls back to the odd-member set only when no even
    containment exists; within a pass the first working vector wins, so
    the result is deterministic and the identity vector is preferred when
    the matrix is already contained.  Exhausting both passes raises
    TheoremViolation.
    """
    m = mat.m
    if not is_hadamard(mat):
        raise NotHadamard(f"matrix of order {m} is not Hadamard")
    if m % 4:
        raise InvalidLength(f"order {m} is not a multiple of 4")
    if m > NORMALIZE_MAX_M:
        raise ScaleExceeded(f"sign scan capped at order {NORMALIZE_MAX_M}")
    flavours: list[CompleteSSet] = complete_maximal(m)
    rows = np.array(mat.rows, dtype=np.uint64)
    scanned = 0
    for flavour in flavours:
        tab = np.zeros(m + 1, dtype=bool)
        for w in flavour.members:
            tab[w] = True
        for start in range(0, 1 << m, chunk):
            ts = np.arange(start, min(start + chunk, 1 << m), dtype=np.uint64)
            weights = m - np.bitwise_count(ts[:, None] ^ rows[None, :]).astype(
                np.int64
            )
            hit = tab[weights].all(axis=1)
            if not hit.any():
                scanned += ts.size
                continue
            idx = int(np.argmax(hit))
            t = int(ts[idx])
            normalized = SignMatrix(m, tuple(r ^ t for r in mat.rows))
            report = ContainmentReport(
                m=m,
                target_weight=flavour.a,
                signs=str(BinarySequence(m, t)),
                row_weights=tuple(int(w) for w in weights[idx]),
                sset_members=flavour.members,
                sset_parity=flavour.parity,
                already_contained=t == 0,
                scanned=scanned + idx + 1,
            )
            return normalized, report
    raise TheoremViolation(
        f"no column sign vector puts order-{m} row weights in a complete maximal S-set"
    )


# ------------------------------------------------------ circulant search

def circulant_feasible_weights(n: int) -> tuple[int, ...]:
    """Weights a with (2a - n)^2 = n, the only ones a circulant Hadamard
    first row can have."""
    return tuple(a for a in range(n + 1) if (2 * a - n) ** 2 == n)


@dataclass(frozen=True)
class SearchResult:
    order: int
    feasible_weights: tuple[int, ...]
    found: tuple[str, ...]
    candidates_tested: int
    runtime_ms: int
    workers: int

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "feasible_weights": list(self.feasible_weights),
            "found": list(self.found),
            "candidates_tested": self.candidates_tested,
            "runtime_ms": self.runtime_ms,
            "workers": self.workers,
        }

    def found_orbits(self):
        from .orbits import classify

        return [classify(make_sequence(s)) for s in self.found]


def _gosper_next(v: int) -> int:
    c = v & -v
    r = v + c
    return r | (((v ^ r) >> 2) // c)


def _unrank_colex(rank: int, k: int) -> int:
    """The rank-th smallest integer with k bits set (rank 0 first)."""
    bits = 0
    for i in range(k, 0, -1):
        b = i - 1
        while comb(b + 1, i) <= rank:
            b += 1
        bits |= 1 << b
        rank -= comb(b, i)
    return bits


def _scan_shard(args: tuple[int, int, int, int]) -> tuple[int, list[int]]:
    """Test candidates of one popcount in colex rank range [lo, hi)."""
    n, pc, lo, hi = args
    mask = (1 << n) - 1
    half = n // 2
    hits: list[int] = []
    count = hi - lo
    v = _unrank_colex(lo, pc) if pc else 0
    for _ in range(count):
        ok = True
        for k in range(1, half + 1):
            rot = ((v << k) | (v >> (n - k))) & mask
            if 2 * (v ^ rot).bit_count() != n:
                ok = False
                break
        if ok:
            hits.append(min(rotate_bits(v, n, i) for i in range(n)))
        if pc:
            v = _gosper_next(v)
    return count, hits


def search_circulant_hadamard(
    n: int, workers: int = 1, max_candidates: int = 10**8
) -> SearchResult:
    """Exhaust all candidate first rows of circulant Hadamard matrices of
    one order, returning the orbit representatives found.

    Only the feasible weights are enumerated, with an early-exit
    autocorrelation test per candidate; the candidate stream of each
    weight is split into contiguous colex rank ranges across workers, so
    the outcome is identical for any worker count.
    """
    if n < 1 or (n > 2 and n % 4):
        raise InvalidLength(f"circulant Hadamard order must be 1, 2, or 4k, got {n}")
    t0 = time.perf_counter()
    workers = max(1, workers or 1)
    feasible = circulant_feasible_weights(n)
    total = sum(comb(n, n - a) for a in feasible)
    if total > max_candidates:
        raise ScaleExceeded(
            f"{total} candidates at order {n} exceed the cap {max_candidates}"
        )
    jobs = []
    for a in feasible:
        pc = n - a
        cnt = comb(n, pc)
        shards = min(workers, cnt)
        cuts = [cnt * s // shards for s in range(shards + 1)]
        jobs += [(n, pc, cuts[s], cuts[s + 1]) for s in range(shards)]
    if workers == 1:
        results = [_scan_shard(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_shard, jobs))
    tested = sum(c for c, _ in results)
    found = sorted({b for _, hs in results for b in hs})
    return SearchResult(
        order=n,
        feasible_weights=feasible,
        found=tuple(str(BinarySequence(n, b)) for b in found),
        candidates_tested=tested,
        runtime_ms=int((time.perf_counter() - t0) * 1000),
        workers=workers,
    )


def search_circulant_bruteforce(n: int) -> tuple[str, ...]:
    """Oracle for the pruned search: test every one of the 2^n sequences
    with no weight filter and no early exit."""
    if n > BRUTEFORCE_MAX_N:
        raise ScaleExceeded(f"bruteforce capped at n <= {BRUTEFORCE_MAX_N}")
    found = set()
    for v in range(1 << n):
        if is_hadamard(circulant(BinarySequence(n, v))):
            found.add(min(rotate_bits(v, n, i) for i in range(n)))
    return tuple(str(BinarySequence(n, b)) for b in sorted(found))


# -------------------------------------------------- structural verdicts

@dataclass(frozen=True)
class StructureVerdict:
    """Outcome of one non-existence argument, with the arithmetic that
    justifies it spelled out in the certificate."""

    n: int
    r: int
    a: int | None
    kind: str
    order: int
    verdict: str
    certificate: dict

    @property
    def excluded(self) -> bool:
        return self.verdict == VERDICT_EXCLUDED

    def as_dict(self) -> dict:
        return {
            "parameters": {"n": self.n, "r": self.r, "a": self.a},
            "kind": self.kind,
            "order": self.order,
            "verdict": self.verdict,
            "certificate": self.certificate,
        }


def partition_parity_verdict(n: int, r: int, a: int, kind: str) -> StructureVerdict:
    """Can a circulant Hadamard first row of order 4nr be built from 2r
    blocks of length 2n and weight a, arranged plainly ("plain"), with
    alternating signs ("alt"), or as the reversal pairs (A, RA) ("sym") /
    (A, -RA) ("asym")?

    The order-4nr Hadamard condition fixes the weight of X * C^{2n} X at
    2rn, which pins the total block overlap sum(h_i) to r(2a - n) while
    each h_i can only range over [max(0, 2a-2n), a]; for the reversal
    pairs additionally h_1 = h_2, making the sum even.  The verdict is
    "excluded-by-parity" exactly when the pinned sum is unreachable.
    """
    if kind not in PARTITION_KINDS:
        raise ValueError(f"kind must be one of {PARTITION_KINDS}, got {kind!r}")
    if n < 1 or r < 1:
        raise ValueError(f"n and r must be positive, got n={n} r={r}")
    block = 2 * n
    if not 0 <= a <= block:
        raise InvalidWeight(f"block weight {a} outside [0, {block}]")
    if kind in ("sym", "asym") and r != 1:
        raise ValueError(f"kind {kind!r} pairs one block with its reversal; needs r=1")
    blocks = 2 * r
    order = 4 * n * r
    lo, hi = max(0, 2 * (a - n)), a
    forced = r * (2 * a - n)
    paired = kind in ("sym", "asym")
    reachable = blocks * lo <= forced <= blocks * hi and (
        not paired or forced % 2 == 0
    )
    certificate = {
        "order": order,
        "block_length": block,
        "blocks": blocks,
        "block_weight": a,
        "overlap_range": [lo, hi],
        "forced_overlap_sum": forced,
        "reachable_sums": [blocks * lo, blocks * hi],
        "identity": (
            "weight(X * shift(X, 2n)) = 2rn forces sum(h_i) = r(2a - n)"
            if kind in ("plain", "sym")
            else "weight(X * shift(X, 2n)) = 4ar - 2 sum(h_i) forces sum(h_i) = r(2a - n)"
        ),
    }
    if paired:
        certificate["paired_overlaps"] = "h_1 = h_2, so the sum is even"
        certificate["forced_sum_parity"] = "odd" if forced % 2 else "even"
    else:
        # The two stated parity cases ask sum(h_i) to differ from nr mod 2,
        # but the forced value r(2a - n) is always congruent to nr mod 2, so
        # for genuine blocks the case split never fires; the reachability of
        # the forced sum is the operative test.
        certificate["stated_parity_clause"] = {
            "requires": "sum(h_i) incongruent to nr mod 2",
            "forced_sum_mod_2": forced % 2,
            "nr_mod_2": (n * r) % 2,
            "satisfiable": False,
        }
    return StructureVerdict(
        n=n,
        r=r,
        a=a,
        kind=kind,
        order=order,
        verdict=VERDICT_OPEN if reachable else VERDICT_EXCLUDED,
        certificate=certificate,
    )


def core_partition_verdict(n: int, r: int) -> StructureVerdict:
    """Can the circulant core of a bordered Hadamard matrix, core length
    nr with nr = 3 mod 4, be split into r blocks of equal weight?

    The border forces core weight (nr - 1)/2, so each block would need
    weight (nr - 1)/(2r); since r divides nr, it divides nr - 1 only for
    r = 1, and every r >= 2 is excluded.
    """
    p = n * r
    if p % 4 != 3:
        raise InvalidCoreOrder(f"core length {p} is not 3 mod 4")
    core_weight = (p - 1) // 2
    divisible = (p - 1) % (2 * r) == 0
    certificate = {
        "core_length": p,
        "block_length": n,
        "blocks": r,
        "required_core_weight": core_weight,
        "required_block_weight_numerator": p - 1,
        "required_block_weight_denominator": 2 * r,
        "block_weight_integral": divisible,
    }
    return StructureVerdict(
        n=n,
        r=r,
        a=None,
        kind="core",
        order=p + 1,
        verdict=VERDICT_OPEN if divisible else VERDICT_EXCLUDED,
        certificate=certificate,
    )


# ---------------------------------------------- exhaustive confirmations

def _concat_blocks(blocks: tuple[int, ...], width: int) -> int:
    bits = 0
    for b in blocks:
        bits = (bits << width) | b
    return bits


def exhaustive_structured_search(n: int, r: int, a: int, kind: str) -> dict:
    """Enumerate every structured candidate at desk scale and test it
    outright, confirming (or refuting) the corresponding verdict."""
    v = partition_parity_verdict(n, r, a, kind)
    block = 2 * n
    order = 4 * n * r
    members = list(class_members_bits(block, a))
    if kind in ("plain", "alt"):
        total = len(members) ** (2 * r)
    else:
        total = len(members)
    if total > ENUM_MAX_CANDIDATES:
        raise ScaleExceeded(f"{total} structured candidates exceed the cap")
    mask = (1 << block) - 1
    hits = []
    candidates = 0
    if kind in ("plain", "alt"):
        for tup in product(members, repeat=2 * r):
            if kind == "alt":
                tup = tuple(b if i % 2 == 0 else b ^ mask for i, b in enumerate(tup))
            bits = _concat_blocks(tup, block)
            candidates += 1
            if flat_offpeak(BinarySequence(order, bits)):
                hits.append(str(BinarySequence(order, bits)))
    else:
        for b in members:
            rb = reverse_bits(b, block)
            if kind == "asym":
                rb ^= mask
            bits = _concat_blocks((b, rb), block)
            candidates += 1
            if flat_offpeak(BinarySequence(order, bits)):
                hits.append(str(BinarySequence(order, bits)))
    return {
        "n": n,
        "r": r,
        "a": a,
        "kind": kind,
        "order": order,
        "verdict": v.verdict,
        "candidates": candidates,
        "hits": hits,
        "consistent": not (v.excluded and hits),
    }


def exhaustive_core_partition_search(n: int, r: int) -> dict:
    """Enumerate every uniform-weight block partition of a circulant core
    and test whether its border is Hadamard."""
    v = core_partition_verdict(n, r)
    p = n * r
    total = sum(comb(n, a) ** r for a in range(n + 1))
    if total > ENUM_MAX_CANDIDATES:
        raise ScaleExceeded(f"{total} core candidates exceed the cap")
    need = (p - 1) // 2
    hits = []
    candidates = 0
    for a in range(n + 1):
        members = list(class_members_bits(n, a))
        for tup in product(members, repeat=r):
            bits = _concat_blocks(tup, n)
            candidates += 1
            core = BinarySequence(p, bits)
            if core.weight == need and flat_offpeak(core, -1):
                hits.append(str(core))
    return {
        "n": n,
        "r": r,
        "core_length": p,
        "verdict": v.verdict,
        "candidates": candidates,
        "hits": hits,
        "consistent": not (v.excluded and hits),
    }


# -------------------------------------------------------- cores, borders

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def paley_core(p: int) -> BinarySequence:
    """The quadratic-residue core: '-' at position 0, '+' exactly at the
    nonzero squares mod p.  Needs p prime with p = 3 mod 4; then the core
    has weight (p - 1)/2 and off-peak autocorrelation constantly -1."""
    if p % 4 != 3 or not _is_prime(p):
        raise InvalidCoreOrder(f"need a prime equal to 3 mod 4, got {p}")
    qr = {pow(i, 2, p) for i in range(1, p)}
    return make_sequence("".join("+" if j in qr else "-" for j in range(p)))


def border_core(core: BinarySequence) -> SignMatrix:
    """Border a valid circulant core with an all-'+' row and column.

    The core must have weight (p - 1)/2 and off-peak autocorrelation -1;
    those two facts are exactly the orthogonality of the result.
    """
    p = core.n
    if core.weight != (p - 1) // 2 or p % 2 == 0:
        raise InvalidCore(
            f"core weight {core.weight} at length {p}, need {(p - 1) // 2} at odd length"
        )
    if not flat_offpeak(core, -1):
        raise InvalidCore("core off-peak autocorrelation is not constantly -1")
    rows = [0]
    for i in range(1, p + 1):
        rows.append(rotate_bits(core.bits, p, (p - (i - 1)) % p))
    return SignMatrix(p + 1, tuple(rows))


def delta_invariance_of_core(core: BinarySequence) -> tuple[int, ...]:
    """All multipliers r for which some rotation of the core is fixed by
    the decimation by r.  For quadratic-residue cores this contains every
    nonzero square mod p, since those decimations fix the core outright."""
    p = core.n
    rots = [rotate_bits(core.bits, p, i) for i in range(p)]
    out = []
    for r in units(p):
        perm = [(r * j) % p for j in range(p)]
        for t in rots:
            img = 0
            for j in range(p):
                if (t >> (p - 1 - perm[j])) & 1:
                    img |= 1 << (p - 1 - j)
            if img == t:
                out.append(r)
                break
    return tuple(out)
