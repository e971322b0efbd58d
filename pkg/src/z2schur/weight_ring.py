"""The weight-class ring of Z_2^n under the full symmetric group.

The basic sets are the weight classes G_n(k): all sequences with exactly k
plus signs, of size binomial(n, k).  Their simple-quantity products carry
integer structure constants with a closed form, and the set-level product
of two classes is a two-branch interval formula.  Both closed forms are
paired here with brute-force oracles that recompute them from raw XOR
enumeration, so every identity in this module is independently checkable.

Index conventions.  The closed structure-constant form is stated in the
complement indexing T_i = G_n(n - i); the public helpers speak weights and
convert at the boundary.  G_n(-1) denotes the empty class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .errors import InvalidWeight, RingAxiomViolation, ScaleExceeded
from .sequences import BinarySequence

ORACLE_MAX_N = 14

_popcount = np.bitwise_count


def _binom0(m: int, t: int) -> int:
    return comb(m, t) if 0 <= t <= m else 0


def _check_weight(n: int, k: int) -> None:
    if not -1 <= k <= n:
        raise InvalidWeight(f"weight {k} outside [-1, {n}]")


def class_size(n: int, k: int) -> int:
    _check_weight(n, k)
    return 0 if k == -1 else comb(n, k)


def class_members_bits(n: int, k: int) -> Iterator[int]:
    """Packed members of G_n(k) in ascending integer order (Gosper's hack).

    Ascending packed order is lexicographic order on the sign strings.
    """
    _check_weight(n, k)
    if k == -1:
        return
    m = n - k  # number of '-' signs, i.e. set bits
    if m == 0:
        yield 0
        return
    v = (1 << m) - 1
    limit = 1 << n
    while v < limit:
        yield v
        low = v & -v
        ripple = v + low
        v = ripple | (((v ^ ripple) >> 2) // low)


def class_members(n: int, k: int) -> Iterator[BinarySequence]:
    for bits in class_members_bits(n, k):
        yield BinarySequence(n, bits)


def class_members_recursive(n: int, k: int) -> Iterator[BinarySequence]:
    """Members via the prefix decomposition G_n(k) = +G_{n-1}(k-1) | -G_{n-1}(k).

    Independent of the Gosper stream; used to cross-check it.
    """
    _check_weight(n, k)

    def rec(n: int, k: int) -> Iterator[int]:
        if k < 0 or k > n:
            return
        if n == 0:
            yield 0
            return
        for tail in rec(n - 1, k - 1):
            yield tail  # '+' prefix, top bit 0
        for tail in rec(n - 1, k):
            yield (1 << (n - 1)) | tail  # '-' prefix
    for bits in rec(n, k):
        yield BinarySequence(n, bits)


def class_members_array(n: int, k: int) -> np.ndarray:
    _check_weight(n, k)
    if k == -1:
        return np.empty(0, dtype=np.uint64)
    x = np.arange(1 << n, dtype=np.uint64)
    return x[_popcount(x) == n - k]


@dataclass(frozen=True)
class WeightClass:
    n: int
    k: int

    def __post_init__(self) -> None:
        _check_weight(self.n, self.k)

    @property
    def size(self) -> int:
        return class_size(self.n, self.k)

    def members(self) -> Iterator[BinarySequence]:
        return class_members(self.n, self.k)

    def __contains__(self, x: BinarySequence) -> bool:
        return x.n == self.n and x.weight == self.k


@dataclass(frozen=True, eq=False)
class WeightClassSet:
    """A union of weight classes: the S-set currency of the ring.

    Compares equal to any iterable with the same weights, so results can
    be checked against plain sets directly.
    """

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        for k in self.members:
            if not 0 <= k <= self.n:
                raise InvalidWeight(f"weight {k} outside [0, {self.n}]")

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightClassSet):
            return self.n == other.n and self.members == other.members
        try:
            return self.members == frozenset(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    @classmethod
    def of(cls, n: int, weights) -> "WeightClassSet":
        return cls(n, frozenset(weights))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, k: int) -> bool:
        return k in self.members

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class QuantityVector:
    """Integer coefficient per weight class: a simple-quantity multiset."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise InvalidWeight(
                f"need {self.n + 1} coefficients, got {len(self.coeffs)}"
            )

    def support(self) -> WeightClassSet:
        return WeightClassSet.of(
            self.n, (k for k, c in enumerate(self.coeffs) if c)
        )

    @property
    def mass(self) -> int:
        """Total multiset size: sum of coeff[k] * |G_n(k)|."""
        return sum(c * comb(self.n, k) for k, c in enumerate(self.coeffs))


def structure_constant_closed(n: int, i: int, j: int, k: int) -> int:
    """Multiplicity of T_k in T_i * T_j, where T_i = G_n(n - i).

    Zero when i + j - k is odd; otherwise
    binomial(k, (j - i + k) / 2) * binomial(n - k, (j + i - k) / 2).
    """
    for idx in (i, j, k):
        if not 0 <= idx <= n:
            raise InvalidWeight(f"index {idx} outside [0, {n}]")
    if (i + j - k) % 2:
        return 0
    return _binom0(k, (j - i + k) // 2) * _binom0(n - k, (j + i - k) // 2)


def product_multiplicity_table(n: int, a: int, b: int) -> QuantityVector:
    """Brute-force multiset G_n(a) * G_n(b) as per-class multiplicities.

    Every member of a touched weight class must appear the same number of
    times; a non-uniform count raises RingAxiomViolation since it can only
    come from an indexing bug, never from the ring itself.
    """
    if n > ORACLE_MAX_N:
        raise ScaleExceeded(f"oracle capped at n <= {ORACLE_MAX_N}, got {n}")
    xs = class_members_array(n, a)
    ys = class_members_array(n, b)
    if xs.size == 0 or ys.size == 0:
        return QuantityVector(n, (0,) * (n + 1))
    prods = (xs[:, None] ^ ys[None, :]).ravel()
    counts_by_value = np.bincount(prods.astype(np.int64), minlength=1 << n)
    all_bits = np.arange(1 << n, dtype=np.uint64)
    weights = n - _popcount(all_bits)
    coeffs = [0] * (n + 1)
    for w in range(n + 1):
        cell = counts_by_value[weights == w]
        if cell.size == 0:
            continue
        lo, hi = int(cell.min()), int(cell.max())
        if lo != hi:
            raise RingAxiomViolation(
                f"nonuniform multiplicity on G_{n}({w}) in G_{n}({a})*G_{n}({b}):"
                f" min {lo}, max {hi}"
            )
        coeffs[w] = lo
    return QuantityVector(n, tuple(coeffs))


def structure_constant_oracle(n: int, i: int, j: int, k: int) -> int:
    """lambda_{i,j,k} recomputed by enumeration, in the T_i = G_n(n-i) indexing."""
    table = product_multiplicity_table(n, n - i, n - j)
    return table.coeffs[n - k]


def class_product(n: int, a: int, b: int) -> WeightClassSet:
    """Weights appearing in G_n(a) * G_n(b), via the two-branch closed form.

    Branch I covers a <= floor(n/2), a <= b <= n - a; branch II covers
    a >= floor(n/2) + 1, n - a <= b <= a.  Inputs outside both are routed
    through commutativity and the complement identity
    G_n(a) G_n(b) = G_n(n-a) G_n(n-b), which always lands in a branch.
    """
    for w in (a, b):
        if not 0 <= w <= n:
            raise InvalidWeight(f"weight {w} outside [0, {n}]")
    half = n // 2
    for aa, bb in ((a, b), (b, a), (n - a, n - b), (n - b, n - a)):
        if aa <= half and aa <= bb <= n - aa:
            return WeightClassSet.of(n, (n - aa - bb + 2 * i for i in range(aa + 1)))
        if aa >= half + 1 and n - aa <= bb <= aa:
            return WeightClassSet.of(
                n, (aa + bb - n + 2 * i for i in range(n - aa + 1))
            )
    raise AssertionError(f"branch routing failed for n={n}, a={a}, b={b}")


def class_product_oracle(n: int, a: int, b: int) -> WeightClassSet:
    """Weights in G_n(a) * G_n(b) by direct enumeration of all member pairs."""
    if n > ORACLE_MAX_N:
        raise ScaleExceeded(f"oracle capped at n <= {ORACLE_MAX_N}, got {n}")
    xs = class_members_array(n, a)
    ys = class_members_array(n, b)
    if xs.size == 0 or ys.size == 0:
        return WeightClassSet.of(n, ())
    w = n - _popcount(xs[:, None] ^ ys[None, :])
    return WeightClassSet.of(n, np.unique(w).tolist())


def even_odd_unions(n: int) -> tuple[WeightClassSet, WeightClassSet]:
    evens = WeightClassSet.of(n, range(0, n + 1, 2))
    odds = WeightClassSet.of(n, range(1, n + 1, 2))
    return evens, odds


def is_sgroup(n: int, s: WeightClassSet | frozenset[int] | set[int]) -> bool:
    """True iff the union of the classes contains the identity and is
    closed under the group product.

    The identity (all '+') has weight n, so membership of n is what puts
    the identity inside the union.
    """
    members = s.members if isinstance(s, WeightClassSet) else frozenset(s)
    if n not in members:
        return False
    return all(
        class_product(n, a, b).members <= members
        for a in members
        for b in members
        if a <= b
    )


def verify_ring(n: int, check_lambda: bool = True) -> dict:
    """Cross-check the closed forms against the oracles at a single n.

    Returns a report dict with product_ok / lambda_ok flags and explicit
    counterexamples (empty on success).  The lambda sweep is cubic in n on
    top of the 4^n enumeration, so it can be switched off for large n.
    """
    counterexamples = []
    for a in range(n + 1):
        for b in range(a, n + 1):
            got = class_product(n, a, b).sorted()
            want = class_product_oracle(n, a, b).sorted()
            if got != want:
                counterexamples.append(
                    {"kind": "product", "a": a, "b": b,
                     "closed": list(got), "oracle": list(want)}
                )
    product_ok = not counterexamples
    lambda_ok = None
    if check_lambda:
        lambda_ok = True
        for i in range(n + 1):
            for j in range(i, n + 1):
                table = product_multiplicity_table(n, n - i, n - j)
                for k in range(n + 1):
                    got_l = structure_constant_closed(n, i, j, k)
                    want_l = table.coeffs[n - k]
                    if got_l != want_l:
                        lambda_ok = False
                        counterexamples.append(
                            {"kind": "lambda", "i": i, "j": j, "k": k,
                             "closed": got_l, "oracle": want_l}
                        )
    evens, odds = even_odd_unions(n)
    report = {
        "n": n,
        "product_ok": product_ok,
        "lambda_ok": lambda_ok,
        "counterexamples": counterexamples,
        "even_union_sgroup": is_sgroup(n, evens),
        "odd_union_sgroup": is_sgroup(n, odds),
    }
    if n % 2:
        # For odd n the odd-weight union contains the identity (weight n)
        # and closes under product, so it really is an S-subgroup.
        report["odd_union_note"] = (
            "weights count '+' signs, so the identity has weight n and the "
            "odd union is product-closed for odd n"
        )
    return report
