"""Periodic autocorrelation of sign sequences.

For a length-n sign sequence X the periodic autocorrelation at shift k
is P_X(k) = sum_j X_j X_{j+k} with indices mod n, which in packed form
is n - 2 popcount(X xor rotate(X, k)).  The whole vector theta(X) =
(P_X(0), ..., P_X(n-1)) is invariant under rotation, reversal, and
negation, is permuted by decimations via P_{d_r X}(i) = P_X(ri), and
always sums to (2a - n)^2 where a is the weight of X.
"""

from __future__ import annotations

from dataclasses import dataclass
import random

import numpy as np

from .errors import LengthMismatch, ScaleExceeded
from .sequences import BinarySequence, rotate_bits, units
from .orbits import (
    _perm_decimate,
    _perm_reverse,
    permute_bits_array,
    rotate_bits_array,
)

VERIFY_MAX_N = 16


def periodic_correlation(x: BinarySequence, y: BinarySequence, k: int) -> int:
    """P_{X,Y}(k) = sum_j X_j Y_{j+k}, indices mod n."""
    if x.n != y.n:
        raise LengthMismatch(f"lengths differ: {x.n} vs {y.n}")
    k %= x.n
    return x.n - 2 * (x.bits ^ rotate_bits(y.bits, y.n, k)).bit_count()


def periodic_autocorrelation(x: BinarySequence, k: int) -> int:
    return periodic_correlation(x, x, k)


@dataclass(frozen=True)
class AutocorrVector:
    """A full autocorrelation vector with its unconditional invariants
    enforced: peak n at shift 0, the symmetry P(k) = P(n-k), and for even
    n the congruence P(k) = n mod 4 at every shift."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        if self.values[0] != self.n:
            raise ValueError(f"peak must equal n={self.n}, got {self.values[0]}")
        for k in range(1, self.n):
            if self.values[k] != self.values[self.n - k]:
                raise ValueError(f"symmetry broken at shift {k}")
            if self.n % 2 == 0 and (self.n - self.values[k]) % 4:
                raise ValueError(f"value at shift {k} not congruent to n mod 4")

    def __getitem__(self, k: int) -> int:
        return self.values[k % self.n]

    def offpeak(self) -> tuple[int, ...]:
        return self.values[1:]


def theta(x: BinarySequence) -> AutocorrVector:
    return AutocorrVector(
        x.n, tuple(periodic_autocorrelation(x, k) for k in range(x.n))
    )


def cross_theta(x: BinarySequence, y: BinarySequence) -> tuple[int, ...]:
    return tuple(periodic_correlation(x, y, k) for k in range(x.n))


def flat_offpeak(x: BinarySequence, level: int = 0) -> bool:
    """True iff P_X(k) = level for every k != 0.

    P(k) = level needs popcount(X xor rotate(X,k)) = (n - level)/2, so a
    parity or range miss rules the whole question out immediately; the
    symmetry P(k) = P(n-k) halves the scan.
    """
    n = x.n
    if (n - level) % 2:
        return False
    target = (n - level) // 2
    if not 0 <= target <= n:
        return False
    for k in range(1, n // 2 + 1):
        if (x.bits ^ rotate_bits(x.bits, n, k)).bit_count() != target:
            return False
    return True


def sum_identity(x: BinarySequence) -> dict:
    """sum_k P_X(k) = (2a - n)^2 for X of weight a."""
    a = x.weight
    total = sum(periodic_autocorrelation(x, k) for k in range(x.n))
    expected = (2 * a - x.n) ** 2
    return {"n": x.n, "weight": a, "sum": total, "expected": expected,
            "ok": total == expected}


def cross_sum_identity(x: BinarySequence, y: BinarySequence) -> dict:
    """sum_k P_{X,Y}(k) = (2a - n)(2b - n) for weights a, b."""
    a, b = x.weight, y.weight
    total = sum(periodic_correlation(x, y, k) for k in range(x.n))
    expected = (2 * a - x.n) * (2 * b - x.n)
    return {"n": x.n, "weights": (a, b), "sum": total, "expected": expected,
            "ok": total == expected}


def decimation_permutes(x: BinarySequence, r: int) -> bool:
    """P_{d_r X}(i) = P_X(ri mod n)."""
    t = theta(x).values
    dx = x.decimate(r)
    return all(
        periodic_autocorrelation(dx, i) == t[(r * i) % x.n] for i in range(x.n)
    )


def autocorrelation_array(n: int, arr: np.ndarray, k: int) -> np.ndarray:
    """P at one shift for a whole array of packed sequences."""
    a = arr.astype(np.uint64, copy=False)
    return n - 2 * np.bitwise_count(a ^ rotate_bits_array(a, n, k)).astype(np.int64)


def verify_identities(n: int, max_violations: int = 10) -> dict:
    """Exhaustively check every identity over all 2^n sequences.

    Covers: peak value, shift symmetry, the mod-4 congruence of n - P(k)
    (recorded at every n, even and odd alike), the sum identity, the
    bound P(k) = n - 4a + 4 i_k with 0 <= i_k <= a, and invariance under
    rotation, reversal, negation, and every decimation.
    """
    if n > VERIFY_MAX_N:
        raise ScaleExceeded(f"exhaustive sweep capped at n <= {VERIFY_MAX_N}")
    x = np.arange(1 << n, dtype=np.uint64)
    weights = (n - np.bitwise_count(x)).astype(np.int64)
    table = np.stack([autocorrelation_array(n, x, k) for k in range(n)])
    violations: list[dict] = []

    def record(kind: str, mask: np.ndarray, **extra):
        for i in np.nonzero(mask)[0][:max_violations]:
            violations.append(
                {"kind": kind, "x": str(BinarySequence(n, int(x[i]))), **extra}
            )

    record("peak", table[0] != n)
    for k in range(1, n):
        record("symmetry", table[k] != table[n - k], k=k)
        record("mod4", (n - table[k]) % 4 != 0, k=k)
        num = table[k] - n + 4 * weights
        record("ik_range", (num % 4 != 0) | (num < 0) | (num // 4 > weights), k=k)
    record("sum", table.sum(axis=0) != (2 * weights - n) ** 2)

    transforms = [
        ("rotation", rotate_bits_array(x, n, 1), lambda k: k),
        ("reversal", permute_bits_array(x, n, _perm_reverse(n)), lambda k: k),
        ("negation", x ^ np.uint64((1 << n) - 1), lambda k: k),
    ]
    for r in units(n):
        if r != 1:
            transforms.append(
                ("decimation", permute_bits_array(x, n, _perm_decimate(n, r)),
                 lambda k, r=r: (r * k) % n)
            )
    for name, tx, shift in transforms:
        for k in range(n):
            record(name, autocorrelation_array(n, tx, k) != table[shift(k)], k=k)

    return {"n": n, "checked": 1 << n, "violations": violations,
            "ok": not violations}


def random_identity_trials(n: int, trials: int = 1000, seed: int = 0) -> dict:
    """Seeded random spot checks of the same identities at lengths too
    large to sweep."""
    rng = random.Random(seed)
    mults = units(n)
    violations = []
    for t in range(trials):
        x = BinarySequence(n, rng.getrandbits(n))
        y = BinarySequence(n, rng.getrandbits(n))
        vec = theta(x)  # peak, symmetry, and even-n mod 4 enforced here
        if sum(vec.values) != (2 * x.weight - n) ** 2:
            violations.append({"kind": "sum", "trial": t})
        if not cross_sum_identity(x, y)["ok"]:
            violations.append({"kind": "cross_sum", "trial": t})
        k = rng.randrange(1, n)
        if periodic_autocorrelation(x.rotate(1), k) != vec[k]:
            violations.append({"kind": "rotation", "trial": t, "k": k})
        if periodic_autocorrelation(x.reverse(), k) != vec[k]:
            violations.append({"kind": "reversal", "trial": t, "k": k})
        if periodic_autocorrelation(-x, k) != vec[k]:
            violations.append({"kind": "negation", "trial": t, "k": k})
        r = rng.choice(mults)
        if not decimation_permutes(x, r):
            violations.append({"kind": "decimation", "trial": t, "r": r})
    return {"n": n, "trials": trials, "seed": seed, "violations": violations,
            "ok": not violations}
