"""Packed-bit sequences over {+, -} and the automorphisms acting on them.

A sequence X = (x_0, ..., x_{n-1}) with x_i in {+, -} is stored as one
Python integer: bit (n - 1 - i) holds position i, with 0 encoding '+' and
1 encoding '-'.  Under this layout the n-digit binary rendering of the
integer *is* the sequence read left to right, ascending integers agree
with lexicographic order on the '+' < '-' alphabet, and the componentwise
sign product is a single XOR.  The Hamming weight counts '+' signs, so
weight(X) = n - popcount(bits) and the identity (all '+') is the zero word.

The automorphisms used throughout:

    rotate(X, i)   position j of the result is x_{(j+i) mod n}
    reverse(X)     (x_{n-1}, ..., x_1, x_0)
    decimate(X, r) position i of the result is x_{ri mod n}, gcd(r, n) = 1
    negate(X)      every sign flipped
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidLength, LengthMismatch, NotCoprime

MAX_N = 256

_SIGN_TO_BIT = {"+": "0", "-": "1"}
_BIT_TO_SIGN = {"0": "+", "1": "-"}


def _check_length(n: int) -> None:
    if n < 1:
        raise InvalidLength(f"sequence length must be at least 1, got {n}")
    if n > MAX_N:
        raise InvalidLength(f"sequence length {n} exceeds the cap of {MAX_N}")


def rotate_bits(bits: int, n: int, i: int) -> int:
    """Left-rotate the position vector by i: result position j = x_{(j+i) mod n}."""
    i %= n
    if i == 0:
        return bits
    mask = (1 << n) - 1
    return ((bits << i) | (bits >> (n - i))) & mask


def reverse_bits(bits: int, n: int) -> int:
    return int(format(bits, f"0{n}b")[::-1], 2)


def decimate_bits(bits: int, n: int, r: int) -> int:
    out = 0
    for i in range(n):
        src = r * i % n
        out |= ((bits >> (n - 1 - src)) & 1) << (n - 1 - i)
    return out


@dataclass(frozen=True, order=True)
class BinarySequence:
    """An element of Z_2^n in the packed sign encoding.

    Immutable; every operation returns a fresh value, so instances are safe
    to share between worker processes without synchronization.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_length(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise InvalidLength(
                f"bits 0x{self.bits:x} do not fit in {self.n} positions"
            )

    @classmethod
    def from_signs(cls, signs: str | Iterable[str]) -> "BinarySequence":
        text = signs if isinstance(signs, str) else "".join(signs)
        if not text:
            raise InvalidLength("empty sign list")
        try:
            bits = int(text.translate(str.maketrans(_SIGN_TO_BIT)), 2)
        except ValueError:
            raise InvalidLength(f"signs must be '+' or '-', got {text!r}") from None
        return cls(len(text), bits)

    @classmethod
    def identity(cls, n: int) -> "BinarySequence":
        return cls(n, 0)

    def render(self) -> str:
        return format(self.bits, f"0{self.n}b").translate(str.maketrans(_BIT_TO_SIGN))

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return self.n

    def sign(self, i: int) -> str:
        return "-" if (self.bits >> (self.n - 1 - i)) & 1 else "+"

    @property
    def weight(self) -> int:
        """Number of '+' signs."""
        return self.n - self.bits.bit_count()

    def __mul__(self, other: "BinarySequence") -> "BinarySequence":
        if self.n != other.n:
            raise LengthMismatch(f"lengths differ: {self.n} vs {other.n}")
        return BinarySequence(self.n, self.bits ^ other.bits)

    def __neg__(self) -> "BinarySequence":
        return BinarySequence(self.n, self.bits ^ ((1 << self.n) - 1))

    def rotate(self, i: int) -> "BinarySequence":
        return BinarySequence(self.n, rotate_bits(self.bits, self.n, i))

    def reverse(self) -> "BinarySequence":
        return BinarySequence(self.n, reverse_bits(self.bits, self.n))

    def decimate(self, r: int) -> "BinarySequence":
        r %= self.n
        if math.gcd(r, self.n) != 1:
            raise NotCoprime(f"gcd({r}, {self.n}) != 1")
        return BinarySequence(self.n, decimate_bits(self.bits, self.n, r))


def make_sequence(signs: str | Iterable[str]) -> BinarySequence:
    return BinarySequence.from_signs(signs)


def weight(x: BinarySequence) -> int:
    return x.weight


def product(x: BinarySequence, y: BinarySequence) -> BinarySequence:
    return x * y


def rotate(x: BinarySequence, i: int) -> BinarySequence:
    return x.rotate(i)


def reverse(x: BinarySequence) -> BinarySequence:
    return x.reverse()


def decimate(x: BinarySequence, r: int) -> BinarySequence:
    return x.decimate(r)


def negate(x: BinarySequence) -> BinarySequence:
    return -x


def concat_blocks(blocks: Iterable[BinarySequence]) -> BinarySequence:
    """Concatenate equal-length blocks; block i occupies positions [i*d, (i+1)*d)."""
    blocks = list(blocks)
    if not blocks:
        raise InvalidLength("no blocks to concatenate")
    d = blocks[0].n
    bits = 0
    for block in blocks:
        if block.n != d:
            raise LengthMismatch(f"block lengths differ: {d} vs {block.n}")
        bits = (bits << d) | block.bits
    return BinarySequence(d * len(blocks), bits)


def units(n: int) -> tuple[int, ...]:
    """Multipliers coprime to n, the valid decimation parameters."""
    if n == 1:
        return (1,)
    return tuple(r for r in range(1, n) if math.gcd(r, n) == 1)


def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def all_sequences(n: int) -> Iterator[BinarySequence]:
    _check_length(n)
    for bits in range(1 << n):
        yield BinarySequence(n, bits)
