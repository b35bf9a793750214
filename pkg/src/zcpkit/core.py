"""Sequence primitives and exact aperiodic correlation arithmetic.

Everything here operates on sequences over the alphabet {+1, -1} and uses
integer arithmetic only; no floating point is involved anywhere. Values are
immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

__all__ = [
    "MAX_LENGTH",
    "BinarySequence",
    "SequencePair",
    "CorrelationProfile",
    "cross_correlation",
    "aacf",
    "aacs_profile",
    "insert",
    "delete",
    "reverse",
    "negate",
    "concat",
    "kronecker",
    "format_sequence",
    "format_pair",
    "parse_sequence",
    "parse_pair",
    "parse_pairs",
]

# Correlation sums fit in int64 with huge margin at this cap, so the numpy
# fast path is exact.
MAX_LENGTH = 1 << 20

_CHAR_TO_SIGN = {"+": 1, "-": -1}
_SIGN_TO_CHAR = {1: "+", -1: "-"}


def check_sign(value: int) -> int:
    """Validate that ``value`` is a sign, returning it as a plain int."""
    if value == 1 or value == -1:
        return int(value)
    raise ValueError(f"expected a sign in {{+1, -1}}, got {value!r}")


@dataclass(frozen=True)
class BinarySequence:
    """An immutable, non-empty sequence of +1/-1 symbols."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(int(x) for x in self.elements)
        if len(elems) == 0:
            raise ValueError("binary sequence must have length >= 1")
        if len(elems) > MAX_LENGTH:
            raise ValueError(f"sequence length {len(elems)} exceeds cap {MAX_LENGTH}")
        for x in elems:
            if x != 1 and x != -1:
                raise ValueError(f"sequence elements must be +1 or -1, got {x!r}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_signs(cls, text: str) -> "BinarySequence":
        """Build from a string of '+' and '-' characters."""
        return parse_sequence(text)

    def to_array(self) -> np.ndarray:
        """Return the elements as an int64 numpy array."""
        return np.asarray(self.elements, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BinarySequence(self.elements[index])
        return self.elements[index]

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class SequencePair:
    """An ordered pair of equal-length binary sequences (a 2 x N matrix)."""

    first: BinarySequence
    second: BinarySequence

    def __post_init__(self) -> None:
        if len(self.first) != len(self.second):
            raise ValueError(
                f"pair rows must have equal length, got {len(self.first)} and {len(self.second)}"
            )

    @classmethod
    def from_signs(cls, first: str, second: str) -> "SequencePair":
        return cls(parse_sequence(first), parse_sequence(second))

    @property
    def length(self) -> int:
        return len(self.first)

    def column(self, i: int) -> tuple[int, int]:
        return (self.first[i], self.second[i])

    def __str__(self) -> str:
        return format_pair(self)


@dataclass(frozen=True)
class CorrelationProfile:
    """Autocorrelation-sum values of a pair, indexed by shift 0..N-1.

    ``values[tau]`` holds the exact integer sum of the two rows'
    aperiodic autocorrelations at shift ``tau``.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("profile must cover at least shift 0")
        n = len(vals)
        if vals[0] != 2 * n:
            raise ValueError(f"in-phase value must be 2N = {2 * n}, got {vals[0]}")
        for tau, v in enumerate(vals):
            if abs(v) > 2 * (n - tau):
                raise ValueError(f"|value| at shift {tau} exceeds bound {2 * (n - tau)}")
        object.__setattr__(self, "values", vals)

    @property
    def length(self) -> int:
        return len(self.values)

    def magnitudes(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.values)

    def __getitem__(self, tau: int) -> int:
        return self.values[tau]


def cross_correlation(a: BinarySequence, b: BinarySequence, tau: int) -> int:
    """Aperiodic cross-correlation of equal-length sequences at shift ``tau``.

    For ``tau >= 0`` this is ``sum(a[k] * b[k + tau])`` over the overlap;
    negative shifts delegate to the mirrored positive shift, and any shift
    with ``|tau| >= N`` is zero. The result is a plain exact integer.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError(f"length mismatch: {n} vs {len(b)}")
    t = int(tau)
    if abs(t) >= n:
        return 0
    if t < 0:
        return cross_correlation(b, a, -t)
    ea, eb = a.elements, b.elements
    return sum(ea[k] * eb[k + t] for k in range(n - t))


def aacf(a: BinarySequence, tau: int) -> int:
    """Aperiodic autocorrelation of ``a`` at shift ``tau`` (0 <= tau < N)."""
    if not 0 <= tau < len(a):
        raise ValueError(f"shift {tau} out of range [0, {len(a)})")
    return cross_correlation(a, a, tau)


def _autocorrelation_vector(arr: np.ndarray) -> np.ndarray:
    # Positive-shift half of the full aperiodic autocorrelation, taus 0..N-1.
    return np.correlate(arr, arr, mode="full")[len(arr) - 1 :]


def aacs_profile(pair: SequencePair) -> CorrelationProfile:
    """Autocorrelation-sum profile of ``pair`` for shifts 0..N-1."""
    total = _autocorrelation_vector(pair.first.to_array()) + _autocorrelation_vector(
        pair.second.to_array()
    )
    return CorrelationProfile(tuple(int(v) for v in total))


def insert(a: BinarySequence, r: int, x: int) -> BinarySequence:
    """Place symbol ``x`` at position ``r`` (0 <= r <= N), lengthening by one."""
    if not 0 <= r <= len(a):
        raise ValueError(f"insertion index {r} out of range [0, {len(a)}]")
    x = check_sign(x)
    e = a.elements
    return BinarySequence(e[:r] + (x,) + e[r:])


def delete(a: BinarySequence, r: int) -> BinarySequence:
    """Remove the element at position ``r``; inverse of :func:`insert`."""
    if not 0 <= r < len(a):
        raise ValueError(f"deletion index {r} out of range [0, {len(a)})")
    if len(a) == 1:
        raise ValueError("cannot delete from a length-1 sequence")
    e = a.elements
    return BinarySequence(e[:r] + e[r + 1 :])


def reverse(a: BinarySequence) -> BinarySequence:
    return BinarySequence(a.elements[::-1])


def negate(a: BinarySequence) -> BinarySequence:
    return BinarySequence(tuple(-x for x in a.elements))


def concat(a: BinarySequence, b: BinarySequence) -> BinarySequence:
    return BinarySequence(a.elements + b.elements)


def kronecker(a: BinarySequence, b: BinarySequence) -> BinarySequence:
    """Kronecker product: element ``i*len(b) + j`` equals ``a[i] * b[j]``."""
    return BinarySequence(tuple(ai * bj for ai in a.elements for bj in b.elements))


def format_sequence(a: BinarySequence) -> str:
    return "".join(_SIGN_TO_CHAR[x] for x in a.elements)


def format_pair(pair: SequencePair) -> str:
    """Two text lines, one row per line, with a trailing newline."""
    return f"{format_sequence(pair.first)}\n{format_sequence(pair.second)}\n"


def parse_sequence(text: str) -> BinarySequence:
    """Parse a '+'/'-' string; any other character is rejected."""
    signs = []
    for ch in text:
        sign = _CHAR_TO_SIGN.get(ch)
        if sign is None:
            raise ValueError(f"invalid sequence character {ch!r} (only '+' and '-' allowed)")
        signs.append(sign)
    return BinarySequence(tuple(signs))


def _sequence_lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # allow exactly one trailing newline
    return lines


def parse_pair(text: str) -> SequencePair:
    """Parse a pair from two consecutive text lines."""
    lines = _sequence_lines(text)
    if len(lines) != 2:
        raise ValueError(f"expected exactly 2 sequence lines, got {len(lines)}")
    return SequencePair(parse_sequence(lines[0]), parse_sequence(lines[1]))


def parse_pairs(text: str) -> list[SequencePair]:
    """Parse consecutive line pairs from ``text``."""
    lines = _sequence_lines(text)
    if len(lines) % 2 != 0:
        raise ValueError(f"expected an even number of sequence lines, got {len(lines)}")
    return [
        SequencePair(parse_sequence(lines[i]), parse_sequence(lines[i + 1]))
        for i in range(0, len(lines), 2)
    ]
