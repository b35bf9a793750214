"""Golay kernels, Turyn composition, and column-sign structure analysis.

Binary Golay complementary pairs (GCPs) exist at lengths 2^a * 10^b * 26^c.
They are generated here by iterating Turyn's composition over the three
primitive kernels of lengths 2, 10 and 26. When a pair is viewed as a 2 x N
matrix, each column either has identical signs (SAME) or opposite signs
(OPPOSITE); that column-sign profile is what the insertion constructions in
:mod:`zcpkit.zcp` exploit, so this module also predicts and verifies it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import BinarySequence, SequencePair, aacs_profile

__all__ = [
    "KernelId",
    "GcpRecipe",
    "Mark",
    "ColumnSignProfile",
    "KERNEL_SEGMENTS",
    "kernel",
    "turyn",
    "turyn_element",
    "build_gcp",
    "is_gcp",
    "column_sign_profile",
    "check_quadrature",
    "predicted_column_profile",
    "verify_block_structure",
    "c2_recipe",
    "c4_recipe",
]


class KernelId(enum.Enum):
    """The three admissible binary GCP kernels."""

    K2 = 2
    K10 = 10
    K26 = 26

    @property
    def length(self) -> int:
        return self.value

    def __str__(self) -> str:
        return self.name


_KERNEL_ROWS: dict[KernelId, tuple[str, str]] = {
    KernelId.K2: ("++", "+-"),
    KernelId.K10: ("++-+-+--++", "++-+++++--"),
    KernelId.K26: (
        "++++-++--+-+-+--+-+++--+++",
        "++++-++--+-+++++-+---++---",
    ),
}

# Column-sign runs of the length-10 and length-26 kernels: (start, run length)
# for the four alternating SAME/OPPOSITE/SAME/OPPOSITE blocks. These segments
# tile [0, N) and drive the four-segment profile predictions for pure kernel
# powers.
KERNEL_SEGMENTS: dict[KernelId, tuple[tuple[int, int], ...]] = {
    KernelId.K10: ((0, 4), (4, 1), (5, 1), (6, 4)),
    KernelId.K26: ((0, 12), (12, 1), (13, 1), (14, 12)),
}


def kernel(kid: KernelId) -> SequencePair:
    """Return the kernel pair for ``kid``."""
    first, second = _KERNEL_ROWS[kid]
    return SequencePair.from_signs(first, second)


@dataclass(frozen=True)
class GcpRecipe:
    """An iterated Turyn construction: a seed kernel plus composition steps.

    The resulting pair has length ``seed.length * prod(step.length)``, which
    always factors as 2^a * 10^b * 26^c.
    """

    seed: KernelId
    steps: tuple[KernelId, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        for st in self.steps:
            if not isinstance(st, KernelId):
                raise ValueError(f"recipe step must be a KernelId, got {st!r}")
        if not isinstance(self.seed, KernelId):
            raise ValueError(f"recipe seed must be a KernelId, got {self.seed!r}")

    @property
    def length(self) -> int:
        return self.seed.length * math.prod(st.length for st in self.steps)

    @property
    def kernels(self) -> tuple[KernelId, ...]:
        return (self.seed,) + self.steps

    def factor_counts(self) -> tuple[int, int, int]:
        """Counts (a, b, c) of K2, K10 and K26 factors, seed included."""
        ks = self.kernels
        return (
            sum(1 for k in ks if k is KernelId.K2),
            sum(1 for k in ks if k is KernelId.K10),
            sum(1 for k in ks if k is KernelId.K26),
        )

    @classmethod
    def parse(cls, text: str) -> "GcpRecipe":
        """Parse a product expression such as ``K2*K10*K26``.

        The leftmost factor is the seed; the remaining factors are applied as
        composition steps in order.
        """
        tokens = text.strip().split("*")
        ids = []
        for tok in tokens:
            tok = tok.strip()
            try:
                ids.append(KernelId[tok])
            except KeyError:
                raise ValueError(
                    f"invalid kernel {tok!r} in recipe {text!r} (expected K2, K10 or K26)"
                ) from None
        if not ids:
            raise ValueError("empty recipe")
        return cls(seed=ids[0], steps=tuple(ids[1:]))

    def __str__(self) -> str:
        return "*".join(k.name for k in self.kernels)


def _ordered_steps(
    required: dict[KernelId, int], steps: Sequence[KernelId] | None
) -> tuple[KernelId, ...]:
    if steps is None:
        out: list[KernelId] = []
        for kid in (KernelId.K2, KernelId.K10, KernelId.K26):
            out.extend([kid] * required[kid])
        return tuple(out)
    steps = tuple(steps)
    for kid in (KernelId.K2, KernelId.K10, KernelId.K26):
        if sum(1 for st in steps if st is kid) != required[kid]:
            raise ValueError(
                f"step order {steps!r} does not contain {required[kid]} x {kid.name}"
            )
    return steps


def c2_recipe(
    alpha: int, beta: int, gamma: int, steps: Sequence[KernelId] | None = None
) -> GcpRecipe:
    """K2-seeded recipe for length 2^alpha * 10^beta * 26^gamma (alpha >= 1).

    ``steps`` optionally fixes the order in which the remaining factors are
    applied; the default is K2 steps, then K10, then K26. Any order yields a
    valid pair whose first half-length columns have identical signs.
    """
    if alpha < 1 or beta < 0 or gamma < 0:
        raise ValueError("need alpha >= 1 and beta, gamma >= 0")
    required = {KernelId.K2: alpha - 1, KernelId.K10: beta, KernelId.K26: gamma}
    return GcpRecipe(KernelId.K2, _ordered_steps(required, steps))


def c4_recipe(beta: int, gamma: int, steps: Sequence[KernelId] | None = None) -> GcpRecipe:
    """K26-seeded recipe for length 10^beta * 26^gamma (gamma >= 1).

    These pairs carry the widest leading run of identical-sign columns
    achievable at lengths with no factor of 2, namely 12 * 26^(gamma-1) * 10^beta.
    """
    if gamma < 1 or beta < 0:
        raise ValueError("need gamma >= 1 and beta >= 0")
    required = {KernelId.K2: 0, KernelId.K10: beta, KernelId.K26: gamma - 1}
    return GcpRecipe(KernelId.K26, _ordered_steps(required, steps))


class Mark(enum.Enum):
    """Sign relation of one column of a 2 x N pair matrix."""

    SAME = "same"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class ColumnSignProfile:
    """Per-column SAME/OPPOSITE marking of a pair."""

    marks: tuple[Mark, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "marks", tuple(self.marks))

    @property
    def length(self) -> int:
        return len(self.marks)

    def leading_same_run(self) -> int:
        """Number of consecutive SAME columns at the start."""
        run = 0
        for m in self.marks:
            if m is not Mark.SAME:
                break
            run += 1
        return run

    def runs(self) -> tuple[tuple[Mark, int, int], ...]:
        """Maximal runs as (mark, start, length) triples, tiling [0, N)."""
        out: list[tuple[Mark, int, int]] = []
        start = 0
        for i in range(1, len(self.marks) + 1):
            if i == len(self.marks) or self.marks[i] is not self.marks[start]:
                out.append((self.marks[start], start, i - start))
                start = i
        return tuple(out)


def is_gcp(pair: SequencePair) -> bool:
    """True iff the autocorrelation sums vanish at every nonzero shift."""
    profile = aacs_profile(pair)
    return all(v == 0 for v in profile.values[1:])


def turyn(A: SequencePair, B: SequencePair) -> SequencePair:
    """Compose two GCPs into a GCP whose length is the product of theirs.

    With ``A = (a; b)`` of length N and ``B = (c; d)`` of length M, the output
    rows are built from Kronecker products of the half-sum and half-difference
    of A's rows::

        e = c (x) (a+b)/2  -  rev(d) (x) (b-a)/2
        f = d (x) (a+b)/2  +  rev(c) (x) (b-a)/2

    Both inputs are verified to be GCPs up front; the output inherits the
    property. Column ``i`` of B governs the signs of output columns
    ``i*N .. i*N + N - 1``: a SAME column of B expands to N SAME columns, an
    OPPOSITE column to N OPPOSITE ones.
    """
    if not is_gcp(A):
        raise ValueError("first argument is not a Golay complementary pair")
    if not is_gcp(B):
        raise ValueError("second argument is not a Golay complementary pair")
    a = A.first.to_array()
    b = A.second.to_array()
    c = B.first.to_array()
    d = B.second.to_array()
    half_sum = (a + b) // 2
    half_diff = (b - a) // 2
    e = np.kron(c, half_sum) - np.kron(d[::-1], half_diff)
    f = np.kron(d, half_sum) + np.kron(c[::-1], half_diff)
    return SequencePair(
        BinarySequence(tuple(int(v) for v in e)),
        BinarySequence(tuple(int(v) for v in f)),
    )


def turyn_element(A: SequencePair, B: SequencePair, i: int) -> tuple[int, int]:
    """Element ``i`` of ``turyn(A, B)`` from the closed form, without composing.

    Index ``i`` splits as ``k = i // N`` (the column of B) and ``j = i mod N``
    (the column of A). Inputs are assumed to be GCPs; this is O(1) per call.
    """
    n = A.length
    m = B.length
    if not 0 <= i < n * m:
        raise ValueError(f"index {i} out of range [0, {n * m})")
    j, k = i % n, i // n
    a, b = A.first[j], A.second[j]
    c, d = B.first[k], B.second[k]
    c_mirror = B.first[m - 1 - k]
    d_mirror = B.second[m - 1 - k]
    e = (a * (c + d_mirror) + b * (c - d_mirror)) // 2
    f = (a * (d - c_mirror) + b * (d + c_mirror)) // 2
    return (e, f)


def build_gcp(recipe: GcpRecipe) -> SequencePair:
    """Fold the Turyn composition over ``recipe``.

    Starts from the seed kernel; each step composes the step kernel (as the
    first argument) with the accumulated pair (as the second).
    """
    acc = kernel(recipe.seed)
    for st in recipe.steps:
        acc = turyn(kernel(st), acc)
    return acc


def column_sign_profile(pair: SequencePair) -> ColumnSignProfile:
    """SAME/OPPOSITE mark for each column of ``pair``."""
    return ColumnSignProfile(
        tuple(
            Mark.SAME if x == y else Mark.OPPOSITE
            for x, y in zip(pair.first, pair.second)
        )
    )


def check_quadrature(pair: SequencePair) -> bool:
    """Check the column complementarity every binary GCP satisfies.

    For each i in the first half, ``a_i + a_{N-1-i} + b_i + b_{N-1-i}`` must be
    +2 or -2; equivalently column i is SAME exactly when column N-1-i is
    OPPOSITE. Non-GCP pairs generally fail this.
    """
    a, b = pair.first, pair.second
    n = pair.length
    return all(
        abs(a[i] + a[n - 1 - i] + b[i] + b[n - 1 - i]) == 2 for i in range(n // 2)
    )


def _expand_marks(marks: Iterable[Mark], factor: int) -> tuple[Mark, ...]:
    return tuple(m for m in marks for _ in range(factor))


def predicted_column_profile(recipe: GcpRecipe) -> ColumnSignProfile:
    """Predicted column-sign profile of ``build_gcp(recipe)``.

    Each composition step replicates every column mark of the inner pair into
    a block of the step kernel's length, so the final profile is the seed
    kernel's profile expanded by the product of the step lengths.
    """
    seed_marks = column_sign_profile(kernel(recipe.seed)).marks
    factor = math.prod(st.length for st in recipe.steps)
    return ColumnSignProfile(_expand_marks(seed_marks, factor))


def verify_block_structure(pair: SequencePair, recipe: GcpRecipe) -> bool:
    """Verify the column-sign structure of a recipe-built pair.

    Checks, in order:

    1. every composition step expands the inner profile block-wise by the
       step kernel's length;
    2. for a K2 seed, the first half of the columns are all SAME;
    3. for a K26 seed with K10/K26 steps, the first ``12 * (N / 26)`` columns
       are all SAME (and for a K10 seed, the first ``4 * (N / 10)``);
    4. for pure kernel powers, the whole profile equals the kernel's segment
       table scaled by ``N / kernel_length``.

    Raises ``ValueError`` if ``pair`` is not the pair the recipe builds.
    """
    if pair != build_gcp(recipe):
        raise ValueError("pair does not match the given recipe")

    acc = kernel(recipe.seed)
    marks = column_sign_profile(acc).marks
    for st in recipe.steps:
        acc = turyn(kernel(st), acc)
        expanded = column_sign_profile(acc).marks
        if expanded != _expand_marks(marks, st.length):
            return False
        marks = expanded

    n = pair.length
    factor = n // recipe.seed.length
    lead = {KernelId.K2: n // 2, KernelId.K10: 4 * factor, KernelId.K26: 12 * factor}
    run = ColumnSignProfile(marks).leading_same_run()
    if run < lead[recipe.seed]:
        return False

    if recipe.seed in KERNEL_SEGMENTS and all(st is recipe.seed for st in recipe.steps):
        scale = factor
        expected: list[Mark] = []
        for idx, (start, width) in enumerate(KERNEL_SEGMENTS[recipe.seed]):
            mark = Mark.SAME if idx % 2 == 0 else Mark.OPPOSITE
            if start * scale != len(expected):
                return False
            expected.extend([mark] * (width * scale))
        if tuple(expected) != marks:
            return False

    return marks == predicted_column_profile(recipe).marks
