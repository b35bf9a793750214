"""Insertion-based odd-length binary Z-complementary pairs (OB-ZCPs).

A Z-complementary pair has vanishing autocorrelation sums over a contiguous
zone of shifts rather than everywhere. Inserting one extra symbol into each
row of a GCP of length ``2^a * 10^b * 26^c`` produces odd-length pairs whose
exact magnitude profile is predictable from the GCP's column-sign structure;
this module builds those pairs, predicts their profiles segment by segment,
verifies prediction against measurement, and classifies arbitrary pairs.

Type-I pairs have their zero zone at small shifts (next to the in-phase
peak); Type-II pairs have it at large shifts (next to the end). An odd-length
pair is Z-optimal when its zone width reaches the maximum (N+1)/2, and
optimal when additionally every out-of-zone magnitude equals the floor
value 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    BinarySequence,
    SequencePair,
    aacs_profile,
    check_sign,
    cross_correlation,
    insert,
)
from .golay import GcpRecipe, KernelId, build_gcp, is_gcp

__all__ = [
    "ZcpType",
    "Position",
    "InsertionSpec",
    "ZcpReport",
    "ProfileSegment",
    "PredictedProfile",
    "UnsupportedConstructionError",
    "VerificationError",
    "classify",
    "front_insertion_sum",
    "end_insertion_sum",
    "inserted_aacf",
    "apply_insertion",
    "predicted_profile",
    "construct_obzcp",
    "measure_insertion",
    "middle_pair_identities",
]


class ZcpType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


class Position(enum.Enum):
    """Insertion position: the front, the end, or the exact middle."""

    FRONT = "front"
    END = "end"
    MIDDLE = "middle"


@dataclass(frozen=True)
class InsertionSpec:
    """Where to insert into each row of a pair, and with which signs."""

    position: Position
    x: int
    y: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", check_sign(self.x))
        object.__setattr__(self, "y", check_sign(self.y))

    @property
    def same_signs(self) -> bool:
        return self.x == self.y


class UnsupportedConstructionError(ValueError):
    """The recipe/insertion combination has no predicted profile."""


class VerificationError(Exception):
    """A measured profile disagreed with its prediction."""


@dataclass(frozen=True)
class ZcpReport:
    """Exact classification of one pair's correlation structure.

    ``type1_zcz`` is the largest Z with zero sums at shifts 1..Z-1;
    ``type2_zcz`` the largest Z with zeros at shifts N-Z+1..N-1. The
    out-of-zone tuples list |sum| at the remaining nonzero shifts, in shift
    order. A width of N means the pair is a GCP.
    """

    n: int
    profile: tuple[int, ...]
    type1_zcz: int
    type2_zcz: int
    out_of_zone_type1: tuple[int, ...]
    out_of_zone_type2: tuple[int, ...]
    z_optimal_type1: bool
    z_optimal_type2: bool
    optimal_type1: bool
    optimal_type2: bool

    def magnitudes(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.profile)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "type1_zcz": self.type1_zcz,
            "type2_zcz": self.type2_zcz,
            "profile": list(self.profile),
            "out_of_zone": {
                "type1": list(self.out_of_zone_type1),
                "type2": list(self.out_of_zone_type2),
            },
            "z_optimal": {"type1": self.z_optimal_type1, "type2": self.z_optimal_type2},
            "optimal": {"type1": self.optimal_type1, "type2": self.optimal_type2},
        }


def _leading_zeros(values: tuple[int, ...]) -> int:
    run = 0
    for v in values:
        if v != 0:
            break
        run += 1
    return run


def classify(pair: SequencePair) -> ZcpReport:
    """Compute the full ZCP report of ``pair`` from one profile pass."""
    values = aacs_profile(pair).values
    n = len(values)
    tail = values[1:]
    type1_zcz = _leading_zeros(tail) + 1
    type2_zcz = _leading_zeros(tail[::-1]) + 1
    out1 = tuple(abs(v) for v in values[type1_zcz:])
    out2 = tuple(abs(v) for v in values[1 : n - type2_zcz + 1])
    z1 = n % 2 == 1 and type1_zcz == (n + 1) // 2
    z2 = n % 2 == 1 and type2_zcz == (n + 1) // 2
    return ZcpReport(
        n=n,
        profile=values,
        type1_zcz=type1_zcz,
        type2_zcz=type2_zcz,
        out_of_zone_type1=out1,
        out_of_zone_type2=out2,
        z_optimal_type1=z1,
        z_optimal_type2=z2,
        optimal_type1=z1 and all(m == 2 for m in out1),
        optimal_type2=z2 and all(m == 2 for m in out2),
    )


def front_insertion_sum(pair: SequencePair, x: int, y: int, tau: int) -> int:
    """Autocorrelation sum at shift ``tau`` after inserting x, y at the front.

    For a GCP base, the inserted pair's sum collapses to
    ``x * a[tau-1] + y * b[tau-1]``: zero when the two terms cancel, +-2 when
    they agree. Valid for 1 <= tau <= N (the closed form extends to the final
    shift of the lengthened pair).
    """
    x, y = check_sign(x), check_sign(y)
    if not is_gcp(pair):
        raise ValueError("front insertion sums require a Golay pair base")
    if not 1 <= tau <= pair.length:
        raise ValueError(f"shift {tau} out of range [1, {pair.length}]")
    return x * pair.first[tau - 1] + y * pair.second[tau - 1]


def end_insertion_sum(pair: SequencePair, x: int, y: int, tau: int) -> int:
    """Mirror of :func:`front_insertion_sum` for insertion at the end,
    ``x * a[N-tau] + y * b[N-tau]``."""
    x, y = check_sign(x), check_sign(y)
    if not is_gcp(pair):
        raise ValueError("end insertion sums require a Golay pair base")
    n = pair.length
    if not 1 <= tau <= n:
        raise ValueError(f"shift {tau} out of range [1, {n}]")
    return x * pair.first[n - tau] + y * pair.second[n - tau]


def inserted_aacf(a: BinarySequence, r: int, x: int, tau: int) -> int:
    """Closed-form autocorrelation of ``insert(a, r, x)`` at shift ``tau``.

    Supports the three insertion points r = 0, N/2 and N (the middle needs
    even N). Equals ``aacf(insert(a, r, x), tau)`` for every 0 < tau <= N.
    """
    x = check_sign(x)
    n = len(a)
    if not 0 < tau <= n:
        raise ValueError(f"shift {tau} out of range (0, {n}]")
    if r == 0:
        return x * a[tau - 1] + cross_correlation(a, a, tau)
    if r == n:
        return x * a[n - tau] + cross_correlation(a, a, tau)
    if n % 2 == 0 and r == n // 2:
        half = n // 2
        a1, a2 = a[:half], a[half:]
        if tau < r:
            return (
                cross_correlation(a1, a1, tau)
                + x * a[r - tau]
                + cross_correlation(a2, a1, r - tau + 1)
                + x * a[r + tau - 1]
                + cross_correlation(a2, a2, tau)
            )
        if tau == r:
            return x * a[0] + cross_correlation(a2, a1, 1) + x * a[n - 1]
        return cross_correlation(a2, a1, r - tau + 1)
    raise ValueError(f"insertion point {r} must be 0, N or N/2 (N even), with N = {n}")


def apply_insertion(pair: SequencePair, spec: InsertionSpec) -> SequencePair:
    """Insert ``spec.x`` / ``spec.y`` into the two rows at ``spec.position``."""
    n = pair.length
    if spec.position is Position.FRONT:
        r = 0
    elif spec.position is Position.END:
        r = n
    else:
        if n % 2 != 0:
            raise ValueError("middle insertion requires an even-length pair")
        r = n // 2
    return SequencePair(insert(pair.first, r, spec.x), insert(pair.second, r, spec.y))


@dataclass(frozen=True)
class ProfileSegment:
    """Constant-magnitude block of shifts: covers lo < tau <= hi."""

    lo: int
    hi: int
    magnitude: int

    def __post_init__(self) -> None:
        if self.magnitude not in (0, 2):
            raise ValueError(f"segment magnitude must be 0 or 2, got {self.magnitude}")
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"bad segment bounds ({self.lo}, {self.hi}]")


@dataclass(frozen=True)
class PredictedProfile:
    """Piecewise-constant predicted |sum| profile of an inserted pair.

    The in-phase value at shift 0 is always ``2 * length``; the segments tile
    the remaining shifts (0, length - 1].
    """

    length: int
    segments: tuple[ProfileSegment, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        edge = 0
        for seg in self.segments:
            if seg.lo != edge:
                raise ValueError("segments must tile the shift range contiguously")
            edge = seg.hi
        if edge != self.length - 1:
            raise ValueError(f"segments must end at shift {self.length - 1}, got {edge}")

    @property
    def peak(self) -> int:
        return 2 * self.length

    @property
    def zcz_type(self) -> ZcpType:
        return ZcpType.TYPE1 if self.segments[0].magnitude == 0 else ZcpType.TYPE2

    @property
    def zcz_width(self) -> int:
        if self.zcz_type is ZcpType.TYPE1:
            return self.segments[0].hi + 1
        last = self.segments[-1]
        return (last.hi - last.lo) + 1

    def expected_magnitudes(self) -> tuple[int, ...]:
        out = [self.peak]
        for seg in self.segments:
            out.extend([seg.magnitude] * (seg.hi - seg.lo))
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "n": self.length,
            "peak": self.peak,
            "zcz_type": self.zcz_type.value,
            "zcz_width": self.zcz_width,
            "segments": [
                {"lo": s.lo, "hi": s.hi, "mag": s.magnitude} for s in self.segments
            ],
        }


def _four_segments(length: int, bounds: tuple[int, int, int], type1: bool) -> tuple[ProfileSegment, ...]:
    mags = (0, 2, 0, 2) if type1 else (2, 0, 2, 0)
    edges = (0, *bounds, length)
    return tuple(
        ProfileSegment(edges[i], edges[i + 1], mags[i]) for i in range(4)
    )


def predicted_profile(recipe: GcpRecipe, spec: InsertionSpec) -> PredictedProfile:
    """Predicted magnitude profile for inserting into ``build_gcp(recipe)``.

    Supported combinations:

    * K2-seeded recipe, front or end insertion: two segments split at the
      half length. Front with differing signs (or end with identical signs)
      puts the zero zone first (Type-I); the opposite sign choice swaps the
      segments (Type-II). These pairs are optimal.
    * pure K10 or K26 power, front or end: four segments, the kernel's
      column-sign runs scaled by ``N / kernel_length``.
    * K26-seeded recipe with K10/K26 steps: four segments with boundaries at
      12, 13 and 14 times ``N / 26``.
    * K2-seeded recipe, middle insertion, any signs: optimal Type-II with
      magnitude 2 on the first half of the shifts and zero after.

    Anything else (e.g. middle insertion on non-K2-seeded pairs, or K10-seeded
    recipes mixing in K26 steps) has no asserted profile here; build and
    measure it instead via :func:`measure_insertion`.
    """
    n = recipe.length
    out_len = n + 1
    seed = recipe.seed
    steps = recipe.steps

    if spec.position is Position.MIDDLE:
        if seed is not KernelId.K2:
            raise UnsupportedConstructionError(
                "middle insertion is only predicted for K2-seeded recipes; "
                f"nearest supported: middle insertion on a K2-seeded recipe of this "
                f"length, or front/end insertion on {recipe}"
            )
        half = n // 2
        return PredictedProfile(
            out_len, (ProfileSegment(0, half, 2), ProfileSegment(half, n, 0))
        )

    type1 = (spec.position is Position.FRONT) ^ spec.same_signs

    if seed is KernelId.K2:
        half = n // 2
        mags = (0, 2) if type1 else (2, 0)
        return PredictedProfile(
            out_len,
            (ProfileSegment(0, half, mags[0]), ProfileSegment(half, n, mags[1])),
        )
    if seed is KernelId.K10 and all(st is KernelId.K10 for st in steps):
        scale = n // 10
        return PredictedProfile(
            out_len, _four_segments(out_len, (4 * scale, 5 * scale, 6 * scale), type1)
        )
    if seed is KernelId.K26 and all(st in (KernelId.K10, KernelId.K26) for st in steps):
        scale = n // 26
        return PredictedProfile(
            out_len, _four_segments(out_len, (12 * scale, 13 * scale, 14 * scale), type1)
        )
    raise UnsupportedConstructionError(
        f"no predicted profile for {spec.position.value} insertion on {recipe}; "
        "nearest supported: a K2-seeded recipe of the same length, a pure K10 or "
        "K26 power, or a K26-seeded recipe with K10/K26 steps"
    )


def construct_obzcp(
    recipe: GcpRecipe, spec: InsertionSpec
) -> tuple[SequencePair, PredictedProfile]:
    """Build an inserted pair and verify it against its predicted profile.

    Returns the lengthened pair together with the prediction. Raises
    :class:`UnsupportedConstructionError` for combinations without a
    prediction and :class:`VerificationError` if measurement ever disagreed
    with the prediction (which would indicate a defect, not bad input).
    """
    prediction = predicted_profile(recipe, spec)
    pair = apply_insertion(build_gcp(recipe), spec)
    measured = classify(pair).magnitudes()
    if measured != prediction.expected_magnitudes():
        raise VerificationError(
            f"measured profile disagrees with prediction for {recipe} "
            f"{spec.position.value} x={spec.x} y={spec.y}"
        )
    return pair, prediction


def measure_insertion(recipe: GcpRecipe, spec: InsertionSpec) -> tuple[SequencePair, ZcpReport]:
    """Build an inserted pair and classify it, asserting nothing.

    This is the measure-only path for combinations outside
    :func:`predicted_profile`'s support.
    """
    pair = apply_insertion(build_gcp(recipe), spec)
    return pair, classify(pair)


def middle_pair_identities(pair: SequencePair) -> bool:
    """Check the half-sequence identities behind middle insertion.

    Splitting each row of an even-length pair into halves (c1, c2) and
    (d1, d2), reports whether both hold:

    * the four half autocorrelations sum to zero at every nonzero shift;
    * the cross-correlations of second half against first half of the two
      rows cancel at every shift, negative shifts included.

    K2-seeded GCPs satisfy both, which is what makes their middle insertion
    optimal. This is a checker only; it asserts nothing about other inputs.
    """
    n = pair.length
    if n % 2 != 0:
        raise ValueError("half identities require an even-length pair")
    half = n // 2
    c1, c2 = pair.first[:half], pair.first[half:]
    d1, d2 = pair.second[:half], pair.second[half:]
    for tau in range(1, half):
        total = (
            cross_correlation(c1, c1, tau)
            + cross_correlation(c2, c2, tau)
            + cross_correlation(d1, d1, tau)
            + cross_correlation(d2, d2, tau)
        )
        if total != 0:
            return False
    for tau in range(-(half - 1), half):
        if cross_correlation(c2, c1, tau) + cross_correlation(d2, d1, tau) != 0:
            return False
    return True
