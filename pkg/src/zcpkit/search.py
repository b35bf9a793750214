"""Brute-force oracles over the full space of binary sequence pairs.

These routines certify zero-correlation-zone claims exhaustively at small
lengths and sweep insertion grids over a given GCP. They exist to
cross-check the constructive modules against ground truth, so they favour
exactness and determinism: enumeration order is lexicographic over the
(row1, row2) bit patterns with +1 encoded as bit 0, and every count is over
all 2^(2N) ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BinarySequence, SequencePair, insert
from .golay import is_gcp
from .zcp import ZcpReport, ZcpType, classify

__all__ = [
    "DEFAULT_EXHAUSTIVE_CAP",
    "DEFAULT_INSERTION_CAP",
    "WITNESS_CAP",
    "SearchResult",
    "InsertionHit",
    "InsertionSearchResult",
    "exhaustive_max_zcz",
    "verify_out_of_zone_floor",
    "insertion_search",
]

# 4^13 ordered pairs is desk-scale; anything above needs a deliberate opt-in.
DEFAULT_EXHAUSTIVE_CAP = 13
DEFAULT_INSERTION_CAP = 128
WITNESS_CAP = 32


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive maximum-ZCZ search at one length."""

    n: int
    zcp_type: ZcpType
    max_zcz: int
    witness_count: int
    witnesses: tuple[SequencePair, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "type": self.zcp_type.value,
            "max_zcz": self.max_zcz,
            "witness_count": self.witness_count,
            "witnesses": [[str(w.first), str(w.second)] for w in self.witnesses],
        }


@dataclass(frozen=True)
class InsertionHit:
    """One optimal pair found on the insertion grid of a base GCP."""

    r_first: int
    r_second: int
    x: int
    y: int
    report: ZcpReport

    def to_json_dict(self) -> dict:
        return {
            "r_first": self.r_first,
            "r_second": self.r_second,
            "x": self.x,
            "y": self.y,
            "report": self.report.to_json_dict(),
        }


@dataclass(frozen=True)
class InsertionSearchResult:
    base: SequencePair
    allow_unequal_positions: bool
    hits: tuple[InsertionHit, ...]

    def to_json_dict(self) -> dict:
        return {
            "base": [str(self.base.first), str(self.base.second)],
            "n": self.base.length,
            "allow_unequal_positions": self.allow_unequal_positions,
            "hits": [h.to_json_dict() for h in self.hits],
        }


def _sign_matrix(n: int) -> np.ndarray:
    # Row s holds the sequence for bit pattern s; element 0 is the top bit.
    codes = np.arange(1 << n, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n - 1, -1, -1)) & 1
    return 1 - 2 * bits


def _aacf_tails(vals: np.ndarray) -> np.ndarray:
    # Autocorrelation at shifts 1..n-1 for every row of vals.
    count, n = vals.shape
    tails = np.empty((count, n - 1), dtype=np.int64)
    for tau in range(1, n):
        tails[:, tau - 1] = np.sum(vals[:, : n - tau] * vals[:, tau:], axis=1)
    return tails


def _sequence_from_code(code: int, n: int) -> BinarySequence:
    return BinarySequence(
        tuple(1 if ((code >> (n - 1 - i)) & 1) == 0 else -1 for i in range(n))
    )


def exhaustive_max_zcz(
    n: int,
    zcp_type: ZcpType,
    *,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    witness_cap: int = WITNESS_CAP,
) -> SearchResult:
    """Exact maximum ZCZ width over all ordered pairs of length ``n``.

    Rather than walking all 4^n pairs, the sequences are bucketed by the
    relevant prefix of their autocorrelation tail (suffix, for Type-II); a
    pair attains zone size L exactly when one row's prefix is the negation of
    the other's, so bucket sizes give exact ordered-pair counts. The widest L
    with any match wins, ``witness_count`` is the exact number of ordered
    pairs attaining it, and ``witnesses`` holds the lexicographically first
    ones (up to ``witness_cap``).
    """
    if n > cap:
        raise ValueError(f"length {n} exceeds the exhaustive search cap {cap}")
    if n < 3:
        raise ValueError(f"length {n} below the minimum of 3")
    values = _sign_matrix(n)
    tails = _aacf_tails(values)
    if zcp_type is ZcpType.TYPE2:
        tails = np.ascontiguousarray(tails[:, ::-1])
    neg_tails = -tails
    seq_count = 1 << n

    for width in range(n - 1, -1, -1):
        buckets: dict[bytes, list[int]] = {}
        for s in range(seq_count):
            buckets.setdefault(tails[s, :width].tobytes(), []).append(s)
        total = 0
        first_pairs: list[tuple[int, int]] = []
        for s in range(seq_count):
            partners = buckets.get(neg_tails[s, :width].tobytes())
            if not partners:
                continue
            total += len(partners)
            if len(first_pairs) < witness_cap:
                take = partners[: witness_cap - len(first_pairs)]
                first_pairs.extend((s, b) for b in take)
        if total:
            witnesses = tuple(
                SequencePair(_sequence_from_code(sa, n), _sequence_from_code(sb, n))
                for sa, sb in first_pairs
            )
            return SearchResult(
                n=n,
                zcp_type=zcp_type,
                max_zcz=width + 1,
                witness_count=total,
                witnesses=witnesses,
            )
    raise AssertionError("zone width 0 matches every pair")


def verify_out_of_zone_floor(n: int, *, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> bool:
    """Exhaustively confirm the out-of-zone magnitude floor at odd length ``n``.

    True iff every pair whose ZCZ width reaches the odd-length maximum
    (N+1)/2, of either type, has |sum| >= 2 at every out-of-zone shift.
    """
    if n > cap:
        raise ValueError(f"length {n} exceeds the exhaustive search cap {cap}")
    if n < 3 or n % 2 == 0:
        raise ValueError(f"length must be odd and >= 3, got {n}")
    values = _sign_matrix(n)
    base_tails = _aacf_tails(values)
    zone = (n - 1) // 2
    seq_count = 1 << n

    for flip in (False, True):
        tails = np.ascontiguousarray(base_tails[:, ::-1]) if flip else base_tails
        neg_tails = -tails
        buckets: dict[bytes, list[int]] = {}
        for s in range(seq_count):
            buckets.setdefault(tails[s, :zone].tobytes(), []).append(s)
        suffix = tails[:, zone:]
        for s in range(seq_count):
            partners = buckets.get(neg_tails[s, :zone].tobytes())
            if not partners:
                continue
            sums = suffix[np.asarray(partners)] + suffix[s]
            # Width exactly (n+1)/2 means the first out-of-zone sum is nonzero;
            # wider-zone pairs (none exist at odd length) are not candidates.
            candidates = sums[sums[:, 0] != 0]
            if candidates.size and (candidates == 0).any():
                return False
    return True


def insertion_search(
    pair: SequencePair,
    allow_unequal_positions: bool = False,
    *,
    cap: int = DEFAULT_INSERTION_CAP,
) -> InsertionSearchResult:
    """Classify every single-symbol insertion into a base GCP.

    Evaluates the grid of insertion positions (0..N for each row; tied
    together unless ``allow_unequal_positions``) and both sign choices per
    row, returning every combination that lands an optimal Type-I or Type-II
    pair. Hits are ordered by (r_first, r_second, x, y) with +1 before -1.
    """
    if not is_gcp(pair):
        raise ValueError("insertion search requires a Golay pair base")
    n = pair.length
    if n > cap:
        raise ValueError(f"length {n} exceeds the insertion search cap {cap}")

    signs = (1, -1)
    rows = {}
    for name, row in (("first", pair.first), ("second", pair.second)):
        arr = row.to_array()
        for r in range(n + 1):
            for x in signs:
                ins = np.concatenate([arr[:r], [x], arr[r:]])
                rows[(name, r, x)] = np.correlate(ins, ins, mode="full")[n:]

    out_len = n + 1
    hits: list[InsertionHit] = []
    if out_len % 2 == 1:
        mid = (out_len + 1) // 2
        for r_first in range(n + 1):
            second_positions = range(n + 1) if allow_unequal_positions else (r_first,)
            for r_second in second_positions:
                for x in signs:
                    for y in signs:
                        prof = np.abs(
                            rows[("first", r_first, x)] + rows[("second", r_second, y)]
                        )
                        type1 = not prof[1:mid].any() and bool((prof[mid:] == 2).all())
                        type2 = bool((prof[1:mid] == 2).all()) and not prof[mid:].any()
                        if not (type1 or type2):
                            continue
                        candidate = SequencePair(
                            insert(pair.first, r_first, x),
                            insert(pair.second, r_second, y),
                        )
                        report = classify(candidate)
                        if report.optimal_type1 != type1 or report.optimal_type2 != type2:
                            raise AssertionError("screen disagrees with classification")
                        hits.append(InsertionHit(r_first, r_second, x, y, report))
    return InsertionSearchResult(
        base=pair,
        allow_unequal_positions=allow_unequal_positions,
        hits=tuple(hits),
    )
