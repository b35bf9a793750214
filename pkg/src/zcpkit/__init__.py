"""Binary Golay complementary pairs, odd-length Z-complementary pairs, and
exact aperiodic correlation analysis."""

from .core import (
    MAX_LENGTH,
    BinarySequence,
    CorrelationProfile,
    SequencePair,
    aacf,
    aacs_profile,
    concat,
    cross_correlation,
    delete,
    format_pair,
    format_sequence,
    insert,
    kronecker,
    negate,
    parse_pair,
    parse_pairs,
    parse_sequence,
    reverse,
)
from .golay import (
    KERNEL_SEGMENTS,
    ColumnSignProfile,
    GcpRecipe,
    KernelId,
    Mark,
    build_gcp,
    c2_recipe,
    c4_recipe,
    check_quadrature,
    column_sign_profile,
    is_gcp,
    kernel,
    predicted_column_profile,
    turyn,
    turyn_element,
    verify_block_structure,
)
from .zcp import (
    InsertionSpec,
    Position,
    PredictedProfile,
    ProfileSegment,
    UnsupportedConstructionError,
    VerificationError,
    ZcpReport,
    ZcpType,
    apply_insertion,
    classify,
    construct_obzcp,
    end_insertion_sum,
    front_insertion_sum,
    inserted_aacf,
    measure_insertion,
    middle_pair_identities,
    predicted_profile,
)
from .search import (
    DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_INSERTION_CAP,
    WITNESS_CAP,
    InsertionHit,
    InsertionSearchResult,
    SearchResult,
    exhaustive_max_zcz,
    insertion_search,
    verify_out_of_zone_floor,
)

__version__ = "0.1.0"
