"""Low-autocorrelation binary sequences: evaluation, verification, search.

The package works with +/-1 integer sequences.  Central quantities are the
aperiodic autocorrelations C_k, the sidelobe energy E = sum of C_k^2 over
positive lags, and the merit factor F = L^2 / (2 E).  Odd-length sequences
with the skew-symmetric mirror property get special treatment throughout
because their odd-lag correlations vanish, halving the search dimension.
"""

from .codec import decode, encode
from .incremental import FULL, SKEW, FlipEvaluator
from .oracle import OracleResult, exhaustive
from .records import (
    MERIT_TOLERANCE,
    RecordCheck,
    RecordEntry,
    check_record,
    load_records,
    verify_records,
)
from .search import (
    RNG_NAME,
    SearchConfig,
    SearchResult,
    run_parallel,
    run_search,
)
from .seqcore import (
    AutocorrelationProfile,
    MeritReport,
    as_sequence,
    autocorrelations,
    energy,
    evaluate,
    format_merit_factor,
    merit_factor,
    psl,
    spectrum_modulus,
)
from .skewsym import contract, expand, is_skew_symmetric

__version__ = "0.1.0"

__all__ = [
    "AutocorrelationProfile",
    "FULL",
    "FlipEvaluator",
    "MERIT_TOLERANCE",
    "MeritReport",
    "OracleResult",
    "RecordCheck",
    "RecordEntry",
    "RNG_NAME",
    "SKEW",
    "SearchConfig",
    "SearchResult",
    "as_sequence",
    "autocorrelations",
    "check_record",
    "contract",
    "decode",
    "encode",
    "energy",
    "evaluate",
    "exhaustive",
    "expand",
    "format_merit_factor",
    "is_skew_symmetric",
    "load_records",
    "merit_factor",
    "psl",
    "run_parallel",
    "run_search",
    "spectrum_modulus",
    "verify_records",
    "__version__",
]
