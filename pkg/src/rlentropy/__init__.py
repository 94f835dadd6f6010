"""Entropy quantifiers of bilevel document images computed on run-length data."""

__version__ = "0.1.0"

from .analysis import (
    DistanceMatrix,
    FeatureRow,
    distance_matrix,
    distances_from_f3,
    equivalence_check,
    feature_table,
)
from .entropy import (
    EntropyFeatures,
    ceq_horizontal,
    ceq_row,
    ceq_vertical,
    compute_features,
    seq_horizontal,
    seq_kernel,
    seq_row,
    seq_vertical,
)
from .errors import InvariantViolation, PBMParseError, RLEntropyError, RLEValidationError
from .image_io import BinaryImage, from_ascii_art, load_pbm, save_pbm
from .oracle import oracle_ceq, oracle_features, oracle_seq
from .rle import (
    RLEDocument,
    RLERow,
    compression_stats,
    decode_image,
    decode_row,
    dumps_rld,
    encode_image,
    encode_row,
    loads_rld,
)
from .transitions import (
    TransitionSet,
    VirtualCursor,
    column_transition_sets,
    count_transitions,
    trace_virtual_decompression,
    transition_positions,
    virtual_decompress,
)
