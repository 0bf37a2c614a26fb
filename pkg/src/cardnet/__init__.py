"""Selection comparator networks for cardinality constraints.

Builds pairwise and bitonic selection networks, verifies them, counts their
comparators exactly, encodes ``x_1 + ... + x_n < k`` to CNF and checks that
unit propagation on the encoding is arc-consistent.
"""

from .network import (
    Comparator,
    ComparatorNetwork,
    NetworkError,
    all_geq,
    apply_comparator,
    dominates,
    evaluate,
    evaluate_batch,
    identity,
    is_bitonic,
    is_sdominating,
    is_sorted,
    is_top_k_sorted,
    is_vshape_sdominating,
    is_vshaped,
    vshape_point,
)
from .constructions import (
    build,
    make_bit_merge,
    make_bit_sel,
    make_bit_split,
    make_half_bit_merge,
    make_half_split,
    make_max,
    make_oe_sort,
    make_pw_bit_merge,
    make_pw_bit_sel,
    make_pw_hbit_merge,
    make_pw_hbit_sel,
    make_split,
)
from .cnf import CnfFormula, Encoding, encode_cardinality, encode_network, read_dimacs, write_dimacs
from .propagation import (
    TriAssignment,
    arc_consistency_check,
    extract_propagation_path,
    forward_propagation_check,
    unit_propagate,
)
from .verify import (
    VerifyReport,
    verify_merger_contract,
    verify_selection_exhaustive,
    verify_selection_random,
)

__version__ = "0.1.0"
