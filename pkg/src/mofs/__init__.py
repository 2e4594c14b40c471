"""Exact-arithmetic toolkit for mutually orthogonal frequency squares.

Construct, verify, and certify sets of MOFS and the block designs they
correspond to: frequency types and squares, pairwise orthogonality,
design regularity, the block-array bridge between the two worlds,
deterministic constructions, and maximality certificates backed by
modular obstructions or exhaustive search.
"""

from .core import (
    FrequencySquare,
    FrequencyType,
    MofsSet,
    SumMatrix,
    binary_type,
    epa_to_mofs,
    map_symbols,
    mofs_to_epa,
    orthogonal,
    pack_superimposed,
    pair_counts,
    square_from_entries,
    unpack_superimposed,
    validate_mofs,
    validate_square,
    z_sum,
)
from .designs import (
    Design,
    ParameterCheck,
    RegularityReport,
    cyclic_develop,
    design_from_incidence,
    incidence_matrix,
    parameter_check_large_example,
    regularity,
    verify_bibd,
    verify_pbd,
)
from .bridge import (
    BlockArray,
    Equipartition,
    derive_blocks,
    derive_mofs,
    partitions_orthogonal,
    verify_equipartition,
)
from .constructions import (
    PipelineResult,
    cycle_power_mofs,
    cyclic_mofs_from_design,
    cyclic_pbd_27,
    dilate,
    dk_52_16,
    extension_square_13,
    pad_with_ones,
    typemax_pipeline_cyclic,
    typemax_pipeline_dk,
)
from .maximality import (
    BlockStructure,
    Certificate,
    SearchResult,
    certify_corollary,
    certify_cycle_power,
    certify_maximal_smalln,
    certify_padded_cyclic,
    check_certificate,
    eq2_residue,
    extension_search,
    find_block_structure,
)
from .errors import MofsError

__version__ = "0.1.0"
