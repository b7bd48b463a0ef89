"""Standard monomial theory of Richardson varieties, computed from
L-S paths and checked against independent oracles."""

from .characters import (
    FormalCharacter,
    char_from_paths,
    char_standard_sequences,
    demazure_character,
    demazure_from_paths,
    weyl_character,
    weyl_dimension,
)
from .ktheory import (
    PieriChevalleyTable,
    degeneration_check,
    degeneration_report,
    kernel_count,
    pieri_chevalley,
    pittie_ram_sum_check,
)
from .lspath import (
    ConvexSubset,
    LSPath,
    StandardSequence,
    cmp_lex,
    cmp_revlex,
    enumerate_ls_paths,
    enumerate_standard_sequences,
    is_ls_path,
    unwedge,
    wedge,
)
from .richardson import (
    TRIVIAL_BUNDLE,
    DefiningChain,
    FiltrationMultiset,
    RichardsonSpec,
    RichardsonUnion,
    boundary_minus,
    boundary_plus,
    count_standard_monomials,
    count_standard_nonregular,
    hilbert_recursion_check,
    intersect,
    lambda_boundary,
    max_defining_chain,
    min_defining_chain,
    pieri_filtration,
)
from .weyl import (
    BoundExceeded,
    Coset,
    CosetSpace,
    RootSystem,
    WeylElement,
    WeylGroup,
    build_root_system,
    coset_space,
    enumerate_weyl,
    parse_type,
    weyl_group,
)

__version__ = "0.1.0"
