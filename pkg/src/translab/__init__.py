"""translab: a verification lab for a condition poset over binary words.

GF(2) word arithmetic, pair colorings with homogeneous-set extraction,
translation recovery against independent families, and the poset of
conditions with its density, amalgamation and scan machinery.
"""

from .arrange import (
    ArrangementCertificate,
    PairColoring,
    check_no_zero_triangle,
    extract_homogeneous,
    find_four_arrangement,
    gen_star_coloring,
    is_four_arrangement,
    verify_certificate,
    zero_neighborhood,
)
from .chains import (
    Chain,
    GenericApproximation,
    WitnessSet,
    approximation,
    build_chain,
    classify_sum,
    intersection_witnesses,
    triangle_scan,
)
from .errors import (
    ClaimViolation,
    ConstructionError,
    LemmaViolation,
    ParseError,
    StabilityError,
)
from .poset import (
    Condition,
    FiniteTree,
    QuadrupleReport,
    Violation,
    aligned,
    alignment,
    amalgamate,
    extend,
    extend_with_label,
    leq,
    leq_explain,
    make_condition,
    minimal_condition,
    scan_equal_sums,
    validate,
)
from .translate import brute_translation, decompose_shared, recover_translation
from .words import (
    Word,
    add,
    express_in_basis,
    first_diff,
    is_independent,
    lex_less,
    pad_zeros,
    rank,
    restrict,
    word,
)

__version__ = "0.1.0"
