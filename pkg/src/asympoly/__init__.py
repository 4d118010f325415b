"""
asympoly: exact computer algebra for the symmetric, quasisymmetric, and
asymmetric worlds of polynomial bases, with combinatorial constructors,
change-of-basis expansions, product rules, and verification harnesses.
"""

from .combinat import (
    FormalSum,
    bruhat_leq,
    code_to_permutation,
    dominance_leq,
    lehmer_code,
    lswap_closure,
    positive_part,
    qlswap,
    reduced_words,
    refines,
    rothe_diagram,
    sorting_data,
    term_order_compare,
)
from .polynomial import (
    ExactPolynomial,
    act_permutation,
    alternant,
    apply_operator_word,
    demazure_operator,
    divided_difference,
    is_quasisymmetric,
    is_symmetric,
    vandermonde,
)
from .bases import (
    BASIS_IDS,
    basis_polynomial,
    key_alternatives,
    schubert_alternatives,
    schur_alternatives,
)
from .expand import (
    BasisExpansion,
    combinatorial_expansion,
    expand_via_solver,
    positivity_report,
    stable_limit_probe,
    verify_expansion,
)
from .products import (
    conjecture_harness_reiner_shimozono,
    lr_coefficient,
    overlapping_shuffle_product,
    overlapping_slide_product,
    shuffle_product,
    slide_product,
    structure_constants,
    verify_product_rule,
)
from .verify import run_suite

__version__ = "0.1.0"
