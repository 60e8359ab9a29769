"""Exact computer algebra for quasi-symmetric and noncommutative symmetric functions.

The package implements the saillance statistics on permutations, the U basis
of QSym together with its transition matrices, the dual V basis of NSym with
closed product formulas, a small FQSym engine with dendriform half-products,
q-analogues of the cycle-index coefficients, and insertion algorithms for
three pattern-replacement equivalences.  Everything is exact: coefficients
are arbitrary-precision integers or integer polynomials in q.
"""

from .compositions import (
    complement,
    compositions_ordered,
    conjugate,
    descent_set,
    maj,
    ribbon_prefix,
)
from .qpoly import QPoly, q_factorial, q_int
from .matrices import IntMatrix, matrix_inverse
from .permutations import (
    canonical_representative,
    foata_first,
    inverse,
    inversions,
    invc,
    ltr_minima_values,
    ordered_cycle_type,
    recoil_composition,
    saillance_composition,
    shifted_shuffle,
)
from .forests import (
    LabeledForest,
    bw_q_count,
    comb_poset,
    hook_count,
    hook_lengths,
    linear_extensions,
    minimal_extension,
)
from .cycle_index import (
    c_coefficient,
    c_q,
    c_q_tilde,
    expand_Sn_in_theta,
    theta,
    theta_tilde,
)
from .fqsym import (
    FQSymElement,
    cc,
    coalgebra_coefficients,
    coproduct,
    half_products,
    shuffle_lemma_check,
    z_series,
)
from .bases import (
    NSymElement,
    QSymElement,
    psi_in_v,
    quotient_class_check,
    ribbon_in_v,
    ribbon_lambda_conversion,
    ribbon_product,
    transition_matrix,
    u_basis,
    v_in_ribbon,
)
from .products import (
    alternating_reconstruction,
    pieri_lambda,
    v_product,
    vprime_product,
    vprime_product_oracle,
)
from .equivalences import (
    EQ1,
    EQ2,
    MIRROR,
    RELATIONS,
    class_bijection,
    class_census,
    classes_by_first_letter,
    insert_p,
    insert_p2,
    insert_q,
    insert_q2,
    pattern_closure,
    saillance_correspondence_check,
    v_permutation,
    w_chain,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
