"""
Generic machinery over finite sets of transformations: closure,
generating sets, undecomposable elements, rank search and morphisms.
"""
from orderzero.engine.closure import (
    ClosureResult,
    closure,
    extend_closure,
    find_closure_violation,
    is_generating_set,
    is_subsemigroup,
    kernel_refines_product,
    undecomposables,
)
from orderzero.engine.morphisms import MorphismReport, verify_isomorphism
from orderzero.engine.rank import (
    RankCertificate,
    greedy_generating_set,
    rank_bounds,
    rank_exact,
    rank_lower_bound_images,
)
from orderzero.engine.table import MultiplicationTable
