from orderzero.claims.base import BaseClaim, Evidence, GeneratingSetClaim
from orderzero.claims.counting import (
    LeftDivisorStructure,
    RightDivisorStructure,
    SubsemigroupLaw,
    TwoSidedDivisorStructure,
)
from orderzero.claims.left import (
    IntervalImageGenerators,
    LeftEndGenerators,
    MiddleLeftGenerators,
    MiddleLeftRank,
    RestrictedRangeRank,
)
from orderzero.claims.right import RightEndGenerators, RightEndRank, RightStarGenerators
from orderzero.claims.two_sided import (
    ClosingFactorization,
    TwoSidedEndGenerators,
    TwoSidedEndRank,
    TwoSidedStarGenerators,
)

CLAIM_CLASSES = {
    cls.claim_id: cls for cls in [
        LeftDivisorStructure,
        RightDivisorStructure,
        TwoSidedDivisorStructure,
        SubsemigroupLaw,
        IntervalImageGenerators,
        RestrictedRangeRank,
        LeftEndGenerators,
        MiddleLeftGenerators,
        MiddleLeftRank,
        RightStarGenerators,
        RightEndGenerators,
        RightEndRank,
        TwoSidedStarGenerators,
        TwoSidedEndGenerators,
        TwoSidedEndRank,
        ClosingFactorization,
    ]
}


def claim_units(claim_ids):
    """ Fresh claim units for ``claim_ids``, in the given order """
    units = []
    for claim_id in claim_ids:
        try:
            units.append(CLAIM_CLASSES[claim_id]())
        except KeyError:
            raise ValueError(
                f"Unknown claim {repr(claim_id)}. Known claims: {', '.join(CLAIM_CLASSES)}"
            ) from None
    return units
