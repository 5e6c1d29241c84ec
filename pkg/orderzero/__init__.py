from .version import __version__
from .config import LimitExceeded, SearchBudget
from .transformations import DegreeMismatch, Transformation, compose, constant, identity
from .enumeration import enumerate_set, semigroup_id
from .counts import card, rank_formula
from .verifier import Verifier
