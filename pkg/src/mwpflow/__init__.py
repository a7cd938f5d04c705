"""Data-size analysis of C functions with the mwp flow calculus.

The pipeline is ``frontend.parse`` -> ``analysis.analyze``; results carry the
final flow relation and the set of derivation choices under which every
flow stays polynomially bounded.
"""

__version__ = "0.1.0"

from .semiring import Coefficient, join, times  # noqa: E402
from .choice_algebra import Delta, Monomial, Polynomial  # noqa: E402
from .matrix import FlowMatrix  # noqa: E402
from .relation import Relation, RelationList  # noqa: E402
from .delta_graph import ChoiceSet, DeltaGraph  # noqa: E402
from .frontend import parse, FrontendError  # noqa: E402
from .analysis import AnalysisResult, analyze  # noqa: E402

__all__ = [
    "AnalysisResult",
    "ChoiceSet",
    "Coefficient",
    "Delta",
    "DeltaGraph",
    "FlowMatrix",
    "FrontendError",
    "Monomial",
    "Polynomial",
    "Relation",
    "RelationList",
    "analyze",
    "join",
    "parse",
    "times",
]
