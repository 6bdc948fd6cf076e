from .analysis import Analysis
from .catalog import Catalog
from .classification import Classification
from .transforms import Transforms

__all__ = [
    "Analysis",
    "Classification",
    "Catalog",
    "Transforms",
]
