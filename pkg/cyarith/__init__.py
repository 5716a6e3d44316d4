from .errors import CyarithError
from .sieve import Factorization, SieveTable, build_sieve, factor
from .powerseries import TruncatedSeries
from .classify import ArithFnHandle
from . import fns

__version__ = "0.1.0"

__all__ = (
    "CyarithError",
    "Factorization",
    "SieveTable",
    "build_sieve",
    "factor",
    "TruncatedSeries",
    "ArithFnHandle",
    "fns",
)
