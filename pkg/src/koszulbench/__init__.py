"""koszulbench: exact workbench for quadratic, G-quadratic, LG-quadratic and
Koszul properties of standard graded algebras."""

__version__ = "0.1.0"

from .fields import QQ, PrimeField, parse_field
from .orders import TermOrder, degrevlex, lex
from .poly import Ideal, LinearSpace, Poly, Ring
from .verdicts import NO, UNDETERMINED, YES, Verdict

__all__ = [
    "QQ", "PrimeField", "parse_field",
    "TermOrder", "degrevlex", "lex",
    "Ideal", "LinearSpace", "Poly", "Ring",
    "Verdict", "YES", "NO", "UNDETERMINED",
    "__version__",
]
