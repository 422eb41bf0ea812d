"""Complete families of Poisson-commuting polynomials on duals of Lie algebras."""
from .catalog import catalog
from .liealg import LieAlgebra, Subspace
from .pipeline import Certificate, Options, construct, verify
from .poisson import PolyFamily, index, l_value, poisson_bracket

__version__ = "0.1.0"

__all__ = ["catalog", "LieAlgebra", "Subspace", "Certificate", "Options", "construct", "verify",
           "PolyFamily", "index", "l_value", "poisson_bracket"]
