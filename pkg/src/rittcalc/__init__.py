"""rittcalc: numerical workbench for operators with finite peripheral spectrum.

Everything acts on dense complex matrices regarded as operators on discrete
l^p spaces: Ritt-type certification, generalized Stolz domains, contour
functional calculus, constructive polygons, R-bound estimation, and regular
operator experiments.
"""

from ._version import __version__
from .backend import backend_name

__all__ = ["__version__", "backend_name"]
