"""Exact computations with root data, diagram folding, regular centralizers and
the spectral data of twisted bilinear forms."""

from ._closure import COMPILED as closure_compiled
from .config import bound
from .rootdata import RootDatum, build_root_datum, langlands_dual

__all__ = ["RootDatum", "build_root_datum", "langlands_dual", "bound", "closure_compiled"]
__version__ = "0.1.0"
