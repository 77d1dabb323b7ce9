"""Normalized-Laplacian spectra, chromatic bounds, expansion parameters and
linear-hypergraph checks, backed by the C++ core."""

from ._speccol import *  # noqa: F401,F403
from ._speccol import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
