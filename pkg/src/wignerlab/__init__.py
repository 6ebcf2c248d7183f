"""Little groups, group contraction and the covariant oscillator model of hadrons."""

from .errors import DomainError, EnvelopeError, WignerLabError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "DomainError", "EnvelopeError", "WignerLabError", "__version__"]
