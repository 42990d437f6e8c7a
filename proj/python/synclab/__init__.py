"""Energy-landscape laboratory for network synchronization.

Thin wrapper around the compiled core: graph generators, the energy
E(theta) = 1/2 sum a_ij (1 - cos(theta_i - theta_j)) with gradient and
Hessian, gradient-flow descent with restart harnesses, twisted-state
spectra, and landscape certificates.
"""

from synclab._core import *  # noqa: F401,F403
from synclab._core import __version__  # noqa: F401
