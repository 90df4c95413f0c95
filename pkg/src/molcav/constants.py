"""Physical constants (CODATA 2018) and unit conversion factors.

Every unit conversion in the package routes through this table so that
estimator results stay mutually consistent.
"""

HBAR = 1.054571817e-34          # J s
EPS0 = 8.8541878128e-12         # F / m
KB = 1.380649e-23               # J / K
AMU = 1.66053906660e-27         # kg
DEBYE = 3.33564095198e-30       # C m
BOHR_RADIUS = 5.29177210903e-11  # m
SPEED_OF_LIGHT = 299792458.0    # m / s

TWO_PI = 6.283185307179586

# angular-frequency conversions: x * UNIT gives rad/s
TWOPI_HZ = TWO_PI
TWOPI_KHZ = TWO_PI * 1e3
TWOPI_MHZ = TWO_PI * 1e6
TWOPI_GHZ = TWO_PI * 1e9
