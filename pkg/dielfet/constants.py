"""Constants used in dielfet."""
from scipy import constants as codata

# Current version
VERSION = "0.3.0"

# Name of the package, also the name of the binary
DIELFET_APP_NAME = "dielfet"

# User config file, looked up in $HOME
DIELFET_CONFIG_FILE = ".dielfet.cfg"

# Environment variable that can point to a materials database
MATERIALS_ENV_VAR = "DIELFET_MATERIALS"

# Directory containing the stock materials database
MATERIALS_DIR = "materials"
STOCK_MATERIALS_FILE = "glasses.csv"

# Materials CSV columns, in order
MATERIALS_HEADER = (
    "name",
    "n",
    "M_eV",
    "cauchy_B_m2",
    "kerr_K_m_per_V2",
    "n2_m2_per_W",
    "lambda_ref_m",
)

# Output modes
OUTPUT_JSON = "json"
OUTPUT_CSV = "csv"

#
# Physical constants (CODATA, SI)
#
SPEED_OF_LIGHT = codata.c  # m/s
HBAR = codata.hbar  # J s
ELECTRON_VOLT = codata.e  # J
VACUUM_PERMITTIVITY = codata.epsilon_0  # F/m
BOLTZMANN = codata.k  # J/K

# hbar*c in eV m, and in the customary eV nm
HBAR_C_EV_M = HBAR * SPEED_OF_LIGHT / ELECTRON_VOLT
HBAR_C_EV_NM = HBAR_C_EV_M * 1e9

# hbar*c in J m
HBAR_C_J_M = HBAR * SPEED_OF_LIGHT

# One eV^4 of Heaviside-Lorentz energy density, in J/m^3 (about 20.85)
J_PER_M3_PER_EV4 = ELECTRON_VOLT / HBAR_C_EV_M ** 3

#
# Defaults of the effective theory
#
# nM = 10 eV reproduces the magnitudes quoted for glasses
DEFAULT_NM_EV = 10.0

# Plausible ranges, outside of which a medium warns
M_RANGE_EV = (1.0, 100.0)
D1_MAX_ABS = 10.0
A_MAX_ABS = 1.0

# Fraction of M above which the theory is flagged as unreliable
VALIDITY_FRACTION = 0.5

# Root finding
ROOT_RTOL = 1e-14
ROOT_MAXITER = 100

# Quadrature
QUAD_RTOL = 1e-10
QUAD_LIMIT = 400

# Casimir regulator ladder: start (in units of L), number of rungs, fit degree
CASIMIR_CUTOFF_START = 0.1
CASIMIR_CUTOFF_STEPS = 6
CASIMIR_POLY_DEGREE = 3
CASIMIR_CONVERGENCE_RTOL = 1e-4

# Simulator
SIM_CFL_FACTOR = 0.5
SIM_INVERSION_TOL = 1e-12
SIM_INVERSION_MAXITER = 50
SIM_WRAP_TOL = 1e-12

DOCUMENTATION_URL = "https://github.com/dielfet/dielfet/blob/master/doc/README.md"
