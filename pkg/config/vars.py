# Convfix Lab
# Configuration Variables
# October 2026

VERSION = "1.0.0" # Lab version, embedded in every report header

# Group tables
MAX_GROUP_ORDER = 256
MAX_CYCLIC_ORDER = 256
MAX_DIHEDRAL_N = 128
MAX_SYMMETRIC_N = 5

DEFAULT_GROUPS = [
    "cyclic:2",
    "cyclic:4",
    "cyclic:6",
    "product(cyclic:2,cyclic:2)",
    "product(cyclic:2,cyclic:3)",
    "dihedral:4",
    "quaternion8",
    "symmetric:3",
    "symmetric:4",
]

# Tolerances
RANK_TOL = 1e-10     # relative singular-value threshold (tol * sigma_max)
IDEM_TOL = 1e-9      # tv-norm tolerance for idempotents
Z_TOL = 1e-9         # |omega(s) - 1| tolerance for Z sets
CESARO_EPS = 1e-9    # checkpoint residual for Cesaro verdicts
DECAY_TOL = 0.05     # windowed weak* decay threshold on the lattice
MUKHERJEA_DECAY = 1e-2  # Cesaro pairing threshold for dual functions
PHASE_TOL = 1e-9     # phase consistency when extending characters
ANGLE_TOL = 1e-8     # principal-angle tolerance for subspace comparisons
PSD_TOL = 1e-10      # minimum Gram eigenvalue accepted as positive semidefinite

# Limits
N_MAX = 4096          # last Cesaro checkpoint
WINDOW = 64           # half-width of the lattice test window
SUPPORT_CAP = 20000   # maximum atoms of a lattice measure
MAX_SQUARINGS = 64    # convolution squarings when refining a Cesaro snapshot
SPARSE_CLEANUP = 1e-15  # relative modulus below which lattice atoms are dropped
LATTICE_DRAW_RADIUS = 4  # random lattice measures live on [-radius, radius]

# Runner
DRAWS_PER_GROUP = 200
SEED = 0
WORKERS = 4

SUITES = (
    "measure",
    "fixedpoint",
    "ideals",
    "lp",
    "lattice",
    "dual",
    "abelian_prop",
    "mukherjea_dual",
)

# JSON output
JSON_DIGITS = 17
