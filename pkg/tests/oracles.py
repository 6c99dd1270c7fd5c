"""Frozen reference values.

Each table was produced by an independent route (plain enumeration in
codensity.oracles, or a count by hand) and agreed with the library before
being frozen here.  Tests compare against these constants so a regression
in either route shows up.
"""

# Eilenberg-Moore algebra structures on a set of size n, n = 0, 1, 2, ...
# powerset: complete lattices on n labelled points (4 points: 24 chains + 12 diamonds).
# affine over Z/2: affine F2-spaces, so 1 on sizes 0, 1, 2, 4 and none on 3.
# maybe: a choice of base point.  nonempty powerset: join-semilattices (3 points: 6 chains + 3 vees).
# writer over Z/2: involutions.
ALGEBRA_COUNTS = {
    "powerset": [0, 1, 2, 6, 36],
    "affine": [1, 1, 1, 0, 1],
    "maybe": [0, 1, 2, 3, 4],
    "identity": [1, 1, 1, 1, 1],
    "nonempty_powerset": [1, 1, 2, 9],
    "writer": [1, 1, 2, 4],
}

# |T(n)| for n = 0..4
MONAD_SIZES = {
    "powerset": [1, 2, 4, 8, 16],
    "affine": [0, 1, 2, 4, 8],
    "maybe": [1, 2, 3, 4, 5],
    "identity": [0, 1, 2, 3, 4],
}

# Chains of k monotone maps among ordinals of size 0..B, indexed [k][B].
CHAIN_COUNTS = [[1, 2, 3, 4, 5], [1, 3, 10, 35, 126], [1, 4, 36, 428, 5500]]
INJECTIVE_CHAIN_COUNTS = [[1, 2, 3, 4, 5], [1, 3, 7, 15, 31], [1, 4, 13, 40, 121]]
CHAIN_COUNT_LEVEL3_B4 = 250871

# monotone maps [n] -> [m], indexed [n][m]
MONOTONE = [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4], [0, 1, 3, 6, 10], [0, 1, 4, 10, 20], [0, 1, 5, 15, 35]]

# simplices per level 0..3
NERVE_CHAIN3 = [3, 6, 10, 15]
DELTA2 = [3, 6, 10, 15]
BOUNDARY_DELTA2 = [3, 6, 9, 12]
HORN_2_0 = [3, 5, 7, 9]

# codensity values over finite sets
T_OF_3 = {(2,): 8, (1, 2, 4): 3}

# basis chains of N(Delta_+) per level, B = 3
BASIS_B3 = {0: 1, 1: 4, 2: 35}

# nondegenerate generators and horn generators, k = 2, B = 4
NONDEG_B4 = [1, 4, 117]
HORN_GENS_B4 = [0, 1, 3, 114]

# generators added per stage of the skeletal filtration, N = 3, B = 3
FILTRATION_N3_B3 = {1: [3, 6, 9], 2: [28, 84], 3: [334]}
ANODYNE_H_N3_B3 = [0, 1, 2, 26]

# R_a(Z/2) on sizes 0..4
AFFINE_A = [0, 1, 2, 4]
AFFINE_R = [0, 1, 2, 3, 4]
