# Copyright 2026 idemproblem Contributors. All rights reserved.
#
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

# Desk-scale caps; every capped function takes its cap as a keyword argument.
MAX_CLOSURE = 100000
MAX_SEMILATTICE_RANK = 20
MAX_SYMMETRIC_DEGREE = 5
MAX_ISOMORPHISM_SIZE = 64
MAX_ORACLE_SIZE = 6
# |S¹|² context profiles are materialised per element
MAX_CONTEXT_SIZE = 2000
MAX_BOUND_EXPONENT = 62

DEFAULT_SEED = 20120101
# seeds are unsigned 64-bit
SEED_LIMIT = 2**64
DEFAULT_TRIALS = 64
DEFAULT_WORKERS = 4
