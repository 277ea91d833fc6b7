# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Graph engine: core graphs, patterns, local conditions, cycles, theorems, sweeps."""
