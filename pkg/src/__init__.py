# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""lcx - exhaustive checks of local connectivity and cycle extendability results."""

__version__ = "0.1.0"
