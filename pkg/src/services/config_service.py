# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Sweep profile service.

Loads the YAML sweep profile (lcx.yaml); CLI flags override it.
"""

import logging
from pathlib import Path

import yaml

from ..config import get_settings
from ..models.profile import SweepProfile

logger = logging.getLogger(__name__)


def get_config_path() -> Path:
    return Path(get_settings().config_path)


def load_profile() -> SweepProfile:
    """Validated profile; built-in defaults when the file is missing or empty.

    A malformed profile raises ``pydantic.ValidationError`` (a ``ValueError``).
    """
    path = get_config_path()
    if not path.exists():
        return SweepProfile()
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    logger.debug(f"Loaded sweep profile from {path}")
    return SweepProfile.model_validate(data)
