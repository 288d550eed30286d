"""
Run defaults and the acceptance-threshold table
"""

from . import settings
from .acceptance import ACCEPTANCE_THRESHOLDS, ACCEPTANCE_VERSION, threshold

__all__ = ["settings", "ACCEPTANCE_THRESHOLDS", "ACCEPTANCE_VERSION", "threshold"]
