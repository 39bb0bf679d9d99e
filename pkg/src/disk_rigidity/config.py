# file: src/disk_rigidity/config.py
"""Configuration constants and run-configuration loading."""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values, load_dotenv

from .exceptions import ConfigurationError

# Load environment variables from .env file if it exists
load_dotenv()

# Reproducibility
SEED: int = int(os.environ.get("DISKRIG_SEED", "42"))

# Tolerances
JET_TOL: float = float(os.environ.get("DISKRIG_JET_TOL", "1e-8"))
ODE_TOL: float = float(os.environ.get("DISKRIG_ODE_TOL", "1e-10"))
VERDICT_TOL: float = float(os.environ.get("DISKRIG_VERDICT_TOL", "1e-8"))
SIGN_TOL: float = float(os.environ.get("DISKRIG_SIGN_TOL", "1e-9"))

# Sample counts
BOUNDARY_SAMPLES: int = int(os.environ.get("DISKRIG_BOUNDARY_SAMPLES", "4096"))
INCLUSION_SAMPLES: int = int(os.environ.get("DISKRIG_INCLUSION_SAMPLES", "512"))
BOUND_SAMPLES: int = int(os.environ.get("DISKRIG_BOUND_SAMPLES", "500"))
INTERIOR_SAMPLES: int = 2000
VALIDATION_GRID_SIZE: int = 200
VALIDATION_RIM_SIZE: int = 512
VALIDATION_RIM_RADIUS: float = 0.999
PROBE_COUNT: int = 256

# Radial ladder r_j = 1 - 2^-j
LADDER_MIN: int = 4
LADDER_MAX: int = int(os.environ.get("DISKRIG_LADDER_MAX", "40"))
# Rungs used for profiles of quantities computed by cancellation (K, K~)
PROFILE_LADDER_MAX: int = 12
RICHARDSON_ORDER: int = 3
LIMIT_AGREEMENT: float = 1e-8
RAY_AGREEMENT: float = 1e-6
STOLZ_APERTURE: float = 2.0
RESIDUAL_RATIO_MAX: float = 1e-4
RESIDUAL_RUNGS: int = 8
# Deepest rung used by the least-squares jet fit
FIT_LADDER_MAX: int = 24

# Geometry
TANGENCY_ARC: float = 1e-3
INCLUSION_MARGIN: float = 1e-9
HAUSDORFF_TOL: float = 1e-8

# Mobius / LFT detection
DET_MIN: float = 1e-12
CROSS_RATIO_TOL: float = 1e-10
LFT_FIT_TOL: float = 1e-9
LFT_RANDOM_TUPLES: int = 8
LFT_FIT_PROBES: int = 64
MAX_INT_POWER: int = 16

# Dynamics
MAX_ITERATIONS: int = 100_000
DW_TOL: float = 1e-12
ELLIPTIC_TOL: float = 1e-9
PARABOLIC_TOL: float = 1e-8
ODE_MAX_STEP: float = 0.1
DISK_GUARD: float = 1e-14
MIN_STEP: float = 1e-14
FLOW_LADDER = range(6, 21)

# Output
OUTPUT_DIR: Path = Path(os.environ.get("DISKRIG_OUTPUT_DIR", "."))
CSV_DIGITS: int = 17

ROLES = ("selfmap", "generator")

_FLOAT_KEYS = {"tol_jet", "tol_ode", "tol_verdict", "t_end"}
_INT_KEYS = {"seed", "samples"}
_TEXT_KEYS = {"subject", "role", "tau", "k_list", "out", "z0"}
KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | _TEXT_KEYS


def parse_k_list(text: Optional[str]) -> List[float]:
    """Parses a comma separated list of finite positive horocycle parameters."""
    if not text:
        return []
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            value = float(item)
        except ValueError:
            raise ConfigurationError(f"Invalid k value '{item}' in k-list.")
        if not 0 < value < float("inf"):
            raise ConfigurationError(f"k must be finite and positive, got {value}.")
        values.append(value)
    return values


def load_run_config_file(path: Path) -> Dict[str, Any]:
    """
    Reads a flat key=value run configuration (dotenv syntax) and returns the
    recognised keys with typed values. Keys use the CLI flag names with
    underscores, e.g. ``tol_jet=1e-9``.
    """
    if not Path(path).is_file():
        raise ConfigurationError(f"Config file not found: {path}")
    raw = dotenv_values(path)
    values: Dict[str, Any] = {}
    for key, text in raw.items():
        key = key.strip().lower().replace("-", "_")
        if key not in KNOWN_KEYS:
            raise ConfigurationError(f"Unknown key '{key}' in config file {path}.")
        if text is None:
            raise ConfigurationError(f"Key '{key}' in {path} has no value.")
        try:
            if key in _FLOAT_KEYS:
                values[key] = float(text)
            elif key in _INT_KEYS:
                values[key] = int(text)
            else:
                values[key] = text.strip()
        except ValueError:
            raise ConfigurationError(f"Invalid value '{text}' for key '{key}' in {path}.")
    return values
