import math
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
from colors import yellow

from wavesamp import MODULE_NAME, TOOL_VERSION


def _print_env_info(generator_name: str, run_id: str):
    print(
        f"{MODULE_NAME} version: {yellow(TOOL_VERSION)}\n"
        f"Generator: {yellow(generator_name)}, run: {yellow(run_id)}\n"
    )


def utcnow() -> datetime:
    """Get a timezone-aware datetime for _now_."""
    return datetime.now(tz=timezone.utc)


def utcnow_iso_str() -> str:
    """Get ISO formatted timezone-aware string for _now_."""
    return utcnow().isoformat()


def format_w(w: float) -> str:
    """Format a frequency as a multiple of π, e.g. `0.75π`."""
    return f"{w / math.pi:.6g}π"


def json_encoder(obj: Any):
    """Handle additional object types for `json.dump*` encoding."""

    if isinstance(obj, Enum):
        return obj.value

    if isinstance(obj, Path):
        return str(obj)

    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]

    if isinstance(obj, np.integer):
        return int(obj)

    if isinstance(obj, np.floating):
        return float(obj)

    if isinstance(obj, np.ndarray):
        return obj.tolist()

    return obj
