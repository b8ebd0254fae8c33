#!/usr/bin/env python3
"""
Result envelope and its JSON / text renderings.

Every command returns a CommandResult. The envelope written to stdout
carries the schema name, the command, the status, the payload and the
format versions; the elapsed time is included only on request so that
identical invocations produce identical bytes.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, TextIO

from .. import __version__
from ..congruence import CERTIFICATE_FORMAT
from ..errors import EXIT_OK
from ..modforms import CACHE_FORMAT

SCHEMA = "borcherds.result/1"


@dataclass
class CommandResult:
    """Outcome of one command."""

    command: str
    payload: Dict[str, Any] = field(default_factory=dict)
    status: str = "ok"
    exit_code: int = EXIT_OK
    timing_ms: Optional[float] = None


def exact(value: Any) -> Any:
    """
    Make a payload JSON-exact: integers and fractions become strings,
    containers are converted recursively. Booleans, None, floats and
    strings are kept.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return str(value)


def envelope(result: CommandResult, show_timing: bool = False) -> Dict[str, Any]:
    data = {
        "schema": SCHEMA,
        "command": result.command,
        "status": result.status,
        "payload": exact(result.payload),
        "versions": {
            "borcherds": __version__,
            "cache_format": CACHE_FORMAT,
            "certificate_format": CERTIFICATE_FORMAT,
        },
    }
    if show_timing and result.timing_ms is not None:
        data["timing_ms"] = round(result.timing_ms, 3)
    return data


def _text_lines(value: Any, indent: str = "") -> list:
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{indent}{key}:")
                lines.extend(_text_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_text_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}- {_scalar(item)}")
    else:
        lines.append(f"{indent}{_scalar(value)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return "(none)"
    return str(value)


def render(result: CommandResult, output_format: str = "json", show_timing: bool = False) -> str:
    data = envelope(result, show_timing)
    if output_format == "json":
        return json.dumps(data, indent=2, sort_keys=True)
    lines = [f"{data['command']}: {data['status']}"]
    lines.extend(_text_lines(data["payload"], "  "))
    if "timing_ms" in data:
        lines.append(f"  time: {data['timing_ms']} ms")
    return "\n".join(lines)


def emit(result: CommandResult, stream: TextIO, output_format: str = "json", show_timing: bool = False) -> None:
    stream.write(render(result, output_format, show_timing) + "\n")
    stream.flush()
