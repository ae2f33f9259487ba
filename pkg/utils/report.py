"""
Report rendering: canonical JSON documents and a plain text view of them.
"""

import json
from typing import Any, List

from config.config import Config


def render_json(document: dict, settings=Config) -> str:
    """Serialize with sorted keys so identical runs give identical bytes."""
    document = dict(document, schema_version=settings.SCHEMA_VERSION)
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def _scalar_text(value: dict) -> str:
    kind = value.get("type")
    if kind == "neg_infinity":
        return "-inf"
    if kind == "rational":
        return value["value"]
    if kind == "root":
        return f"root({value['modulus']})"
    if kind == "generic":
        return "generic"
    if kind == "undetermined":
        return f">= {value['lower_bound']}"
    return None


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        text = _scalar_text(value)
        if text is not None:
            return [pad + text]
        out = []
        for key in sorted(value):
            item = value[key]
            inline = _inline(item)
            if inline is not None:
                out.append(f"{pad}{key}: {inline}")
            else:
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, indent + 1))
        return out
    if isinstance(value, list):
        out = []
        for item in value:
            inline = _inline(item)
            out.extend([f"{pad}- {inline}"] if inline is not None else _lines(item, indent + 1))
        return out
    return [pad + _inline(value)]


def _inline(value: Any):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, dict):
        return _scalar_text(value)
    if isinstance(value, list) and all(_inline(v) is not None for v in value):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    return None


def render_text(document: dict) -> str:
    """Indented key: value lines; exponents print as p/q or -inf."""
    return "\n".join(_lines(document, 0))
