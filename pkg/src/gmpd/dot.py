"""Writer for the DOT dialect shared by the diagram-emitting commands."""

from __future__ import annotations

from typing import Iterable


def digraph(name: str, nodes: Iterable[str], edges: Iterable[tuple[str, str]]) -> str:
    """Render a digraph; callers are responsible for deterministic ordering."""
    lines = [f"digraph {name} {{"]
    lines.extend(f'  "{node}";' for node in nodes)
    lines.extend(f'  "{a}" -> "{b}";' for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
