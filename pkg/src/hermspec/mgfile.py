"""Plain-text mixed graph files.

Format::

    # comment
    mixedgraph 4
    0 -- 1
    1 -> 2
    3 -> 2

The header names the vertex count; vertices are 0-based.  ``u -- v`` is an
undirected edge, ``u -> v`` an arc from u to v.  Comments start with ``#``
(whole line or trailing) and blank lines are ignored.  Serialization is
canonical: one line per edge, sorted by vertex pair, arcs written from
their tail.
"""

from __future__ import annotations

from .graphs import EdgeKind, MixedGraph, build

__all__ = ["MgParseError", "parse_mgfile", "serialize_mgfile"]


class MgParseError(ValueError):
    """Parse failure with a 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_mgfile(text: str) -> MixedGraph:
    lines = text.splitlines()
    n: int | None = None
    header_line = 0
    edges: list[tuple[int, int, EdgeKind]] = []
    seen: dict[tuple[int, int], int] = {}
    for i, raw in enumerate(lines, start=1):
        content = _strip(raw)
        if not content:
            continue
        if n is None:
            parts = content.split()
            if len(parts) != 2 or parts[0] != "mixedgraph":
                raise MgParseError(i, "expected header 'mixedgraph <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise MgParseError(i, f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise MgParseError(i, "vertex count must be nonnegative")
            header_line = i
            continue
        parts = content.split()
        if len(parts) != 3 or parts[1] not in ("--", "->"):
            raise MgParseError(i, f"expected 'u -- v' or 'u -> v', got {content!r}")
        try:
            u, v = int(parts[0]), int(parts[2])
        except ValueError:
            raise MgParseError(i, f"bad vertex in {content!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise MgParseError(i, f"vertex out of range 0..{n - 1} in {content!r}")
        if u == v:
            raise MgParseError(i, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MgParseError(
                i, f"duplicate edge {key[0]},{key[1]} (first on line {seen[key]})"
            )
        seen[key] = i
        if parts[1] == "--":
            edges.append((u, v, EdgeKind.UNDIRECTED))
        else:
            edges.append((u, v, EdgeKind.ARC_OUT))
    if n is None:
        raise MgParseError(max(len(lines), 1), "missing 'mixedgraph <n>' header")
    try:
        return build(n, edges)
    except ValueError as exc:  # pragma: no cover - guarded by checks above
        raise MgParseError(header_line, str(exc)) from None


def serialize_mgfile(m: MixedGraph) -> str:
    lines = [f"mixedgraph {m.n}"]
    for u, v, kind in m.edges():
        if kind == EdgeKind.UNDIRECTED:
            lines.append(f"{u} -- {v}")
        elif kind == EdgeKind.ARC_OUT:
            lines.append(f"{u} -> {v}")
        else:
            lines.append(f"{v} -> {u}")
    return "\n".join(lines) + "\n"
