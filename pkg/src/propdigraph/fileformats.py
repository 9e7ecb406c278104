"""Text file formats for digraphs, witnesses, and 3-CNF instances.

Digraph files::

    # comment
    digraph n=4
    1 -> 2
    2 -> 1
    u -> v      # named vertices allowed; first appearance picks an index

Witness files::

    n: 4
    alpha: 1/2
    zones:
      1: 28
      1,2: 13
    derived:
      size 1: 118
      intersection 1,2: 64

The derived block is informational and ignored on input.
"""

from __future__ import annotations

from fractions import Fraction

from .digraph import Digraph
from .errors import PropDigraphError
from .zonemap import ZoneMap, indices_of


class FileFormatError(PropDigraphError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message, lineno):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_digraph_file(text: str):
    """Parse a digraph file; returns (Digraph, names).

    ``names[i-1]`` is the label used in the file for vertex i (its own
    number for plain integer vertices).
    """
    n = None
    edges = set()
    names: dict[str, int] = {}
    lineno = 0

    def resolve(token: str, lineno: int) -> int:
        if token.isdigit():
            v = int(token)
            if not (1 <= v <= n):
                raise FileFormatError(f"vertex {v} out of range 1..{n}", lineno)
            return v
        if token in names:
            return names[token]
        used = set(names.values())
        for v in range(1, n + 1):
            if v not in used:
                names[token] = v
                return v
        raise FileFormatError(f"no free index for vertex name {token!r}", lineno)

    for raw in text.splitlines():
        lineno += 1
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "digraph" or not parts[1].startswith("n="):
                raise FileFormatError("expected header 'digraph n=<N>'", lineno)
            try:
                n = int(parts[1][2:])
            except ValueError:
                raise FileFormatError("vertex count must be an integer", lineno)
            if n < 0:
                raise FileFormatError("vertex count must be nonnegative", lineno)
            continue
        parts = line.split("->")
        if len(parts) != 2:
            raise FileFormatError("expected an edge line 'u -> v'", lineno)
        u = resolve(parts[0].strip(), lineno)
        v = resolve(parts[1].strip(), lineno)
        if u == v:
            raise FileFormatError(f"self-loop at vertex {parts[0].strip()}", lineno)
        if (u, v) in edges:
            raise FileFormatError(f"duplicate edge {line!r}", lineno)
        edges.add((u, v))
    if n is None:
        raise FileFormatError("missing 'digraph n=<N>' header", lineno or 1)

    labels = [str(i) for i in range(1, n + 1)]
    for name, index in names.items():
        labels[index - 1] = name
    return Digraph(n, frozenset(edges)), labels


def serialize_digraph(g: Digraph, labels=None) -> str:
    labels = labels or [str(i) for i in range(1, g.n + 1)]
    lines = [f"digraph n={g.n}"]
    for u, v in sorted(g.edges):
        lines.append(f"{labels[u - 1]} -> {labels[v - 1]}")
    return "\n".join(lines) + "\n"


def parse_fraction(text: str, open_unit_interval: bool = True) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a fraction: {text!r}") from exc
    if open_unit_interval and not (0 < value < 1):
        raise ValueError(f"fraction must lie strictly in (0, 1): {text!r}")
    return value


def serialize_witness(z: ZoneMap, alpha: Fraction, labels=None,
                      derived: bool = True) -> str:
    lines = []
    if labels and any(labels[i] != str(i + 1) for i in range(z.n)):
        for i, label in enumerate(labels, start=1):
            lines.append(f"# vertex {i} = {label}")
    lines.append(f"n: {z.n}")
    lines.append(f"alpha: {alpha}")
    lines.append("zones:")
    zones = z.nonzero_zones()
    for mask in sorted(zones):
        key = ",".join(str(i) for i in indices_of(mask))
        lines.append(f"  {key}: {zones[mask]}")
    if derived and z.n:
        lines.append("derived:")
        lines.append(f"  total: {z.total_points}")
        for i in range(1, z.n + 1):
            lines.append(f"  size {i}: {z.set_size(i)}")
        for i in range(1, z.n + 1):
            for j in range(i + 1, z.n + 1):
                lines.append(f"  intersection {i},{j}: {z.pair_intersection(i, j)}")
    return "\n".join(lines) + "\n"


def parse_witness_file(text: str):
    """Parse a witness file; returns (ZoneMap, alpha)."""
    n = None
    alpha = None
    zones: dict[tuple[int, ...], int] = {}
    section = None
    lineno = 0
    for raw in text.splitlines():
        lineno += 1
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped == "zones:":
            section = "zones"
            continue
        if stripped == "derived:":
            section = "derived"
            continue
        if ":" not in stripped:
            raise FileFormatError("expected 'key: value'", lineno)
        key, _, value = stripped.partition(":")
        key, value = key.strip(), value.strip()
        if key == "n":
            try:
                n = int(value)
            except ValueError:
                raise FileFormatError("n must be an integer", lineno)
            section = None
        elif key == "alpha":
            try:
                alpha = parse_fraction(value)
            except ValueError as exc:
                raise FileFormatError(str(exc), lineno)
            section = None
        elif section == "zones":
            if n is None:
                raise FileFormatError("zones listed before n", lineno)
            try:
                indices = tuple(int(part) for part in key.split(","))
                count = int(value)
            except ValueError:
                raise FileFormatError(f"malformed zone entry {stripped!r}", lineno)
            if sorted(set(indices)) != list(indices):
                raise FileFormatError("zone indices must be ascending", lineno)
            if indices in zones:
                raise FileFormatError(f"duplicate zone {key!r}", lineno)
            if count < 0:
                raise FileFormatError("zone cardinality must be nonnegative", lineno)
            if not all(1 <= i <= n for i in indices):
                raise FileFormatError(f"zone index out of range 1..{n}", lineno)
            zones[indices] = count
        elif section == "derived":
            continue
        else:
            raise FileFormatError(f"unknown key {key!r}", lineno)
    if n is None:
        raise FileFormatError("missing 'n' entry", lineno or 1)
    if alpha is None:
        raise FileFormatError("missing 'alpha' entry", lineno or 1)
    return ZoneMap(n, zones), alpha


def parse_cnf_file(text: str):
    """Parse a DIMACS-style CNF; every clause must have exactly 3 literals."""
    literals: list[int] = []
    lineno = 0
    for raw in text.splitlines():
        lineno += 1
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            continue  # header is informational
        for token in line.split():
            try:
                literals.append(int(token))
            except ValueError:
                raise FileFormatError(f"not a literal: {token!r}", lineno)
    clauses = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            if len(current) != 3:
                raise FileFormatError(
                    f"clause {current} does not have exactly 3 literals", lineno
                )
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        if len(current) != 3:
            raise FileFormatError(
                f"clause {current} does not have exactly 3 literals", lineno
            )
        clauses.append(tuple(current))
    return clauses
