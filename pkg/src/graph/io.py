"""
Graph and tree text formats

Graph file (UTF-8, LF). Blank lines and lines starting with '#' are
ignored. First data line "<n> <m>", second data line the n weights, then
m lines "<u> <v>" with 0 <= u < v < n. The writer emits the canonical
form (no comments, edges sorted), so write(read(text)) == text for any
canonical text.

Tree file: the solve output format. An optional header line starting
with "internal" followed by "<u> <v>" lines.
"""

import logging
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.graph.core import VertexWeightedGraph, build_graph, Edge
from src.utils.errors import GraphFormatError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _data_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    return lines


def _ints(lineno: int, line: str, expected: Optional[int] = None) -> List[int]:
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}")
    if expected is not None and len(values) != expected:
        raise GraphFormatError(f"line {lineno}: expected {expected} integers, got {len(values)}")
    return values


def parse_graph(text: str, weight_scale: Optional[int] = None) -> VertexWeightedGraph:
    """
    Parse the graph text format; validation errors come from build_graph.

    With weight_scale set, the weight line may hold fixed-point decimals
    which are multiplied by weight_scale and must land on integers.
    """
    lines = _data_lines(text)
    if len(lines) < 2:
        raise GraphFormatError("graph text needs a header line and a weight line")

    n, m = _ints(*lines[0], expected=2)
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lines[0][0]}: invalid header n={n} m={m}")
    if weight_scale is None:
        weights = _ints(*lines[1], expected=n)
    else:
        tokens = lines[1][1].split()
        if len(tokens) != n:
            raise GraphFormatError(f"line {lines[1][0]}: expected {n} weights, got {len(tokens)}")
        weights = scale_decimal_weights(tokens, weight_scale)

    edge_lines = lines[2:]
    if len(edge_lines) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edge_lines)}")

    edges: List[Edge] = []
    for lineno, line in edge_lines:
        u, v = _ints(lineno, line, expected=2)
        if not u < v:
            raise GraphFormatError(f"line {lineno}: edge must satisfy u < v, got {u} {v}")
        edges.append((u, v))

    return build_graph(n, weights, edges)


def format_graph(g: VertexWeightedGraph) -> str:
    """Canonical text for g"""
    out = [f"{g.n} {g.m}", " ".join(str(w) for w in g.weights)]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_graph(path: PathLike, weight_scale: Optional[int] = None) -> VertexWeightedGraph:
    text = Path(path).read_text(encoding="utf-8")
    g = parse_graph(text, weight_scale)
    logger.debug(f"📦 Loaded graph {path}: n={g.n}, m={g.m}")
    return g


def write_graph(g: VertexWeightedGraph, path: PathLike) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_graph(g))
    logger.info(f"✅ Graph written to {path} (n={g.n}, m={g.m})")


def scale_decimal_weights(tokens: Sequence[str], scale: int) -> List[int]:
    """
    Convert fixed-point decimal weights to integers by multiplying with scale.

    Every weight must become an exact non-negative integer.
    """
    weights = []
    for tok in tokens:
        try:
            value = Decimal(tok) * scale
        except InvalidOperation:
            raise GraphFormatError(f"not a decimal weight: {tok!r}")
        if value != value.to_integral_value():
            raise GraphFormatError(f"weight {tok} is not representable at scale {scale}")
        weights.append(int(value))
    return weights


def parse_tree_edges(text: str) -> List[Edge]:
    """Read "u v" lines, skipping comments and a leading solve header"""
    edges = []
    for lineno, line in _data_lines(text):
        if line.startswith("internal"):
            continue
        u, v = _ints(lineno, line, expected=2)
        edges.append((u, v))
    return edges


def read_tree(path: PathLike) -> List[Edge]:
    return parse_tree_edges(Path(path).read_text(encoding="utf-8"))


def normalize_edges(edges: Iterable[Edge]) -> List[Edge]:
    """Orient every edge as (min, max) and sort lexicographically"""
    return sorted((min(u, v), max(u, v)) for u, v in edges)
