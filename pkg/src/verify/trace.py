"""
Solver trace format

One event per line: "<kind> key=value key=value ...". Values never
contain spaces; vertex lists are comma-joined and the free pool is
written as "free".

Kinds emitted by the solvers:
    run       algo, n, m, root
    init      source, amount          initial charge in half-units
    tree      parent, child           DFS tree edges in discovery order
    back      lower, upper            backward edges
    rule      q, leaf, source, share  share is whole or half
    move      source, amount, from, to
    classify  leaf, held, status
    eset      u, v, leaf
    case      name, leaf
    remove    u, v
    add       u, v
    saturate  vertex, leaf
    bad       leaf, resolution[, cut]
    final     internal, total
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Union

from src.utils.errors import GraphFormatError

KINDS = (
    "run", "init", "tree", "back", "rule", "move", "classify",
    "eset", "case", "remove", "add", "saturate", "bad", "final",
)


def _text(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_text(v) for v in value)
    if isinstance(value, int) and not isinstance(value, bool) and value < 0:
        return "free"
    return str(value)


@dataclass
class TraceEvent:
    kind: str
    fields: Dict[str, str] = field(default_factory=dict)

    def get_int(self, key: str) -> int:
        """Integer field; "free" maps to -1"""
        value = self.fields[key]
        return -1 if value == "free" else int(value)

    def get(self, key: str, default: Optional[str] = None) -> Optional[str]:
        return self.fields.get(key, default)

    def to_line(self) -> str:
        parts = [self.kind] + [f"{k}={v}" for k, v in self.fields.items()]
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "TraceEvent":
        tokens = line.split()
        if not tokens or tokens[0] not in KINDS:
            raise GraphFormatError(f"unknown trace event: {line!r}")
        fields = {}
        for tok in tokens[1:]:
            key, sep, value = tok.partition("=")
            if not sep:
                raise GraphFormatError(f"malformed trace field {tok!r} in {line!r}")
            fields[key] = value
        return cls(tokens[0], fields)


class Trace:
    """Ordered list of solver events"""

    def __init__(self, events: Optional[Iterable[TraceEvent]] = None):
        self.events: List[TraceEvent] = list(events or [])

    def emit(self, kind: str, **fields) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown trace event kind {kind!r}")
        self.events.append(TraceEvent(kind, {k: _text(v) for k, v in fields.items()}))

    def move_hook(self, source: int, units: int, frm: int, to: int) -> None:
        """Ledger callback recording every charge move"""
        self.emit("move", source=source, amount=units, **{"from": frm, "to": to})

    def of_kind(self, kind: str) -> List[TraceEvent]:
        return [e for e in self.events if e.kind == kind]

    def __iter__(self) -> Iterator[TraceEvent]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def to_lines(self) -> List[str]:
        return [e.to_line() for e in self.events]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "Trace":
        return cls(TraceEvent.from_line(line) for line in lines if line.strip())

    def write(self, path: Union[str, Path]) -> None:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="\n") as f:
            f.write("\n".join(self.to_lines()) + "\n")

    @classmethod
    def read(cls, path: Union[str, Path]) -> "Trace":
        return cls.from_lines(Path(path).read_text(encoding="utf-8").split("\n"))
