"""Text format for structure files.

Grammar (tokens are whitespace separated; '#' comments to end of line):

    diring NAME                      | module NAME over RINGNAME
    elements LABEL LABEL ...         (one line)
    table add    ... n*n entries ... end
    table lprod  ...            end  (dirings)
    table rprod  ...            end
    table lact   ... |R|*n ...  end  (modules)
    table ract   ...            end

Entries are element labels; lact/ract rows follow the diring's element
order with the zero element first (the order serialization emits).
Modules name their diring; the caller resolves it from ``--ring`` or a
sibling ``<RINGNAME>.diring`` file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .diring import DiringTable, verify_left_diring
from .groups import FiniteAbelianGroup, validate_abelian_group
from .modules import LeftModuleTable, verify_module
from .validation import ValidationReport


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


Tok = tuple[str, int, int]


@dataclass
class StructureFile:
    kind: str                   # "diring" | "module"
    name: str
    over: str | None
    elements: list[str]
    tables: dict[str, list[Tok]] = field(default_factory=dict)

    def table_labels(self, name: str) -> list[str]:
        return [t[0] for t in self.tables[name]]


_DIRING_TABLES = ("add", "lprod", "rprod")
_MODULE_TABLES = ("add", "lact", "ract")


def _tokenize(text: str) -> list[Tok]:
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            out.append((tok, ln, col + 1))
            col += len(tok)
    return out


def parse(text: str) -> StructureFile:
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty file", 1, 1)
    pos = 0

    def take(what: str) -> Tok:
        nonlocal pos
        if pos >= len(toks):
            ln, col = toks[-1][1], toks[-1][2]
            raise ParseError(f"unexpected end of file, expected {what}", ln, col)
        tok = toks[pos]
        pos += 1
        return tok

    head, ln, col = take("'diring' or 'module'")
    if head not in ("diring", "module"):
        raise ParseError(f"expected 'diring' or 'module', got {head!r}", ln, col)
    name = take("structure name")[0]
    over = None
    if head == "module":
        kw, ln, col = take("'over'")
        if kw != "over":
            raise ParseError(f"expected 'over', got {kw!r}", ln, col)
        over = take("diring name")[0]

    kw, ln, col = take("'elements'")
    if kw != "elements":
        raise ParseError(f"expected 'elements', got {kw!r}", ln, col)
    elements: list[str] = []
    while pos < len(toks) and toks[pos][1] == ln:
        elements.append(take("element label")[0])
    if not elements:
        raise ParseError("no element labels on the 'elements' line", ln, col)
    if len(set(elements)) != len(elements):
        raise ParseError("element labels must be distinct", ln, col)

    wanted = _DIRING_TABLES if head == "diring" else _MODULE_TABLES
    tables: dict[str, list[Tok]] = {}
    while pos < len(toks):
        kw, ln, col = take("'table'")
        if kw != "table":
            raise ParseError(f"expected 'table', got {kw!r}", ln, col)
        tname, ln, col = take("table name")
        if tname not in wanted:
            raise ParseError(f"unknown table {tname!r} for a {head}", ln, col)
        if tname in tables:
            raise ParseError(f"duplicate table {tname!r}", ln, col)
        entries: list[Tok] = []
        while True:
            tok = take("table entry or 'end'")
            if tok[0] == "end":
                break
            entries.append(tok)
        tables[tname] = entries
    for tname in wanted:
        if tname not in tables:
            ln, col = toks[-1][1], toks[-1][2]
            raise ParseError(f"missing table {tname!r}", ln, col)
    return StructureFile(kind=head, name=name, over=over,
                         elements=elements, tables=tables)


def _index_table(sf: StructureFile, tname: str, rows: int, cols: int,
                 entry_labels: list[str]) -> np.ndarray:
    entries = sf.tables[tname]
    if len(entries) != rows * cols:
        ln, col = entries[-1][1:] if entries else (1, 1)
        raise ParseError(
            f"table {tname!r} needs {rows}x{cols} = {rows * cols} entries, "
            f"got {len(entries)}", ln, col)
    index = {lab: i for i, lab in enumerate(entry_labels)}
    out = np.zeros((rows, cols), dtype=np.int16)
    for k, (lab, ln, col) in enumerate(entries):
        if lab not in index:
            raise ParseError(f"undeclared label {lab!r} in table {tname!r}",
                             ln, col)
        out[divmod(k, cols)] = index[lab]
    return out


def build_group(sf: StructureFile) -> FiniteAbelianGroup | ValidationReport:
    n = len(sf.elements)
    add = _index_table(sf, "add", n, n, sf.elements)
    return validate_abelian_group(sf.elements, add)


def _normalizer(group: FiniteAbelianGroup, file_elements: list[str]):
    """(file-to-group value map, group-to-file index map) after validation
    may have moved the zero element to index 0."""
    at = {lab: i for i, lab in enumerate(group.names)}
    f2g = np.array([at[lab] for lab in file_elements], dtype=np.int16)
    g2f = np.argsort(f2g)
    return f2g, g2f


def build_diring(sf: StructureFile) -> DiringTable | ValidationReport:
    if sf.kind != "diring":
        raise ValueError("not a diring file")
    group = build_group(sf)
    if isinstance(group, ValidationReport):
        return group
    n = len(sf.elements)
    f2g, g2f = _normalizer(group, sf.elements)
    lprod = f2g[_index_table(sf, "lprod", n, n, sf.elements)][np.ix_(g2f, g2f)]
    rprod = f2g[_index_table(sf, "rprod", n, n, sf.elements)][np.ix_(g2f, g2f)]
    return verify_left_diring(group, lprod, rprod)


def build_module(sf: StructureFile, ring: DiringTable
                 ) -> LeftModuleTable | ValidationReport:
    if sf.kind != "module":
        raise ValueError("not a module file")
    carrier = build_group(sf)
    if isinstance(carrier, ValidationReport):
        return carrier
    n = len(sf.elements)
    f2g, g2f = _normalizer(carrier, sf.elements)
    lact = f2g[_index_table(sf, "lact", ring.order, n, sf.elements)][:, g2f]
    ract = f2g[_index_table(sf, "ract", ring.order, n, sf.elements)][:, g2f]
    return verify_module(ring, carrier, lact, ract)


def load_file(path: str | Path) -> StructureFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def resolve_ring_path(path: str | Path, sf: StructureFile,
                      ring_path: str | Path | None) -> Path:
    if ring_path is not None:
        return Path(ring_path)
    sibling = Path(path).parent / f"{sf.over}.diring"
    if sibling.exists():
        return sibling
    raise FileNotFoundError(
        f"cannot resolve diring {sf.over!r}; pass --ring or place "
        f"{sibling.name} next to the module file")


def load_diring(path: str | Path) -> tuple[str, DiringTable | ValidationReport]:
    sf = load_file(path)
    if sf.kind != "diring":
        raise ValueError(f"{path} is not a diring file")
    return sf.name, build_diring(sf)


def load_structure(path: str | Path, ring_path: str | Path | None = None):
    """(kind, name, structure-or-report) from a file of either kind."""
    sf = load_file(path)
    if sf.kind == "diring":
        return "diring", sf.name, build_diring(sf)
    rname, ring = load_diring(resolve_ring_path(path, sf, ring_path))
    if isinstance(ring, ValidationReport):
        raise ValueError(f"referenced diring {rname!r} is invalid:\n"
                         f"{ring.summary()}")
    return "module", sf.name, build_module(sf, ring)


# ---------------------------------------------------------------------------
# serialization

def _format_table(rows) -> str:
    return "\n".join("  " + " ".join(row) for row in rows)


def serialize_diring(D: DiringTable, name: str) -> str:
    names = D.names
    out = [f"diring {name}", "elements " + " ".join(names)]
    for tname, t in (("add", D.group.add), ("lprod", D.lprod), ("rprod", D.rprod)):
        out.append(f"table {tname}")
        out.append(_format_table([[names[int(v)] for v in row] for row in t]))
        out.append("end")
    return "\n".join(out) + "\n"


def serialize_module(M: LeftModuleTable, name: str, ring_name: str) -> str:
    names = M.carrier.names
    out = [f"module {name} over {ring_name}",
           "elements " + " ".join(names)]
    for tname, t in (("add", M.carrier.add), ("lact", M.lact), ("ract", M.ract)):
        out.append(f"table {tname}")
        out.append(_format_table([[names[int(v)] for v in row] for row in t]))
        out.append("end")
    return "\n".join(out) + "\n"
