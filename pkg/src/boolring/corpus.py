"""Statement catalogs, shallow text coding, and statement rendering.

A catalog fixes the statement order, hence the pext width. Texts are coded by
case-insensitive regular expressions attached to each statement; manual
annotations override the pattern result for a whole document.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DuplicateStatement, EmptyCatalog, MalformedCatalog, PatternError, WidthMismatch
from .pext import Pext

PathLike = Union[str, Path]

MANUAL = "manual"


@dataclass(frozen=True)
class Statement:
    id: int
    text: str
    patterns: Tuple[str, ...] = ()


@dataclass(frozen=True)
class StatementCatalog:
    statements: Tuple[Statement, ...]
    _compiled: Tuple[Tuple[re.Pattern, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.statements:
            raise EmptyCatalog("catalog has no statements")
        seen = set()
        for n, st in enumerate(self.statements, start=1):
            if st.id != n:
                raise MalformedCatalog(f"statement ids must be 1..n in order; got {st.id} at position {n}")
            if not st.text.strip():
                raise MalformedCatalog(f"statement {st.id} has empty text")
            if st.text in seen:
                raise DuplicateStatement(f"statement {st.id} duplicates text {st.text!r}")
            seen.add(st.text)
        compiled = []
        for st in self.statements:
            pats = []
            for pat in st.patterns:
                try:
                    pats.append(re.compile(pat, re.IGNORECASE))
                except re.error as exc:
                    raise PatternError(st.id, pat, str(exc)) from None
            compiled.append(tuple(pats))
        object.__setattr__(self, "_compiled", tuple(compiled))

    def __len__(self) -> int:
        return len(self.statements)

    @property
    def width(self) -> int:
        return len(self.statements)

    def __getitem__(self, statement_id: int) -> Statement:
        return self.statements[statement_id - 1]

    def to_json(self) -> dict:
        return {"statements": [{"id": s.id, "text": s.text, "patterns": list(s.patterns)} for s in self.statements]}


@dataclass(frozen=True)
class CodedText:
    doc_id: str
    pext: Pext
    matched: Tuple[Optional[str], ...]


def load_catalog(source: Union[PathLike, Mapping]) -> StatementCatalog:
    """Build a catalog from a ``{"statements": [...]}`` document or a JSON file holding one.

    ``id`` may be omitted, in which case statements are numbered in order.
    """
    if isinstance(source, Mapping):
        doc = source
    else:
        try:
            doc = json.loads(Path(source).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise MalformedCatalog(f"{source}: {exc}") from None
    entries = doc.get("statements") if isinstance(doc, Mapping) else None
    if not isinstance(entries, list):
        raise MalformedCatalog("catalog must be an object with a 'statements' list")
    if not entries:
        raise EmptyCatalog("catalog has no statements")
    statements = []
    for n, entry in enumerate(entries, start=1):
        if isinstance(entry, str):
            entry = {"text": entry}
        if not isinstance(entry, Mapping) or not isinstance(entry.get("text"), str):
            raise MalformedCatalog(f"statement #{n} needs a 'text' string")
        patterns = entry.get("patterns", [])
        if not isinstance(patterns, list) or not all(isinstance(p, str) for p in patterns):
            raise MalformedCatalog(f"statement #{n}: 'patterns' must be a list of strings")
        statements.append(Statement(int(entry.get("id", n)), entry["text"], tuple(patterns)))
    return StatementCatalog(tuple(statements))


def code_text(cat: StatementCatalog, doc: str, doc_id: str = "", annotation: Optional[Pext] = None) -> CodedText:
    """Digit ``i`` is 1 iff a pattern of statement ``i`` matches ``doc``.

    A manual ``annotation`` replaces the pattern result entirely.
    """
    if annotation is not None:
        if annotation.width != cat.width:
            raise WidthMismatch(f"annotation for {doc_id!r} has width {annotation.width}, catalog has {cat.width}")
        return CodedText(doc_id, annotation, tuple(MANUAL if annotation[i] else None for i in range(1, cat.width + 1)))
    hits: List[Optional[str]] = []
    for pats in cat._compiled:
        hits.append(next((p.pattern for p in pats if p.search(doc)), None))
    pext = Pext.from_statements((i for i, h in enumerate(hits, start=1) if h is not None), cat.width)
    return CodedText(doc_id, pext, tuple(hits))


def rho(cat: StatementCatalog, a: Pext) -> Optional[str]:
    """The lowest-index statement contained in ``a``; ``None`` for the zero pext."""
    if a.width != cat.width:
        raise WidthMismatch(f"pext width {a.width} != catalog size {cat.width}")
    first = next(a.statements(), None)
    return None if first is None else cat[first].text


def render(cat: StatementCatalog, a: Pext) -> str:
    text = rho(cat, a)
    return "NULL" if text is None else text


def read_corpus(path: PathLike) -> List[Tuple[str, str]]:
    """``(doc_id, text)`` pairs from a directory of ``.txt`` files or a JSON-lines file."""
    path = Path(path)
    if path.is_dir():
        return [(p.stem, p.read_text(encoding="utf-8")) for p in sorted(path.glob("*.txt"))]
    docs = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            docs.append((str(rec["id"]), rec["text"]))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ValueError(f"{path}:{lineno}: bad corpus record ({exc})") from None
    return docs


def read_annotations(path: PathLike) -> Dict[str, Pext]:
    out: Dict[str, Pext] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            out[str(rec["doc_id"])] = Pext.parse(rec["bits"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: bad annotation ({exc})") from None
    return out


def code_corpus(
    cat: StatementCatalog, docs: Iterable[Tuple[str, str]], annotations: Optional[Mapping[str, Pext]] = None
) -> List[CodedText]:
    """Code every document; annotated ids absent from ``docs`` are appended in annotation order."""
    annotations = dict(annotations or {})
    coded = []
    seen = set()
    for doc_id, text in docs:
        coded.append(code_text(cat, text, doc_id, annotations.get(doc_id)))
        seen.add(doc_id)
    for doc_id, bits in annotations.items():
        if doc_id not in seen:
            coded.append(code_text(cat, "", doc_id, bits))
    return coded


def format_table(rows: Iterable[Tuple[str, Pext]]) -> str:
    return "".join(f"{doc_id}\t{p}\n" for doc_id, p in rows)


def parse_table(text: str) -> List[Tuple[str, Pext]]:
    """Rows of a ``doc_id<TAB>bitstring`` table; blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'doc_id<TAB>bits'")
        try:
            rows.append((parts[0], Pext.parse(parts[1])))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return rows


# Fairy-tale fixture. The original program stores statement 1 in the least
# significant digit; the values here are reversed into leftmost-first form:
#   Sleeping Beauty '11010' -> 01011, Snow White '11111' -> 11111,
#   Cinderella '01111' -> 11110, Hans in Luck '01000' -> 00010,
#   The Wolf and the Seven Little Goats '00001' -> 10000.
FAIRY_TALE_STATEMENTS: Sequence[str] = (
    'In the end the "evil" is punished.',
    "The fairy tale ends with a wedding.",
    'A "wicked stepmother".',
    "The main character is a human.",
    "The main character is noble by birth.",
)

FAIRY_TALES: Dict[str, Pext] = {
    "m1": Pext.parse("01011"),
    "m2": Pext.parse("11111"),
    "m3": Pext.parse("11110"),
    "m4": Pext.parse("00010"),
    "m5": Pext.parse("10000"),
}


def fairy_tale_catalog() -> StatementCatalog:
    return load_catalog({"statements": list(FAIRY_TALE_STATEMENTS)})
