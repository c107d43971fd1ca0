"""Plain-text file formats.

Graph::

    p <n> <m>
    e <u> <v>          (m lines, 1 <= u < v <= n)

Cover certificate::

    c <cover|partition> <class-tag> <k>
    f <i> <u1>-<v1> <u2>-<v2> ...

Colouring::

    col <kind> <c>
    v <vertex> <color>   |   e <u>-<v> <color>

Star decomposition (one line per minor vertex, in order)::

    sd <count>
    s <center> <leaf> <leaf> ...
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping, Union

from .certificates import COLORING_KINDS, MODES, ColoringCertificate, CoverCertificate
from .classes import ForestClass
from .graph import Edge, Graph

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected integer, got {tok!r}") from None


def _lines(text: str) -> list[tuple[int, list[str]]]:
    if text and not text.endswith("\n"):
        raise FormatError("file must be newline-terminated")
    return [(i, ln.split()) for i, ln in enumerate(text.split("\n")[:-1], 1)]


def _edge_token(tok: str, lineno: int) -> Edge:
    a, sep, b = tok.partition("-")
    if not sep:
        raise FormatError(f"line {lineno}: expected u-v, got {tok!r}")
    return (_int(a, lineno), _int(b, lineno))


# -- graphs -----------------------------------------------------------------

def format_graph(G: Graph) -> str:
    out = [f"p {G.n} {G.m}\n"]
    out.extend(f"e {u} {v}\n" for u, v in G.edges)
    return "".join(out)


def parse_graph(text: str) -> Graph:
    rows = _lines(text)
    if not rows or len(rows[0][1]) != 3 or rows[0][1][0] != "p":
        raise FormatError("line 1: expected header 'p <n> <m>'")
    n, m = _int(rows[0][1][1], 1), _int(rows[0][1][2], 1)
    if n < 0 or m < 0:
        raise FormatError("line 1: negative counts")
    if len(rows) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(rows) - 1} lines")
    edges = []
    seen = set()
    for lineno, tok in rows[1:]:
        if len(tok) != 3 or tok[0] != "e":
            raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
        u, v = _int(tok[1], lineno), _int(tok[2], lineno)
        if not 1 <= u < v <= n:
            raise FormatError(f"line {lineno}: need 1 <= u < v <= {n}, got {u} {v}")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


# -- cover certificates ------------------------------------------------------

def format_certificate(cert: CoverCertificate) -> str:
    out = [f"c {cert.mode} {cert.cls.tag} {cert.k}\n"]
    for i, part in enumerate(cert.parts, 1):
        toks = " ".join(f"{u}-{v}" for u, v in sorted(part))
        out.append(f"f {i} {toks}\n")
    return "".join(out)


def parse_certificate(text: str) -> CoverCertificate:
    rows = _lines(text)
    if not rows or len(rows[0][1]) != 4 or rows[0][1][0] != "c":
        raise FormatError("line 1: expected header 'c <mode> <class> <k>'")
    _, mode, tag, k_tok = rows[0][1]
    if mode not in MODES:
        raise FormatError(f"line 1: unknown mode {mode!r}")
    try:
        cls = ForestClass.parse(tag)
    except ValueError as exc:
        raise FormatError(f"line 1: {exc}") from None
    k = _int(k_tok, 1)
    if len(rows) - 1 != k:
        raise FormatError(f"header declares {k} parts, found {len(rows) - 1}")
    parts = []
    for expect, (lineno, tok) in enumerate(rows[1:], 1):
        if len(tok) < 3 or tok[0] != "f" or _int(tok[1], lineno) != expect:
            raise FormatError(f"line {lineno}: expected 'f {expect} <u>-<v> ...'")
        parts.append([_edge_token(t, lineno) for t in tok[2:]])
    return CoverCertificate(cls, mode, tuple(parts))


# -- colourings --------------------------------------------------------------

def format_coloring(col: ColoringCertificate) -> str:
    out = [f"col {col.kind} {col.c}\n"]
    if col.is_edge_kind:
        out.extend(f"e {u}-{v} {c}\n" for (u, v), c in sorted(col.assignment.items()))
    else:
        out.extend(f"v {x} {c}\n" for x, c in sorted(col.assignment.items()))
    return "".join(out)


def parse_coloring(text: str) -> ColoringCertificate:
    rows = _lines(text)
    if not rows or len(rows[0][1]) != 3 or rows[0][1][0] != "col":
        raise FormatError("line 1: expected header 'col <kind> <c>'")
    kind, c = rows[0][1][1], _int(rows[0][1][2], 1)
    if kind not in COLORING_KINDS:
        raise FormatError(f"line 1: unknown colouring kind {kind!r}")
    edge_kind = kind.endswith("-edge")
    assignment: dict = {}
    for lineno, tok in rows[1:]:
        if len(tok) != 3 or tok[0] != ("e" if edge_kind else "v"):
            raise FormatError(f"line {lineno}: malformed assignment line")
        key = _edge_token(tok[1], lineno) if edge_kind else _int(tok[1], lineno)
        if key in assignment:
            raise FormatError(f"line {lineno}: duplicate entry")
        assignment[key] = _int(tok[2], lineno)
    return ColoringCertificate(kind, assignment, c)


# -- star decompositions -------------------------------------------------------

Star = tuple[int, frozenset[int]]


def format_stars(stars: Iterable[Star]) -> str:
    stars = list(stars)
    out = [f"sd {len(stars)}\n"]
    for c, leaves in stars:
        out.append(" ".join(["s", str(c), *map(str, sorted(leaves))]) + "\n")
    return "".join(out)


def parse_stars(text: str) -> list[Star]:
    rows = _lines(text)
    if not rows or len(rows[0][1]) != 2 or rows[0][1][0] != "sd":
        raise FormatError("line 1: expected header 'sd <count>'")
    count = _int(rows[0][1][1], 1)
    if len(rows) - 1 != count:
        raise FormatError(f"header declares {count} stars, found {len(rows) - 1}")
    out = []
    for lineno, tok in rows[1:]:
        if len(tok) < 2 or tok[0] != "s":
            raise FormatError(f"line {lineno}: expected 's <center> <leaves...>'")
        out.append((_int(tok[1], lineno), frozenset(_int(t, lineno) for t in tok[2:])))
    return out


# -- role sidecar --------------------------------------------------------------

def format_roles(roles: Mapping[int, str]) -> str:
    return "".join(f"role {v} {tag}\n" for v, tag in sorted(roles.items()))


def parse_roles(text: str) -> dict[int, str]:
    out = {}
    for lineno, tok in _lines(text):
        if len(tok) != 3 or tok[0] != "role":
            raise FormatError(f"line {lineno}: expected 'role <vertex> <tag>'")
        out[_int(tok[1], lineno)] = tok[2]
    return out


def read_text(path: PathLike) -> str:
    return Path(path).read_text(encoding="ascii")


def write_text(path: PathLike, text: str) -> None:
    Path(path).write_text(text, encoding="ascii", newline="\n")


def read_graph(path: PathLike) -> Graph:
    return parse_graph(read_text(path))


def write_graph(path: PathLike, G: Graph) -> None:
    write_text(path, format_graph(G))
