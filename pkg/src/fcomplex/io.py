"""Plain-text formats for complexes, facet orders and shelled-over certificates.

Facet-list format::

    # comment
    n=6
    1 2 3
    1 2 5

Order files list one facet per line in application order (an ``n=`` line is
optional).  Certificates add ``core:`` and ``order:`` section headers.
"""

from __future__ import annotations

import warnings

from .complex import Complex, ComplexError, from_facets, lex_key, to_mask, vertices
from .homology import FieldSpec
from .shelling import ShelledOverCertificate


class ParseError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_n(line: str, lineno: int) -> int:
    key, _, value = line.partition("=")
    if key.strip() != "n":
        raise ParseError(f"line {lineno}: expected 'n=<int>', got {line!r}")
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"line {lineno}: bad vertex count {value!r}") from None


def _parse_facet(line: str, lineno: int, n: int | None) -> int:
    try:
        vs = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
    for v in vs:
        if v < 1 or (n is not None and v > n):
            raise ParseError(f"line {lineno}: vertex {v} outside [1, {n}]")
    try:
        return to_mask(vs)
    except ComplexError as e:
        raise ParseError(f"line {lineno}: {e}") from None


def parse_complex(text: str) -> Complex:
    n = None
    masks: list[int] = []
    for lineno, line in _lines(text):
        if n is None:
            n = _parse_n(line, lineno)
            continue
        m = _parse_facet(line, lineno, n)
        if m in masks:
            warnings.warn(f"line {lineno}: duplicate facet {list(vertices(m))} ignored", stacklevel=2)
            continue
        masks.append(m)
    if n is None:
        raise ParseError("missing 'n=<int>' header")
    if not masks:
        raise ParseError("no facets")
    try:
        return from_facets(n, masks)
    except ComplexError as e:
        raise ParseError(str(e)) from None


def emit_complex(cx: Complex) -> str:
    return _emit_facets(cx.n, cx.facets)


def _emit_facets(n: int | None, masks) -> str:
    out = [] if n is None else [f"n={n}"]
    out.extend(" ".join(map(str, vertices(m))) for m in masks)
    return "\n".join(out) + "\n"


def parse_order(text: str, n: int | None = None) -> list[int]:
    order = []
    for lineno, line in _lines(text):
        if line.startswith("n="):
            n = _parse_n(line, lineno)
            continue
        order.append(_parse_facet(line, lineno, n))
    return order


def emit_order(order, n: int | None = None) -> str:
    return _emit_facets(n, order)


def parse_certificate(text: str, field: FieldSpec | None = None) -> ShelledOverCertificate:
    n = None
    section = None
    core: list[int] = []
    order: list[int] = []
    for lineno, line in _lines(text):
        if line.startswith("n="):
            n = _parse_n(line, lineno)
        elif line in ("core:", "order:"):
            section = line[:-1]
        elif section is None:
            raise ParseError(f"line {lineno}: facet before a 'core:' or 'order:' header")
        else:
            (core if section == "core" else order).append(_parse_facet(line, lineno, n))
    if n is None:
        raise ParseError("missing 'n=<int>' header")
    if not core:
        raise ParseError("empty core section")
    return ShelledOverCertificate(from_facets(n, core), tuple(order), field or FieldSpec())


def emit_certificate(cert: ShelledOverCertificate) -> str:
    out = [f"n={cert.core.n}", "core:"]
    out.extend(" ".join(map(str, vertices(m))) for m in sorted(cert.core.facets, key=lex_key))
    out.append("order:")
    out.extend(" ".join(map(str, vertices(m))) for m in cert.added)
    return "\n".join(out) + "\n"
