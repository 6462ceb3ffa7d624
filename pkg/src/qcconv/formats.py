"""Plain-text formats for polynomials, matrices, stabilizers, codes, circuits.

Conventions, chosen so golden files never depend on platform or locale:

* Field header: ``field p^ell`` (always with the exponent).
* Polynomial: coefficients in increasing exponent order.  Prime fields
  use one character per coefficient, digits ``0``-``9`` then ``a``-``c``
  for 10-12 (e.g. ``1101`` is 1 + D + D^3).  Extension fields write each
  coefficient as a bracketed int vector over F_p, low basis power first
  (``[0,1]`` in F_4 is the generator w).  A Laurent value with a nonzero
  lowest exponent gets a ``D^lo *`` prefix.
* Matrix: the field header, then one line per row, entries separated by
  commas.
* Stabilizer: ``field``, ``n``, then one generator per line with the X
  and Z entry lists separated by `` | ``.
* Convolutional code: ``field``, ``k``, ``n``, then generator rows; a
  headerless line of whitespace-separated 01 strings is accepted as a
  1 x n binary code.
* Circuit: ``n``, ``field``, then one gate per line (``DFT 3``,
  ``MULT 2 gamma=..``, ``PHASE 0 gamma=..``, ``ADD 1 4 l=2``,
  ``CPHASE 0 l=1``).
"""

from __future__ import annotations

import re

from .convcode import ConvCode
from .fields import Field, FieldElement, make_field
from .gates import Add, Circuit, CPhase, Dft, Gate, Mult, Phase
from .laurent import LaurentPoly, laurent
from .polymatrix import PolyMatrix
from .stabilizer import StabilizerMatrix

_DIGITS = "0123456789abc"


class FormatError(ValueError):
    pass


# -- field header -----------------------------------------------------------


def render_field(field: Field) -> str:
    return f"field {field.p}^{field.ell}"


def parse_field_header(line: str, where: str) -> Field:
    m = re.fullmatch(r"field\s+(\d+)\^(\d+)", line.strip())
    if not m:
        raise FormatError(f"{where}: expected 'field p^ell', got {line.strip()!r}")
    try:
        return make_field(int(m.group(1)), int(m.group(2)))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


# -- field elements ----------------------------------------------------------


def render_element(e: FieldElement) -> str:
    if e.field.ell == 1:
        return str(e.value)
    return "[" + ",".join(str(c) for c in e.vector) + "]"


def parse_element(field: Field, text: str, where: str = "element") -> FieldElement:
    text = text.strip()
    try:
        if field.ell == 1:
            return field.element(int(text))
        m = re.fullmatch(r"\[([0-9,\s]*)\]", text)
        if not m:
            raise ValueError(f"expected a bracketed vector, got {text!r}")
        parts = [p for p in m.group(1).split(",") if p.strip() != ""]
        return field.element([int(p) for p in parts])
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


# -- polynomials --------------------------------------------------------------


def render_poly(f: LaurentPoly) -> str:
    field = f.field
    if f.is_zero:
        body = "0" if field.ell == 1 else "[" + ",".join("0" * field.ell) + "]"
        return body
    coeffs = f.coeffs
    if field.ell == 1:
        body = "".join(_DIGITS[c] for c in coeffs)
    else:
        body = "".join(
            "[" + ",".join(str(d) for d in field.vector(c)) + "]" for c in coeffs)
    if f.lo != 0:
        return f"D^{f.lo} * {body}"
    return body


def parse_poly(field: Field, text: str, where: str = "polynomial") -> LaurentPoly:
    text = text.strip()
    lo = 0
    m = re.fullmatch(r"D\^(-?\d+)\s*\*\s*(.*)", text)
    if m:
        lo = int(m.group(1))
        text = m.group(2).strip()
    if not text:
        raise FormatError(f"{where}: empty polynomial")
    coeffs: list[int] = []
    if field.ell == 1:
        for ch in text:
            idx = _DIGITS.find(ch)
            if idx < 0 or idx >= field.p:
                raise FormatError(f"{where}: bad coefficient character {ch!r} for F_{field.q}")
            coeffs.append(idx)
    else:
        vecs = re.findall(r"\[[0-9,\s]*\]", text)
        if not vecs or "".join(vecs).replace(" ", "") != text.replace(" ", ""):
            raise FormatError(f"{where}: expected bracketed coefficient vectors, got {text!r}")
        for v in vecs:
            coeffs.append(parse_element(field, v, where).value)
    return laurent(field, coeffs, lo)


# -- matrices ------------------------------------------------------------------


def render_matrix(m: PolyMatrix) -> str:
    lines = [render_field(m.field)]
    for row in m.entries:
        lines.append(",".join(render_poly(e) for e in row))
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            out.append((i, line.strip()))
    return out


def parse_matrix(text: str) -> PolyMatrix:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("line 1: empty matrix file")
    field = parse_field_header(lines[0][1], f"line {lines[0][0]}")
    rows = []
    width = None
    for lineno, line in lines[1:]:
        entries = line.split(",") if field.ell == 1 else _split_ext_entries(line)
        row = [parse_poly(field, e, f"line {lineno}, entry {j + 1}")
               for j, e in enumerate(entries)]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError(f"line {lineno}: expected {width} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise FormatError("matrix file has a header but no rows")
    return PolyMatrix.build(field, rows)


def _split_ext_entries(line: str) -> list[str]:
    # extension-field entries contain commas inside brackets; split on
    # commas at bracket depth zero
    parts, depth, cur = [], 0, []
    for ch in line:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


# -- stabilizers -----------------------------------------------------------------


def render_stabilizer(s: StabilizerMatrix) -> str:
    lines = [render_field(s.field), f"n {s.n}"]
    for i in range(s.rows):
        xs = ",".join(render_poly(e) for e in s.x.row(i))
        zs = ",".join(render_poly(e) for e in s.z.row(i))
        lines.append(f"{xs} | {zs}")
    return "\n".join(lines) + "\n"


def parse_stabilizer(text: str) -> StabilizerMatrix:
    lines = _content_lines(text)
    if len(lines) < 2:
        raise FormatError("stabilizer file needs 'field' and 'n' headers")
    field = parse_field_header(lines[0][1], f"line {lines[0][0]}")
    m = re.fullmatch(r"n\s+(\d+)", lines[1][1])
    if not m:
        raise FormatError(f"line {lines[1][0]}: expected 'n <int>'")
    n = int(m.group(1))
    x_rows, z_rows = [], []
    for lineno, line in lines[2:]:
        if "|" not in line:
            raise FormatError(f"line {lineno}: generator rows need 'X... | Z...'")
        xs, zs = line.split("|", 1)
        split = (lambda s: s.split(",")) if field.ell == 1 else _split_ext_entries
        xrow = [parse_poly(field, e, f"line {lineno}, X entry {j + 1}")
                for j, e in enumerate(split(xs.strip()))]
        zrow = [parse_poly(field, e, f"line {lineno}, Z entry {j + 1}")
                for j, e in enumerate(split(zs.strip()))]
        if len(xrow) != n or len(zrow) != n:
            raise FormatError(f"line {lineno}: expected {n} X and {n} Z entries")
        x_rows.append(xrow)
        z_rows.append(zrow)
    return StabilizerMatrix(x=PolyMatrix.build(field, x_rows, cols=n),
                            z=PolyMatrix.build(field, z_rows, cols=n))


# -- convolutional codes ------------------------------------------------------------


def render_convcode(c: ConvCode) -> str:
    lines = [render_field(c.field), f"k {c.k}", f"n {c.n}"]
    for row in c.generator.entries:
        lines.append(",".join(render_poly(e) for e in row))
    return "\n".join(lines) + "\n"


def parse_convcode(text: str) -> ConvCode:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("line 1: empty code file")
    if not lines[0][1].startswith("field"):
        # compact form: one line of whitespace-separated binary strings
        lineno, line = lines[0]
        if len(lines) > 1:
            raise FormatError(f"line {lines[1][0]}: compact form is a single line")
        strs = line.split()
        if not all(re.fullmatch(r"[01]+", s) for s in strs):
            raise FormatError(f"line {lineno}: compact form expects 01 strings")
        field = make_field(2)
        row = [laurent(field, [int(ch) for ch in s]) for s in strs]
        return ConvCode(PolyMatrix.build(field, [row]))
    field = parse_field_header(lines[0][1], f"line {lines[0][0]}")
    mk = re.fullmatch(r"k\s+(\d+)", lines[1][1]) if len(lines) > 1 else None
    mn = re.fullmatch(r"n\s+(\d+)", lines[2][1]) if len(lines) > 2 else None
    if not mk or not mn:
        raise FormatError("code file needs 'k <int>' and 'n <int>' headers")
    k, n = int(mk.group(1)), int(mn.group(1))
    rows = []
    split = (lambda s: s.split(",")) if field.ell == 1 else _split_ext_entries
    for lineno, line in lines[3:]:
        row = [parse_poly(field, e, f"line {lineno}, entry {j + 1}")
               for j, e in enumerate(split(line))]
        if len(row) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if len(rows) != k:
        raise FormatError(f"expected {k} generator rows, found {len(rows)}")
    return ConvCode(PolyMatrix.build(field, rows, cols=n))


# -- circuits -------------------------------------------------------------------------


def render_circuit(c: Circuit, field: Field) -> str:
    lines = [f"n {c.n}", render_field(field)]
    for g in c.gates:
        if isinstance(g, Dft):
            lines.append(f"DFT {g.wire}")
        elif isinstance(g, Mult):
            lines.append(f"MULT {g.wire} gamma={render_element(g.gamma)}")
        elif isinstance(g, Phase):
            lines.append(f"PHASE {g.wire} gamma={render_element(g.gamma)}")
        elif isinstance(g, Add):
            lines.append(f"ADD {g.src} {g.dst} l={g.delay}")
        elif isinstance(g, CPhase):
            lines.append(f"CPHASE {g.wire} l={g.delay}")
        else:  # pragma: no cover
            raise TypeError(f"unknown gate {g!r}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> tuple[Circuit, Field]:
    lines = _content_lines(text)
    if len(lines) < 2:
        raise FormatError("circuit file needs 'n' and 'field' headers")
    mn = re.fullmatch(r"n\s+(\d+)", lines[0][1])
    if not mn:
        raise FormatError(f"line {lines[0][0]}: expected 'n <int>'")
    n = int(mn.group(1))
    field = parse_field_header(lines[1][1], f"line {lines[1][0]}")
    gates: list[Gate] = []
    for lineno, line in lines[2:]:
        where = f"line {lineno}"
        parts = line.split()
        kind = parts[0].upper()
        try:
            if kind == "DFT" and len(parts) == 2:
                gates.append(Dft(int(parts[1])))
            elif kind in ("MULT", "PHASE") and len(parts) == 3 \
                    and parts[2].startswith("gamma="):
                gamma = parse_element(field, parts[2][len("gamma="):], where)
                gates.append(Mult(int(parts[1]), gamma) if kind == "MULT"
                             else Phase(int(parts[1]), gamma))
            elif kind == "ADD" and len(parts) == 4 and parts[3].startswith("l="):
                gates.append(Add(int(parts[1]), int(parts[2]), int(parts[3][2:])))
            elif kind == "CPHASE" and len(parts) == 3 and parts[2].startswith("l="):
                gates.append(CPhase(int(parts[1]), int(parts[2][2:])))
            else:
                raise ValueError(f"unrecognized gate line {line!r}")
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from exc
    try:
        return Circuit(n, tuple(gates)), field
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
