"""Finite-depth inverse-encoder synthesis from elementary operations.

Column operations become gates (additions via delayed Adds, swaps via a
three-Add identity, scales via Mult); row operations merely rewrite the
generating set and are absorbed into a unimodular left factor that is
returned alongside the circuit.  Every pipeline ends in the literal
trivial form (0 | I 0); the verifier below accepts anything reachable
from it by a unimodular polynomial row transform.

Circuit size bookkeeping: every elementary action is counted, and each
action expands to at most GATES_PER_OP * (max multiplier degree + 1)
gates; the final Fourier layers contribute at most 2n more.  Measured
depth is additionally asserted (in the test suite) against the blunt
envelope ``depth_bound``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .constructions import CssInput, css_construct, product_construct
from .convcode import ConvCode
from .fields import Field
from .gates import (Add, Circuit, CircuitStats, CPhase, Dft, Gate, Mult,
                    Phase, apply_circuit, apply_gate, circuit_stats,
                    cz_gates, decompose_column_addition, inverse_circuit,
                    swap_gates)
from .laurent import LaurentPoly, constant, one, zero
from .polymatrix import (ColAddMul, ColScale, ColSwap, ElementaryOp,
                         PolyMatrix, RowAddMul, RowScale, RowSwap,
                         const_rank, is_unimodular, kron, lift_to_field,
                         smith_normal_form)
from .stabilizer import StabilizerMatrix, is_self_orthogonal, trivial_stabilizer

GATES_PER_OP = 8  # worst elementary action: a scaled two-wire phase (7 gates)


def depth_bound(n: int, nu: int) -> int:
    """Documented coarse envelope poly(n, nu) for synthesized circuit depth."""
    return 40 * n * n * (nu + 1) * (nu + 1)


class SynthesisError(RuntimeError):
    """An internal pipeline shape assertion failed: the input was invalid
    or an impossible intermediate form appeared."""


@dataclass(frozen=True)
class SynthesisResult:
    inverse_circuit: Circuit
    encoder_circuit: Circuit
    final_form: StabilizerMatrix
    row_transform: PolyMatrix
    inverse_stats: CircuitStats
    encoder_stats: CircuitStats
    intermediates: tuple[tuple[str, StabilizerMatrix], ...]
    dft_layer_start: int      # index into inverse_circuit.gates of the final DFT layer
    elementary_ops: int
    max_op_degree: int

    @property
    def gate_count_bound(self) -> int:
        n = self.final_form.n
        return GATES_PER_OP * self.elementary_ops * (self.max_op_degree + 1) + 2 * n


class _Builder:
    """Mutable synthesis state: stabilizer, row transform, gate trace."""

    def __init__(self, s: StabilizerMatrix):
        self.s = s
        self.field = s.field
        self.rmat = PolyMatrix.identity(s.field, s.rows)
        self.gates: list[Gate] = []
        self.row_ops: list[ElementaryOp] = []
        self.intermediates: list[tuple[str, StabilizerMatrix]] = []
        self.ops = 0
        self.max_deg = 0

    def emit(self, gates) -> None:
        for g in gates:
            self.s = apply_gate(self.s, g)
            self.gates.append(g)

    def snapshot(self, label: str) -> None:
        self.intermediates.append((label, self.s))

    # free row rewrites (change the generating set, not the group)

    def _rebuild(self, xg, zg) -> None:
        n = self.s.n
        self.s = StabilizerMatrix(x=PolyMatrix.build(self.field, xg, cols=n),
                                  z=PolyMatrix.build(self.field, zg, cols=n))

    def row_swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.row_ops.append(RowSwap(i, j))
        xg = [list(r) for r in self.s.x.entries]
        zg = [list(r) for r in self.s.z.entries]
        xg[i], xg[j] = xg[j], xg[i]
        zg[i], zg[j] = zg[j], zg[i]
        self._rebuild(xg, zg)
        rg = [list(r) for r in self.rmat.entries]
        rg[i], rg[j] = rg[j], rg[i]
        self.rmat = PolyMatrix.build(self.field, rg, cols=self.rmat.cols)

    def row_scale(self, i: int, c: int) -> None:
        self.row_ops.append(RowScale(i, c))
        xg = [list(r) for r in self.s.x.entries]
        zg = [list(r) for r in self.s.z.entries]
        xg[i] = [e.scale(c) for e in xg[i]]
        zg[i] = [e.scale(c) for e in zg[i]]
        self._rebuild(xg, zg)
        rg = [list(r) for r in self.rmat.entries]
        rg[i] = [e.scale(c) for e in rg[i]]
        self.rmat = PolyMatrix.build(self.field, rg, cols=self.rmat.cols)

    def row_addmul(self, src: int, dst: int, f: LaurentPoly) -> None:
        self.row_ops.append(RowAddMul(src, dst, f))
        xg = [list(r) for r in self.s.x.entries]
        zg = [list(r) for r in self.s.z.entries]
        xg[dst] = [a + f * b for a, b in zip(xg[dst], xg[src])]
        zg[dst] = [a + f * b for a, b in zip(zg[dst], zg[src])]
        self._rebuild(xg, zg)
        rg = [list(r) for r in self.rmat.entries]
        rg[dst] = [a + f * b for a, b in zip(rg[dst], rg[src])]
        self.rmat = PolyMatrix.build(self.field, rg, cols=self.rmat.cols)

    # elementary-operation replay

    def replay(self, op: ElementaryOp,
               wire_map: Callable[[int], int] | None = None,
               row_map: Callable[[int], int] | None = None) -> None:
        wm = wire_map or (lambda c: c)
        rm = row_map or (lambda r: r)
        op = _lift_op(op, self.field)
        self.ops += 1
        if isinstance(op, ColSwap):
            self.emit(swap_gates(wm(op.i), wm(op.j), self.field))
        elif isinstance(op, ColScale):
            # column times the unit c: Mult with gamma = c^-1
            self.emit((Mult(wm(op.j), self.field.element(self.field.inv(op.c))),))
        elif isinstance(op, ColAddMul):
            d = op.f.degree
            if d is not None:
                self.max_deg = max(self.max_deg, d)
            self.emit(decompose_column_addition(op.f, wm(op.src), wm(op.dst)))
        elif isinstance(op, RowSwap):
            self.row_swap(rm(op.i), rm(op.j))
        elif isinstance(op, RowScale):
            self.row_scale(rm(op.i), op.c)
        elif isinstance(op, RowAddMul):
            self.row_addmul(rm(op.src), rm(op.dst), op.f)
        else:  # pragma: no cover
            raise TypeError(f"unknown elementary op {op!r}")

    def finish(self, dft_layer_start: int) -> SynthesisResult:
        inv = Circuit(self.s.n, tuple(self.gates))
        enc = inverse_circuit(inv, self.field)
        return SynthesisResult(
            inverse_circuit=inv,
            encoder_circuit=enc,
            final_form=self.s,
            row_transform=self.rmat,
            inverse_stats=circuit_stats(inv),
            encoder_stats=circuit_stats(enc),
            intermediates=tuple(self.intermediates),
            dft_layer_start=dft_layer_start,
            elementary_ops=self.ops,
            max_op_degree=self.max_deg,
        )


def _lift_op(op: ElementaryOp, field: Field) -> ElementaryOp:
    """Reinterpret a prime-subfield elementary op inside ``field``."""
    if isinstance(op, ColAddMul) and op.f.field != field:
        return ColAddMul(op.src, op.dst, LaurentPoly(field, op.f.lo, op.f.coeffs))
    if isinstance(op, RowAddMul) and op.f.field != field:
        return RowAddMul(op.src, op.dst, LaurentPoly(field, op.f.lo, op.f.coeffs))
    return op


def _final_dft_layer(b: _Builder, wires: range) -> None:
    """Fourier the X-identity wires into Z and fix the sign by row scales."""
    for w in wires:
        b.emit((Dft(w),))
    minus = b.field.neg(1)
    if minus != 1:
        for i in range(b.s.rows):
            b.row_scale(i, minus)


def _assert_trivial(b: _Builder) -> None:
    expect = trivial_stabilizer(b.field, b.s.n, b.s.rows)
    if b.s != expect:
        raise SynthesisError("pipeline did not reach the trivial form (0 | I 0)")


def _eye_pad(field: Field, rows: int, cols: int, offset: int) -> PolyMatrix:
    """rows x cols with the identity block starting at column ``offset``."""
    o, z = one(field), zero(field)
    return PolyMatrix.build(field, [
        [o if j == offset + i else z for j in range(cols)] for i in range(rows)
    ], cols=cols)


def _scattered_eye(field: Field, rows: int, cols: int,
                   ones: list[tuple[int, int]]) -> PolyMatrix:
    o, z = one(field), zero(field)
    pos = set(ones)
    return PolyMatrix.build(field, [
        [o if (i, j) in pos else z for j in range(cols)] for i in range(rows)
    ], cols=cols)


def verify_inverse_encoder(s: StabilizerMatrix, c: Circuit) -> bool:
    """True iff the circuit carries s to (0 | I 0) up to a unimodular
    polynomial row transform."""
    t = apply_circuit(s, c)
    if not t.is_polynomial or not t.x.is_zero:
        return False
    r = t.rows
    if t.n < r:
        return False
    lead = t.z.submatrix(range(r), range(r))
    rest = t.z.submatrix(range(r), range(r, t.n))
    return rest.is_zero and is_unimodular(lead)


# -- CSS pipeline ---------------------------------------------------------------


def synthesize_css_encoder(s: StabilizerMatrix, h1: PolyMatrix,
                           h2: PolyMatrix) -> SynthesisResult:
    """Inverse encoder for a block-diagonal CSS stabilizer.

    Pipeline: (1) Smith reduction of the X block H2 through gates,
    (2) the commutation-forced shape check on the transformed Z block,
    (3) Fourier on the last n-k2 wires, (4) Smith reduction of the
    remaining X block, (5) Fourier on the first n-k1+k2 wires.
    """
    inp = CssInput(h1=h1, h2=h2)
    if s != css_construct(inp):
        raise ValueError("stabilizer does not match the CSS form of (h1, h2)")
    field, n = s.field, s.n
    k2 = h2.rows
    b = _Builder(s)
    if s == trivial_stabilizer(field, n, s.rows):
        b.snapshot("already-trivial")
        return b.finish(dft_layer_start=0)

    snf2 = smith_normal_form(h2)
    for op in snf2.ops:
        b.replay(op)
    if b.s.x.submatrix(range(k2), range(n)) != _eye_pad(field, k2, n, 0):
        raise SynthesisError("H2 block did not reduce to (I 0)")
    b.snapshot("x-block-reduced")

    z_bot = b.s.z.submatrix(range(k2, s.rows), range(n))
    if not z_bot.is_polynomial:
        raise SynthesisError("transformed Z block left the polynomial ring")
    if not z_bot.submatrix(range(z_bot.rows), range(k2)).is_zero:
        raise SynthesisError("transformed Z block is not of the forced (0 Z') shape")
    z2p = z_bot.submatrix(range(z_bot.rows), range(k2, n))

    for w in range(k2, n):
        b.emit((Dft(w),))
    b.snapshot("z-moved-to-x")

    snf_z = smith_normal_form(z2p)
    if len(snf_z.invariant_factors) != z2p.rows or any(
            f != one(field) for f in snf_z.invariant_factors):
        raise SynthesisError("residual X block is not basic; invalid CSS input")
    for op in snf_z.ops:
        b.replay(op, wire_map=lambda c: c + k2, row_map=lambda r: r + k2)
    if b.s.x != _eye_pad(field, s.rows, n, 0):
        raise SynthesisError("X part did not reduce to the identity block")
    b.snapshot("x-identity")

    dft_start = len(b.gates)
    _final_dft_layer(b, range(s.rows))
    _assert_trivial(b)
    b.snapshot("trivial")
    return b.finish(dft_layer_start=dft_start)


# -- constant (block) pipeline ---------------------------------------------------


def _reduce_block_core(b: _Builder) -> None:
    """Carry a constant, self-orthogonal, full-rank stabilizer to (I 0 | 0).

    Gaussian elimination where clearing along a generator row uses gates
    (delay-0 additions, swaps, scales), clearing along a column uses free
    row rewrites, and Z residue on a processed row is wiped by Phase and
    two-wire phase composites.  Pivots are the lexicographically first
    nonzero positions, X block first, then Z via a wire Fourier.
    """
    field = b.field
    r, n = b.s.rows, b.s.n

    def xval(i: int, j: int) -> int:
        return b.s.x.entry(i, j).constant_term()

    def zval(i: int, j: int) -> int:
        return b.s.z.entry(i, j).constant_term()

    for t in range(r):
        piv = next(((i, j) for i in range(t, r) for j in range(t, n)
                    if xval(i, j)), None)
        if piv is None:
            piv = next(((i, j) for i in range(t, r) for j in range(t, n)
                        if zval(i, j)), None)
            if piv is None:
                raise SynthesisError("stabilizer lost rank during reduction")
            i, j = piv
            b.row_swap(t, i)
            if j != t:
                b.ops += 1
                b.emit(swap_gates(t, j, field))
            b.ops += 1
            b.emit((Dft(t),))
        else:
            i, j = piv
            b.row_swap(t, i)
            if j != t:
                b.ops += 1
                b.emit(swap_gates(t, j, field))
        c = xval(t, t)
        if c != 1:
            b.ops += 1
            b.emit((Mult(t, field.element(c)),))
        for j in range(n):
            if j == t:
                continue
            cj = xval(t, j)
            if cj:
                if j < t:
                    raise SynthesisError("processed X columns were disturbed")
                b.ops += 1
                b.emit(decompose_column_addition(constant(field, field.neg(cj)), t, j))
        for i in range(r):
            if i != t and xval(i, t):
                b.ops += 1
                b.row_addmul(t, i, constant(field, field.neg(xval(i, t))))
        d = zval(t, t)
        if d:
            b.ops += 1
            b.emit((Phase(t, field.element(field.neg(d))),))
        for j in range(n):
            if j == t:
                continue
            dj = zval(t, j)
            if dj:
                if j < t:
                    raise SynthesisError("commutation-forced zeros are missing")
                b.ops += 1
                b.emit(cz_gates(t, j, field.neg(dj), field))

    if not b.s.z.is_zero:
        raise SynthesisError("Z part did not vanish in the block reduction")
    if b.s.x != _eye_pad(field, r, n, 0):
        raise SynthesisError("X part did not reduce to (I 0)")


def synthesize_block_inverse_encoder(s: StabilizerMatrix) -> SynthesisResult:
    """Inverse encoder for a constant stabilizer, using delay-free gates only.

    The gates before ``dft_layer_start`` carry s to the X-only form
    (I 0 | 0); the final Fourier layer lands on (0 | I 0).
    """
    if not s.x.is_constant() or not s.z.is_constant():
        raise ValueError("block synthesis requires a constant stabilizer")
    if not is_self_orthogonal(s):
        raise ValueError("stabilizer is not self-orthogonal")
    grid = [xr + zr for xr, zr in zip(s.x.constant_grid(), s.z.constant_grid())]
    if s.rows and const_rank(s.field, grid) != s.rows:
        raise ValueError("stabilizer matrix is rank deficient")
    b = _Builder(s)
    if s == trivial_stabilizer(s.field, s.n, s.rows):
        b.snapshot("already-trivial")
        return b.finish(dft_layer_start=0)
    _reduce_block_core(b)
    b.snapshot("x-only")
    dft_start = len(b.gates)
    _final_dft_layer(b, range(s.rows))
    _assert_trivial(b)
    b.snapshot("trivial")
    return b.finish(dft_layer_start=dft_start)


# -- product pipeline -------------------------------------------------------------


def _shift_gate(g: Gate, off: int) -> Gate:
    if isinstance(g, Dft):
        return Dft(g.wire + off)
    if isinstance(g, Mult):
        return Mult(g.wire + off, g.gamma)
    if isinstance(g, Phase):
        return Phase(g.wire + off, g.gamma)
    if isinstance(g, Add):
        return Add(g.src + off, g.dst + off, g.delay)
    if isinstance(g, CPhase):
        return CPhase(g.wire + off, g.delay)
    raise TypeError(f"unknown gate {g!r}")  # pragma: no cover


def synthesize_product_encoder(g1: ConvCode, s2: StabilizerMatrix) -> SynthesisResult:
    """Inverse encoder for the Kronecker-product stabilizer G1 (x) S2.

    Three phases: the block-code core applied to every n2-wire block,
    one copy of the classical reduction of G1 per identity wire (the
    replicas act with stride n2), then the final Fourier layer after
    compacting the identity wires to the front.
    """
    if not s2.x.is_constant() or not s2.z.is_constant():
        raise ValueError("product synthesis requires a constant quantum factor")
    s = product_construct(g1, s2)
    field, n = s.field, s.n
    r2, n2 = s2.rows, s2.n
    k1, n1 = g1.k, g1.n
    b = _Builder(s)
    if s == trivial_stabilizer(field, n, s.rows):
        b.snapshot("already-trivial")
        return b.finish(dft_layer_start=0)

    # phase 1: reduce every quantum block to (I 0 | 0)
    core = _Builder(StabilizerMatrix(x=lift_to_field(s2.x, field),
                                     z=lift_to_field(s2.z, field))
                    if s2.field != field else s2)
    _reduce_block_core(core)
    for blk in range(n1):
        b.emit([_shift_gate(g, blk * n2) for g in core.gates])
    b.ops += core.ops * n1
    b.max_deg = max(b.max_deg, core.max_deg)
    for a in range(k1):
        for op in core.row_ops:
            b.replay(op, row_map=lambda rr, a=a: rr + a * r2)
    expected = StabilizerMatrix(
        x=kron(lift_to_field(g1.generator, field), _eye_pad(field, r2, n2, 0)),
        z=PolyMatrix.zeros(field, s.rows, n))
    if b.s != expected:
        raise SynthesisError("block phase did not reach G1 (x) (I 0 | 0)")
    b.snapshot("bc-blocks")

    # phase 2: classical reduction of G1, one replica per identity wire
    snf1 = smith_normal_form(g1.generator)
    col_ops = [op for op in snf1.ops if isinstance(op, (ColSwap, ColScale, ColAddMul))]
    row_ops = [op for op in snf1.ops if isinstance(op, (RowSwap, RowScale, RowAddMul))]
    for d in range(r2):
        for op in col_ops:
            b.replay(op, wire_map=lambda c, d=d: c * n2 + d)
        b.snapshot(f"cc-copy-{d}")
    for op in row_ops:
        for sidx in range(r2):
            b.replay(op, row_map=lambda rr, sidx=sidx: rr * r2 + sidx)
    ones = [(a * r2 + sidx, a * n2 + sidx) for a in range(k1) for sidx in range(r2)]
    if b.s.x != _scattered_eye(field, s.rows, n, ones) or not b.s.z.is_zero:
        raise SynthesisError("classical phase did not isolate the identity wires")

    # compact the scattered identity wires onto wires 0..rows-1
    swaps = _compaction_swaps(n, [a * n2 + sidx for a in range(k1)
                                  for sidx in range(r2)])
    for i, j in swaps:
        b.ops += 1
        b.emit(swap_gates(i, j, field))
    if swaps:
        b.snapshot("compacted")
    if b.s.x != _eye_pad(field, s.rows, n, 0):
        raise SynthesisError("identity wires did not compact to the front")

    dft_start = len(b.gates)
    _final_dft_layer(b, range(s.rows))
    _assert_trivial(b)
    b.snapshot("trivial")
    return b.finish(dft_layer_start=dft_start)


def _compaction_swaps(n: int, id_wires: list[int]) -> list[tuple[int, int]]:
    """Transpositions moving the listed wires to positions 0..len-1, in order."""
    pos = list(range(n))       # pos[p] = wire currently at position p
    where = list(range(n))     # where[w] = current position of wire w
    swaps = []
    for target, wire in enumerate(sorted(id_wires)):
        cur = where[wire]
        if cur != target:
            other = pos[target]
            pos[target], pos[cur] = wire, other
            where[wire], where[other] = target, cur
            swaps.append((target, cur))
    return swaps
