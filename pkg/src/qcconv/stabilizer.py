"""Stabilizer matrices (X(D)|Z(D)), their commutation check and expansion.

A stabilizer is stored as the pair of polynomial-matrix halves X and Z,
each ``rows x n``.  The symplectic representation is authoritative:
global phases of the underlying Pauli operators are never tracked.

Gate application can temporarily introduce negative exponents into the
halves, so the container itself accepts Laurent entries; operations that
only make sense for the canonical polynomial form (parameter extraction,
semi-infinite expansion, file output) enforce polynomiality themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import Field
from .laurent import laurent
from .polymatrix import PolyMatrix, hstack, rank


@dataclass(frozen=True)
class StabilizerMatrix:
    x: PolyMatrix
    z: PolyMatrix

    def __post_init__(self) -> None:
        if self.x.shape != self.z.shape:
            raise ValueError("X and Z halves must have identical dimensions")
        if self.x.field != self.z.field:
            raise ValueError("X and Z halves must share one field")

    @property
    def field(self) -> Field:
        return self.x.field

    @property
    def n(self) -> int:
        """Frame size: qudits per frame."""
        return self.x.cols

    @property
    def rows(self) -> int:
        return self.x.rows

    @property
    def is_polynomial(self) -> bool:
        return self.x.is_polynomial and self.z.is_polynomial

    def stacked(self) -> PolyMatrix:
        """The rows x 2n matrix (X | Z)."""
        return hstack(self.x, self.z)

    def memory(self) -> int:
        """Largest exponent in either half (0 for a constant stabilizer)."""
        if not self.is_polynomial:
            raise ValueError("memory is defined for polynomial stabilizers")
        return max(self.x.max_degree(), self.z.max_degree())


def trivial_stabilizer(field: Field, n: int, rows: int) -> StabilizerMatrix:
    """The Z-only form (0 | I 0): row i is a single Z on wire i."""
    if rows > n:
        raise ValueError("more generators than wires")
    eye = PolyMatrix.identity(field, rows)
    pad = PolyMatrix.zeros(field, rows, n - rows)
    return StabilizerMatrix(x=PolyMatrix.zeros(field, rows, n),
                            z=hstack(eye, pad))


def symplectic_commutator(s: StabilizerMatrix) -> PolyMatrix:
    """X(D) Z(1/D)^t - Z(D) X(1/D)^t; zero iff all shifted generators commute."""
    return s.x * s.z.adjoint_transpose() - s.z * s.x.adjoint_transpose()


def is_self_orthogonal(s: StabilizerMatrix) -> bool:
    return symplectic_commutator(s).is_zero


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    rate: Fraction
    nu_i: tuple[int, ...]
    nu: int
    m: int


def code_params(s: StabilizerMatrix) -> CodeParams:
    """Frame size, logical qudits, and constraint lengths of a stabilizer.

    The stabilizer must be in canonical polynomial form and have full row
    rank over F_q(D); rank-deficient inputs are rejected rather than
    reinterpreted.
    """
    if not s.is_polynomial:
        raise ValueError("code parameters require polynomial entries")
    if s.rows == 0:
        return CodeParams(n=s.n, k=s.n, rate=Fraction(1), nu_i=(), nu=0, m=0)
    stacked = s.stacked()
    if rank(stacked) != s.rows:
        raise ValueError("stabilizer matrix is rank deficient")
    nu_i = []
    for i in range(s.rows):
        degs = [e.degree for e in s.x.row(i) + s.z.row(i) if not e.is_zero]
        nu_i.append(max(degs, default=0))
    k = s.n - s.rows
    return CodeParams(n=s.n, k=k, rate=Fraction(k, s.n), nu_i=tuple(nu_i),
                      nu=sum(nu_i), m=max(nu_i, default=0))


Symbol = tuple[int, int]  # (x, z) exponent pair of one qudit position


@dataclass(frozen=True)
class SemiInfiniteSlice:
    field: Field
    n: int
    rows_per_frame: int
    frames: int
    g_blocks: tuple[tuple[tuple[Symbol, ...], ...], ...]
    band: tuple[tuple[Symbol, ...], ...]


def expand_semi_infinite(s: StabilizerMatrix, frames: int) -> SemiInfiniteSlice:
    """Decompose S(D) = sum G_i D^i and lay out the shifted block band.

    The band holds ``frames`` block-rows; block-row b starts at frame
    column b, so the total width is (frames + m) frames.
    """
    if not s.is_polynomial:
        raise ValueError("semi-infinite expansion requires polynomial entries")
    m = s.memory()
    if frames < m + 1:
        raise ValueError(f"frames={frames} too small: need at least m+1 = {m + 1}")
    blocks = []
    for d in range(m + 1):
        block = tuple(
            tuple((s.x.entry(i, j).coeff(d), s.z.entry(i, j).coeff(d))
                  for j in range(s.n))
            for i in range(s.rows))
        blocks.append(block)
    width = (frames + m) * s.n
    band = []
    for b in range(frames):
        for i in range(s.rows):
            row: list[Symbol] = [(0, 0)] * width
            for d in range(m + 1):
                base = (b + d) * s.n
                for j in range(s.n):
                    row[base + j] = blocks[d][i][j]
            band.append(tuple(row))
    return SemiInfiniteSlice(field=s.field, n=s.n, rows_per_frame=s.rows,
                             frames=frames, g_blocks=tuple(blocks),
                             band=tuple(band))


def reconstruct(sl: SemiInfiniteSlice) -> StabilizerMatrix:
    """Rebuild S(D) from the G_i blocks (inverse of expand_semi_infinite)."""
    field = sl.field
    x_rows, z_rows = [], []
    for i in range(sl.rows_per_frame):
        xr, zr = [], []
        for j in range(sl.n):
            xs = [blk[i][j][0] for blk in sl.g_blocks]
            zs = [blk[i][j][1] for blk in sl.g_blocks]
            xr.append(laurent(field, xs))
            zr.append(laurent(field, zs))
        x_rows.append(xr)
        z_rows.append(zr)
    return StabilizerMatrix(x=PolyMatrix.build(field, x_rows, cols=sl.n),
                            z=PolyMatrix.build(field, z_rows, cols=sl.n))


_PAULI_CHARS = {(0, 0): " ", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


def render_pauli(sl: SemiInfiniteSlice, frame_sep: str = "") -> str:
    """Render the band as Pauli letters (q = 2) or (x,z) pairs (q > 2).

    For qubits each position becomes one of blank/X/Z/Y; trailing blanks
    are stripped so the output matches the customary printed form.
    """
    lines = []
    if sl.field.q == 2:
        for row in sl.band:
            chunks = []
            for f in range(len(row) // sl.n):
                chunk = "".join(_PAULI_CHARS[sym] for sym in row[f * sl.n:(f + 1) * sl.n])
                chunks.append(chunk)
            lines.append(frame_sep.join(chunks).rstrip())
    else:
        for row in sl.band:
            chunks = []
            for f in range(len(row) // sl.n):
                chunk = " ".join(f"({x},{z})" for x, z in row[f * sl.n:(f + 1) * sl.n])
                chunks.append(chunk)
            sep = frame_sep if frame_sep else " "
            lines.append(sep.join(chunks).rstrip())
    return "\n".join(lines)
