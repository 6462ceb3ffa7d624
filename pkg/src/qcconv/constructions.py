"""Stabilizer constructions: CSS type, tensor products, cyclic products.

All constructors validate their preconditions exactly (dual containment,
non-catastrophic delay-free parity checks, root orders) and return
stabilizers that provably satisfy the commutation condition; the checks
are cheap relative to construction and are always on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convcode import ConvCode, dual_code, free_distance
from .fields import Field
from .laurent import laurent, one
from .polymatrix import (PolyMatrix, const_row_space_contains, kron,
                         lift_to_field, smith_normal_form, vstack)
from .stabilizer import StabilizerMatrix, is_self_orthogonal


@dataclass(frozen=True)
class CssInput:
    """Parity check pair for the block-diagonal CSS stabilizer.

    h1 checks the code that supplies the Z rows ((n-k1) x n), h2 the one
    supplying the X rows (k2 x n); both over the same field and frame.
    """

    h1: PolyMatrix
    h2: PolyMatrix

    def __post_init__(self) -> None:
        if self.h1.field != self.h2.field:
            raise ValueError("parity checks must share one field")
        if self.h1.cols != self.h2.cols:
            raise ValueError("parity checks must share the frame size")

    @property
    def field(self) -> Field:
        return self.h1.field

    @property
    def n(self) -> int:
        return self.h1.cols


def _check_parity_matrix(h: PolyMatrix, name: str) -> None:
    if h.rows == 0:
        return
    code = ConvCode(h)
    if code.is_catastrophic():
        raise ValueError(f"{name} corresponds to a catastrophic encoder")
    if not code.is_delay_free():
        raise ValueError(f"{name} corresponds to a delayed encoder (rank-deficient at D=0)")


def css_construct(inp: CssInput) -> StabilizerMatrix:
    """Block-diagonal stabilizer (H2 | 0 ; 0 | H1) with dual containment.

    Requires H2(D) H1(1/D)^t = 0, the condition under which every X row
    commutes with every shifted Z row; violating inputs are rejected.
    """
    h1, h2 = inp.h1, inp.h2
    _check_parity_matrix(h1, "H1")
    _check_parity_matrix(h2, "H2")
    if h1.rows and h2.rows:
        prod = h2 * h1.adjoint_transpose()
        if not prod.is_zero:
            raise ValueError("dual containment violated: H2(D) H1(1/D)^t != 0")
    n = inp.n
    field = inp.field
    x = vstack(h2, PolyMatrix.zeros(field, h1.rows, n))
    z = vstack(PolyMatrix.zeros(field, h2.rows, n), h1)
    s = StabilizerMatrix(x=x, z=z)
    assert is_self_orthogonal(s)
    return s


def product_construct(g1: ConvCode, s2: StabilizerMatrix) -> StabilizerMatrix:
    """Kronecker product of a prime-field classical generator with a stabilizer.

    The X and Z halves are tensored separately; coefficients of G1 scale
    entries of S2 inside the (possibly larger) field of S2.  The result
    is self-orthogonal whenever S2 is.
    """
    if g1.field.ell != 1:
        raise ValueError("the classical factor must be over a prime field")
    if g1.field.p != s2.field.p:
        raise ValueError("field characteristics differ")
    if g1.is_catastrophic():
        raise ValueError("the classical factor must be non-catastrophic")
    if not g1.is_delay_free():
        raise ValueError("the classical factor must be delay-free")
    gen = lift_to_field(g1.generator, s2.field)
    prod = StabilizerMatrix(x=kron(gen, s2.x), z=kron(gen, s2.z))
    if is_self_orthogonal(s2):
        assert is_self_orthogonal(prod)
    return prod


def product_distance_bound(g1: ConvCode, quantum_distance: int,
                           weight_cap: int | None = None) -> int:
    """min(d1_dual, d2): the product code's minimum-distance bound.

    The classical dual distance is computed exactly; the quantum factor's
    distance is taken on trust from the caller.  The bound itself is
    metadata and is not verified against the product stabilizer.
    """
    d1_dual = free_distance(dual_code(g1), weight_cap).d_free
    return min(d1_dual, quantum_distance)


def cyclic_g2(field: Field, n2: int, d: int, alpha: int) -> PolyMatrix:
    """The (d-1) x n2 Vandermonde-style self-orthogonal inner generator.

    Row i (1-based) is (alpha^0, alpha^i, alpha^2i, ..., alpha^(n2-1)i).
    Requires alpha of multiplicative order exactly n2 and the strict
    bound 2(d-1) < n2.  At 2(d-1) = n2 the generator is not
    self-orthogonal: row d-1 has self inner product n2 != 0 in F_q
    (witness: q=5, n2=4, alpha=2, d=3).
    """
    if n2 < 1:
        raise ValueError("n2 must be positive")
    if (field.q - 1) % n2 != 0:
        raise ValueError(f"n2={n2} does not divide q-1={field.q - 1}")
    if alpha == 0 or field.multiplicative_order(alpha) != n2:
        raise ValueError(f"alpha={alpha} does not have multiplicative order {n2}")
    if d < 1:
        raise ValueError("d must be >= 1")
    if 2 * (d - 1) >= n2:
        raise ValueError(
            f"2(d-1) = {2 * (d - 1)} must be strictly less than n2 = {n2}; "
            "at equality the last row is not self-orthogonal "
            "(e.g. q=5, n2=4, alpha=2, d=3)")
    rows = []
    for i in range(1, d):
        rows.append([laurent(field, [field.pow(alpha, i * ell)]) for ell in range(n2)])
    g2 = PolyMatrix.build(field, rows, cols=n2)
    assert (g2 * g2.transpose()).is_zero
    return g2


@dataclass(frozen=True)
class OverlappedResult:
    stabilizer: StabilizerMatrix        # X-only: (G(D) | 0)
    generator: PolyMatrix               # G(D) itself
    catastrophic: bool                  # reported, not repaired


def overlapped_generator(g1: PolyMatrix, g2: PolyMatrix, mu: int) -> OverlappedResult:
    """Convolutional generator from overlapping copies of G1 (x) G2.

    Column block j of G1 lands at frame position (j mod (n1-mu)) * n2
    with delay D^(j div (n1-mu)); consecutive copies of the block
    generator overlap in mu*n2 positions.  Pairwise orthogonality of all
    shifted rows follows from G2 G2^t = 0.  The resulting encoder may be
    catastrophic; that is reported, not repaired.
    """
    if g1.field != g2.field:
        raise ValueError("G1 and G2 must share one field")
    if not g1.is_constant() or not g2.is_constant():
        raise ValueError("overlapped construction expects constant block factors")
    n1 = g1.cols
    if not 1 <= mu < n1:
        raise ValueError(f"overlap mu={mu} must satisfy 1 <= mu < n1={n1}")
    if not (g2 * g2.transpose()).is_zero:
        raise ValueError("G2 must satisfy G2 G2^t = 0")
    field = g1.field
    n2 = g2.cols
    stride = n1 - mu
    width = stride * n2
    rows = []
    for a in range(g1.rows):
        for b in range(g2.rows):
            row_terms: list[dict[int, int]] = [dict() for _ in range(width)]
            for j in range(n1):
                c = g1.entry(a, j).constant_term()
                if c == 0:
                    continue
                pos = (j % stride) * n2
                delay = j // stride
                for m in range(n2):
                    v = field.mul(c, g2.entry(b, m).constant_term())
                    if v:
                        col = row_terms[pos + m]
                        col[delay] = field.add(col.get(delay, 0), v)
            row = []
            for col in row_terms:
                if not col:
                    row.append(laurent(field, []))
                else:
                    hi = max(col)
                    row.append(laurent(field, [col.get(e, 0) for e in range(hi + 1)]))
            rows.append(row)
    gen = PolyMatrix.build(field, rows, cols=width)
    stab = StabilizerMatrix(x=gen, z=PolyMatrix.zeros(field, gen.rows, width))
    assert is_self_orthogonal(stab)
    # invariant-factor test applied directly: the generator rows may be
    # linearly dependent (overlap can delay-replicate a row), which a
    # ConvCode would reject outright
    catastrophic = any(f != one(field)
                       for f in smith_normal_form(gen).invariant_factors) \
        if gen.rows else False
    return OverlappedResult(stabilizer=stab, generator=gen, catastrophic=catastrophic)


def block_rowspace_witness(result: OverlappedResult, g1: PolyMatrix,
                           g2: PolyMatrix) -> bool:
    """Check each generator row, expanded at shift zero, against G1 (x) G2.

    The expanded support of one row is exactly one window of n1*n2
    columns; membership of that window in the row space of the block
    generator is the checkable part of the construction's distance
    argument.
    """
    field = g1.field
    block = kron(g1, g2)
    block_grid = block.constant_grid()
    n1n2 = g1.cols * g2.cols
    for i in range(result.generator.rows):
        window = [0] * n1n2
        for j in range(result.generator.cols):
            for e, c in result.generator.entry(i, j).terms():
                col = e * result.generator.cols + j
                if col >= n1n2:
                    return False
                window[col] = c
        if not const_row_space_contains(field, block_grid, window):
            return False
    return True
