"""Matrices of Laurent polynomials and Smith normal form over F_q[D].

The Smith normal form routine works purely with elementary row/column
operations (swap, scale by a nonzero constant, add a polynomial multiple)
and records the ordered operation trace, because the encoder synthesis
translates every recorded column operation into a Clifford gate.  The
pivot rule is fixed (entry of minimal degree, ties broken by lowest row,
then lowest column index) so that the trace, the transforms and every
synthesized circuit are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .fields import Field
from .laurent import LaurentPoly, divmod_poly, laurent, one, zero


class PolyMatrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int,
                 entries: tuple[tuple[LaurentPoly, ...], ...]):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- construction -------------------------------------------------------

    @staticmethod
    def build(field: Field, rows: Sequence[Sequence[LaurentPoly]],
              cols: int | None = None) -> "PolyMatrix":
        nrows = len(rows)
        if nrows == 0:
            if cols is None:
                raise ValueError("column count required for a 0-row matrix")
            return PolyMatrix(field, 0, cols, ())
        ncols = len(rows[0])
        grid = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for e in r:
                if e.field != field:
                    raise ValueError("field mismatch in matrix entries")
            grid.append(tuple(r))
        if cols is not None and cols != ncols:
            raise ValueError("explicit column count disagrees with rows")
        return PolyMatrix(field, nrows, ncols, tuple(grid))

    @staticmethod
    def identity(field: Field, n: int) -> "PolyMatrix":
        z, o = zero(field), one(field)
        return PolyMatrix(field, n, n, tuple(
            tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "PolyMatrix":
        z = zero(field)
        return PolyMatrix(field, rows, cols, tuple(tuple(z for _ in range(cols))
                                                   for _ in range(rows)))

    @staticmethod
    def from_constants(field: Field, grid: Sequence[Sequence[int]],
                       cols: int | None = None) -> "PolyMatrix":
        return PolyMatrix.build(
            field, [[laurent(field, [c]) for c in row] for row in grid], cols)

    # -- queries --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[LaurentPoly, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    @property
    def is_polynomial(self) -> bool:
        return all(e.is_polynomial for row in self.entries for e in row)

    def max_degree(self) -> int:
        """Largest exponent appearing anywhere; 0 for a zero/constant matrix."""
        degs = [e.degree for row in self.entries for e in row if not e.is_zero]
        return max(degs, default=0)

    def min_order(self) -> int:
        """Smallest exponent appearing anywhere; 0 for a zero/constant matrix."""
        orders = [e.order for row in self.entries for e in row if not e.is_zero]
        return min(orders, default=0)

    def is_constant(self) -> bool:
        return all(e.is_constant for row in self.entries for e in row)

    def constant_grid(self) -> list[list[int]]:
        if not self.is_constant():
            raise ValueError("matrix has non-constant entries")
        return [[e.constant_term() for e in row] for row in self.entries]

    def constant_term_grid(self) -> list[list[int]]:
        """Coefficient of D^0 of every entry (the value at D = 0)."""
        return [[e.constant_term() for e in row] for row in self.entries]

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "PolyMatrix") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.field, self.rows, self.cols, tuple(
            tuple(-a for a in row) for row in self.entries))

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.field, self.rows, other.cols, tuple(out))

    def scale(self, f: LaurentPoly) -> "PolyMatrix":
        return self.map_entries(lambda e: e * f)

    def map_entries(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix(self.field, self.rows, self.cols, tuple(
            tuple(fn(e) for e in row) for row in self.entries))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.field, self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def adjoint(self) -> "PolyMatrix":
        """Entrywise substitution D -> 1/D."""
        return self.map_entries(lambda e: e.adjoint())

    def adjoint_transpose(self) -> "PolyMatrix":
        """Entrywise adjoint followed by transpose: M(1/D)^t."""
        return self.adjoint().transpose()

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.field, len(row_idx), len(col_idx), tuple(
            tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PolyMatrix) and self.field == other.field
                and self.shape == other.shape and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"PolyMatrix({self.rows}x{self.cols})"
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.entries)
        return f"[{body}]"


def hstack(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.rows != b.rows or a.field != b.field:
        raise ValueError("hstack shape/field mismatch")
    return PolyMatrix(a.field, a.rows, a.cols + b.cols, tuple(
        ra + rb for ra, rb in zip(a.entries, b.entries)))


def vstack(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.cols or a.field != b.field:
        raise ValueError("vstack shape/field mismatch")
    return PolyMatrix(a.field, a.rows + b.rows, a.cols, a.entries + b.entries)


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product, row blocks indexed by rows of ``a``."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.entries[i][j]
                row.extend(aij * b.entries[k][m] for m in range(b.cols))
            out.append(tuple(row))
    return PolyMatrix(a.field, a.rows * b.rows, a.cols * b.cols, tuple(out))


def lift_to_field(m: PolyMatrix, target: Field) -> PolyMatrix:
    """Reinterpret a prime-field matrix inside an extension of the same p.

    Valid because prime-subfield elements keep their int encoding in the
    extension (digit vector (c, 0, ..., 0)).
    """
    if m.field == target:
        return m
    if m.field.p != target.p or m.field.ell != 1:
        raise ValueError(f"cannot lift from {m.field!r} to {target!r}")
    return PolyMatrix(target, m.rows, m.cols, tuple(
        tuple(LaurentPoly(target, e.lo, e.coeffs) for e in row)
        for row in m.entries))


# -- elementary operations and Smith normal form ------------------------------


@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int


@dataclass(frozen=True)
class RowScale:
    i: int
    c: int  # nonzero field constant


@dataclass(frozen=True)
class RowAddMul:
    src: int
    dst: int
    f: LaurentPoly  # row[dst] += f * row[src]


@dataclass(frozen=True)
class ColSwap:
    i: int
    j: int


@dataclass(frozen=True)
class ColScale:
    j: int
    c: int


@dataclass(frozen=True)
class ColAddMul:
    src: int
    dst: int
    f: LaurentPoly  # col[dst] += f * col[src]


ElementaryOp = RowSwap | RowScale | RowAddMul | ColSwap | ColScale | ColAddMul


def apply_op_grid(grid: list[list[LaurentPoly]], op: ElementaryOp) -> None:
    """Apply an elementary operation in place to a list-of-lists grid."""
    if isinstance(op, RowSwap):
        grid[op.i], grid[op.j] = grid[op.j], grid[op.i]
    elif isinstance(op, RowScale):
        grid[op.i] = [e.scale(op.c) for e in grid[op.i]]
    elif isinstance(op, RowAddMul):
        src, dst, f = op.src, op.dst, op.f
        grid[dst] = [grid[dst][j] + f * grid[src][j] for j in range(len(grid[dst]))]
    elif isinstance(op, ColSwap):
        for row in grid:
            row[op.i], row[op.j] = row[op.j], row[op.i]
    elif isinstance(op, ColScale):
        for row in grid:
            row[op.j] = row[op.j].scale(op.c)
    elif isinstance(op, ColAddMul):
        src, dst, f = op.src, op.dst, op.f
        for row in grid:
            row[dst] = row[dst] + f * row[src]
    else:  # pragma: no cover
        raise TypeError(f"unknown op {op!r}")


def replay_ops(field: Field, rows: int, cols: int,
               ops: Iterable[ElementaryOp]) -> tuple[PolyMatrix, PolyMatrix]:
    """Rebuild the (A, B) transforms of a Smith decomposition from its trace.

    Row operations accumulate into A (left transform, rows x rows), column
    operations into B (right transform, cols x cols), in trace order.
    """
    a = [list(r) for r in PolyMatrix.identity(field, rows).entries]
    b = [list(r) for r in PolyMatrix.identity(field, cols).entries]
    for op in ops:
        if isinstance(op, (RowSwap, RowScale, RowAddMul)):
            apply_op_grid(a, op)
        else:
            apply_op_grid(b, op)
    return (PolyMatrix.build(field, a, cols=rows),
            PolyMatrix.build(field, b, cols=cols))


@dataclass(frozen=True)
class SmithDecomposition:
    """A * M * B = S with S diagonal, monic, divisibility-chained."""

    a: PolyMatrix
    s: PolyMatrix
    b: PolyMatrix
    ops: tuple[ElementaryOp, ...]

    @property
    def invariant_factors(self) -> tuple[LaurentPoly, ...]:
        n = min(self.s.rows, self.s.cols)
        return tuple(self.s.entries[i][i] for i in range(n)
                     if not self.s.entries[i][i].is_zero)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _find_pivot(grid: list[list[LaurentPoly]], t: int) -> tuple[int, int] | None:
    best: tuple[int, int, int] | None = None
    for i in range(t, len(grid)):
        for j in range(t, len(grid[0])):
            e = grid[i][j]
            if e.is_zero:
                continue
            d = e.degree
            assert d is not None
            if best is None or (d, i, j) < best:
                best = (d, i, j)
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(m: PolyMatrix) -> SmithDecomposition:
    """Diagonalize a polynomial matrix by elementary operations.

    Requires every entry to have no negative exponents.  The returned
    trace replayed from identity matrices reconstructs A and B exactly.
    """
    if not m.is_polynomial:
        raise ValueError("Smith normal form requires polynomial entries (lo >= 0)")
    field = m.field
    nr, nc = m.rows, m.cols
    grid = [list(row) for row in m.entries]
    ops: list[ElementaryOp] = []

    def emit(op: ElementaryOp) -> None:
        apply_op_grid(grid, op)
        ops.append(op)

    t = 0
    while t < min(nr, nc):
        piv = _find_pivot(grid, t)
        if piv is None:
            break
        i, j = piv
        if i != t:
            emit(RowSwap(t, i))
        if j != t:
            emit(ColSwap(t, j))
        while True:
            # clear the pivot column; a nonzero remainder becomes the new,
            # strictly smaller pivot
            restart = False
            for i in range(t + 1, nr):
                if grid[i][t].is_zero:
                    continue
                q, r = divmod_poly(grid[i][t], grid[t][t])
                if not q.is_zero:
                    emit(RowAddMul(t, i, -q))
                if not r.is_zero:
                    emit(RowSwap(t, i))
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, nc):
                if grid[t][j].is_zero:
                    continue
                q, r = divmod_poly(grid[t][j], grid[t][t])
                if not q.is_zero:
                    emit(ColAddMul(t, j, -q))
                if not r.is_zero:
                    emit(ColSwap(t, j))
                    restart = True
                    break
            if restart:
                continue
            # pivot must divide the rest of the submatrix; pull a violating
            # row up and keep reducing (pivot degree strictly decreases)
            violator = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if grid[i][j].is_zero:
                        continue
                    _, r = divmod_poly(grid[i][j], grid[t][t])
                    if not r.is_zero:
                        violator = i
                        break
                if violator is not None:
                    break
            if violator is None:
                break
            emit(RowAddMul(violator, t, one(field)))
        lc = grid[t][t].leading_coeff()
        if lc != 1:
            emit(RowScale(t, field.inv(lc)))
        t += 1

    a, b = replay_ops(field, nr, nc, ops)
    s = PolyMatrix.build(field, grid, cols=nc)
    return SmithDecomposition(a=a, s=s, b=b, ops=tuple(ops))


def rank(m: PolyMatrix) -> int:
    """Rank over the rational function field F_q(D)."""
    return smith_normal_form(_cleared(m)).rank


def is_unimodular(m: PolyMatrix) -> bool:
    """Square, polynomial, and invertible over F_q[D]."""
    if m.rows != m.cols or not m.is_polynomial:
        return False
    snf = smith_normal_form(m)
    facs = snf.invariant_factors
    return len(facs) == m.rows and all(f == one(m.field) for f in facs)


def inverse_unimodular(m: PolyMatrix) -> PolyMatrix:
    snf = smith_normal_form(m)
    if snf.rank != m.rows or m.rows != m.cols or snf.s != PolyMatrix.identity(m.field, m.rows):
        raise ValueError("matrix is not unimodular")
    # A M B = I  =>  M^-1 = B A
    return snf.b * snf.a


def _cleared(m: PolyMatrix) -> PolyMatrix:
    """Shift each row by a power of D so all entries become polynomial."""
    rows = []
    for row in m.entries:
        lo = min((e.order for e in row if not e.is_zero), default=0)
        shift = -lo if lo < 0 else 0
        rows.append([e.shift(shift) for e in row])
    return PolyMatrix.build(m.field, rows, cols=m.cols)


def kernel_basis(m: PolyMatrix) -> PolyMatrix:
    """Basis of {v : v * M^t = 0}, i.e. of the right kernel of M, as rows.

    Read off from the Smith decomposition: the columns of B beyond the
    rank are a free-module basis of the kernel.  The result always has
    invariant factors 1 (it is a basic generator of the kernel module).
    """
    if not m.is_polynomial:
        raise ValueError("kernel_basis requires polynomial entries")
    snf = smith_normal_form(m)
    r = snf.rank
    rows = [tuple(snf.b.entries[i][j] for i in range(m.cols))
            for j in range(r, m.cols)]
    return PolyMatrix.build(m.field, rows, cols=m.cols)


def determinant(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if not m.is_polynomial:
        raise ValueError("determinant requires polynomial entries")
    n = m.rows
    if n == 0:
        return one(m.field)
    field = m.field
    grid = [list(row) for row in m.entries]
    sign = 1
    prev = one(field)
    for t in range(n - 1):
        if grid[t][t].is_zero:
            for i in range(t + 1, n):
                if not grid[i][t].is_zero:
                    grid[t], grid[i] = grid[i], grid[t]
                    sign = -sign
                    break
            else:
                return zero(field)
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                num = grid[i][j] * grid[t][t] - grid[i][t] * grid[t][j]
                q, r = divmod_poly(num, prev)
                assert r.is_zero, "Bareiss division must be exact"
                grid[i][j] = q
            grid[i][t] = zero(field)
        prev = grid[t][t]
    det = grid[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det


def row_module_contains(m: PolyMatrix, v: PolyMatrix,
                        rational: bool = False) -> bool:
    """Is the single-row matrix v in the row module of m over F_q[D]?

    With ``rational=True`` membership is tested over F_q(D) instead
    (divisibility by the invariant factors is not required).
    """
    if v.rows != 1 or v.cols != m.cols:
        raise ValueError("v must be a single row of matching width")
    snf = smith_normal_form(m)
    w = v * snf.b
    r = snf.rank
    for j in range(m.cols):
        e = w.entries[0][j]
        if j >= r:
            if not e.is_zero:
                return False
        elif not rational and not e.is_zero:
            _, rem = divmod_poly(e, snf.s.entries[j][j])
            if not rem.is_zero:
                return False
    return True


def row_modules_equal(a: PolyMatrix, b: PolyMatrix) -> bool:
    """Mutual row-module containment over F_q[D]."""
    return (all(row_module_contains(b, a.submatrix([i], range(a.cols)))
                for i in range(a.rows))
            and all(row_module_contains(a, b.submatrix([i], range(b.cols)))
                    for i in range(b.rows)))


# -- constant-matrix linear algebra -------------------------------------------


def const_rref(field: Field, grid: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of an int grid; returns (rref, pivot columns)."""
    g = [list(row) for row in grid]
    nr = len(g)
    nc = len(g[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if g[i][c] != 0), None)
        if piv is None:
            continue
        g[r], g[piv] = g[piv], g[r]
        inv = field.inv(g[r][c])
        g[r] = [field.mul(inv, x) for x in g[r]]
        for i in range(nr):
            if i != r and g[i][c] != 0:
                f = g[i][c]
                g[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(g[i], g[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return g, pivots


def const_rank(field: Field, grid: Sequence[Sequence[int]]) -> int:
    return len(const_rref(field, grid)[1])


def const_kernel(field: Field, grid: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis rows of {v : grid * v^t = 0} for an int grid."""
    nr = len(grid)
    nc = len(grid[0]) if nr else 0
    if nc == 0:
        return []
    rref, pivots = const_rref(field, grid)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rref[r][fc])
        basis.append(v)
    return basis


def const_row_space_contains(field: Field, grid: Sequence[Sequence[int]],
                             v: Sequence[int]) -> bool:
    if not grid:
        return all(x == 0 for x in v)
    base = const_rank(field, grid)
    return const_rank(field, list(grid) + [list(v)]) == base


# -- minimal (row-reduced) generators -----------------------------------------


def row_reduce(m: PolyMatrix) -> PolyMatrix:
    """Reduce a full-row-rank polynomial matrix to row-reduced form.

    Repeatedly cancels leading-coefficient relations, strictly lowering
    the row-degree sum; the result generates the same module and has
    minimal overall constraint length.
    """
    if not m.is_polynomial:
        raise ValueError("row_reduce requires polynomial entries")
    field = m.field
    rows = [list(r) for r in m.entries]
    if not rows:
        return m

    def row_degree(row: list[LaurentPoly]) -> int:
        degs = [e.degree for e in row if not e.is_zero]
        if not degs:
            raise ValueError("row_reduce requires full row rank (zero row found)")
        return max(degs)

    while True:
        degs = [row_degree(r) for r in rows]
        lead = [[e.coeff(degs[i]) for e in rows[i]] for i in range(len(rows))]
        # relation c * lead = 0  <=>  c in kernel of lead^t
        leadt = [[lead[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
        ker = const_kernel(field, leadt) if leadt else []
        if not ker:
            break
        c = ker[0]
        support = [i for i, ci in enumerate(c) if ci != 0]
        tgt = max(support, key=lambda i: (degs[i], i))
        new_row = [zero(field) for _ in rows[0]]
        for i in support:
            sh = degs[tgt] - degs[i]
            for j, e in enumerate(rows[i]):
                new_row[j] = new_row[j] + e.scale(c[i]).shift(sh)
        rows[tgt] = new_row
    return PolyMatrix.build(field, rows, cols=m.cols)
