"""Shared helpers: compact constructors for fields, polynomials, matrices."""

from __future__ import annotations

import itertools
import random

import pytest

from qcconv import (ConvCode, PolyMatrix, StabilizerMatrix, laurent,
                    make_field)
from qcconv.formats import parse_poly

F2 = make_field(2)
F3 = make_field(3)
F4 = make_field(2, 2)
F5 = make_field(5)


def P(field, text):
    """Parse a polynomial from its coefficient-string form."""
    return parse_poly(field, text)


def pm(field, rows, cols=None):
    """Matrix from coefficient-string entries (or LaurentPoly values)."""
    parsed = [[e if not isinstance(e, str) else P(field, e) for e in row]
              for row in rows]
    return PolyMatrix.build(field, parsed, cols=cols)


def cm(field, grid, cols=None):
    """Matrix from int constants."""
    return PolyMatrix.from_constants(field, grid, cols=cols)


def stab(field, x_rows, z_rows, cols=None):
    return StabilizerMatrix(x=pm(field, x_rows, cols=cols),
                            z=pm(field, z_rows, cols=cols))


def example1_stabilizer():
    return stab(F2,
                [["11", "1", "11"], ["0", "01", "01"]],
                [["0", "01", "01"], ["11", "11", "1"]])


def five_qubit_stabilizer():
    x = cm(F2, [[1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [1, 0, 1, 0, 0], [0, 1, 0, 1, 0]])
    z = cm(F2, [[1, 1, 1, 1, 0], [0, 1, 1, 1, 1], [1, 0, 1, 1, 1], [1, 1, 0, 1, 1]])
    return StabilizerMatrix(x=x, z=z)


def dual_generator_three():
    """The 1x3 minimal dual generator of the worked rate-2/3 code."""
    return pm(F2, [["11001", "10111", "10101"]])


def rate_two_thirds_code():
    return ConvCode(pm(F2, [["011", "1", "101"], ["1", "011", "111"]]))


def fig_table_code(nu=3):
    rows = {3: ("1100", "1110", "1001", "1101")}
    return ConvCode(pm(F2, [list(rows[nu])]))


def random_poly(rng: random.Random, field, maxdeg, lo=0):
    return laurent(field, [rng.randrange(field.q) for _ in range(maxdeg + 1)], lo)


def random_matrix(rng: random.Random, field, rows, cols, maxdeg):
    return PolyMatrix.build(
        field, [[random_poly(rng, field, maxdeg) for _ in range(cols)]
                for _ in range(rows)])


def random_self_orthogonal_row(rng: random.Random, field, n, maxdeg,
                               tries=5000):
    """A 1xn delay-free, non-catastrophic row g with g g(1/D)^t = 0."""
    for _ in range(tries):
        g = pm(field, [[random_poly(rng, field, maxdeg) for _ in range(n)]])
        row = g.entries[0]
        if all(e.is_zero for e in row):
            continue
        if not any(e.constant_term() for e in row):
            continue
        if not (g * g.adjoint_transpose()).is_zero:
            continue
        if ConvCode(g).is_catastrophic():
            continue
        return g
    return None


def random_small_code(rng: random.Random, fields=(F2, F2, F3), max_n=4,
                      max_deg=3, k_cap=None):
    """Random non-catastrophic delay-free code; k capped so oracles stay cheap."""
    while True:
        field = rng.choice(fields)
        n = rng.randint(2, max_n)
        kmax = k_cap or (3 if field.q == 2 else 2)
        k = rng.randint(1, min(n - 1, kmax))
        deg = rng.randint(0, max_deg)
        rows = [[random_poly(rng, field, deg) for _ in range(n)]
                for _ in range(k)]
        try:
            c = ConvCode(PolyMatrix.build(field, rows))
        except ValueError:
            continue
        if c.is_catastrophic() or not c.is_delay_free():
            continue
        return c


def brute_force_min_weight(code: ConvCode, frames=4):
    """Truncated-codeword oracle: min weight and count over inputs of
    <= `frames` blocks whose first block is nonzero (int convolution,
    independent of the trellis search)."""
    field = code.field
    q, k, n = field.q, code.k, code.n
    maxdeg = max((e.degree for row in code.generator.entries for e in row
                  if not e.is_zero), default=0)
    coef = [[[code.generator.entry(i, j).coeff(s) for s in range(maxdeg + 1)]
             for j in range(n)] for i in range(k)]
    blocks = list(itertools.product(range(q), repeat=k))
    nonzero = [b for b in blocks if any(b)]
    out_len = frames + maxdeg
    best, count = None, 0
    for first in nonzero:
        for rest in itertools.product(blocks, repeat=frames - 1):
            seq = (first,) + rest
            w = 0
            for j in range(n):
                for t in range(out_len):
                    acc = 0
                    for i in range(k):
                        ci = coef[i][j]
                        for s in range(max(0, t - frames + 1), min(len(ci), t + 1)):
                            u = seq[t - s][i]
                            if u and ci[s]:
                                acc = field.add(acc, field.mul(ci[s], u))
                    if acc:
                        w += 1
            if best is None or w < best:
                best, count = w, 1
            elif w == best:
                count += 1
    return best, count


@pytest.fixture
def rng():
    return random.Random(0xC0DEC)
