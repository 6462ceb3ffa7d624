import pytest

from qcconv import (PolyMatrix, determinant, is_unimodular, kernel_basis,
                    laurent, one, rank, row_modules_equal, row_reduce,
                    smith_normal_form, zero)
from qcconv.polymatrix import (const_kernel, const_rank, divmod_poly,
                               inverse_unimodular, replay_ops,
                               row_module_contains)
from conftest import F2, F3, F4, F5, P, pm, cm, dual_generator_three, random_matrix


def test_adjoint_transpose_examples():
    eye = PolyMatrix.identity(F2, 3)
    assert eye.adjoint_transpose() == eye
    h = dual_generator_three()
    ht = h.adjoint_transpose()
    assert ht.shape == (3, 1)
    assert ht.entry(0, 0) == laurent(F2, [1, 0, 0, 1, 1], lo=-4)
    z = PolyMatrix.zeros(F5, 2, 3)
    assert z.adjoint_transpose() == PolyMatrix.zeros(F5, 3, 2)


def test_smith_identity():
    eye = PolyMatrix.identity(F3, 4)
    dec = smith_normal_form(eye)
    assert dec.a == eye and dec.b == eye and dec.s == eye
    assert dec.ops == ()


def test_smith_single_row_gcd_one():
    h = dual_generator_three()
    dec = smith_normal_form(h)
    assert dec.s.entry(0, 0) == one(F2)
    assert dec.s.entry(0, 1).is_zero and dec.s.entry(0, 2).is_zero
    assert dec.a * h * dec.b == dec.s


def test_smith_divisibility_forced():
    m = pm(F2, [["001", "0"], ["0", "01"]])     # diag(D^2, D)
    dec = smith_normal_form(m)
    assert dec.s.entry(0, 0) == P(F2, "01")     # D
    assert dec.s.entry(1, 1) == P(F2, "001")    # D^2
    assert dec.a * m * dec.b == dec.s


def test_smith_rejects_laurent():
    m = pm(F2, [[laurent(F2, [1], lo=-1)]])
    with pytest.raises(ValueError):
        smith_normal_form(m)


def test_kernel_examples():
    assert kernel_basis(PolyMatrix.identity(F2, 3)).rows == 0
    k = kernel_basis(pm(F2, [["1", "1"]]))
    assert k.shape == (1, 2)
    assert k.entry(0, 0) == one(F2) and k.entry(0, 1) == one(F2)

    h = dual_generator_three()
    hadj = h.adjoint()
    lo = min(e.order for e in hadj.entries[0])
    cleared = hadj.map_entries(lambda e: e.shift(-lo))
    basis = kernel_basis(cleared)
    assert basis.shape == (2, 3)
    # each basis row annihilates the original column: v * M^t = 0
    assert (basis * cleared.transpose()).is_zero
    assert (basis * h.adjoint_transpose()).is_zero


def test_kernel_of_wide_zero_rank():
    z = PolyMatrix.zeros(F2, 2, 3)
    k = kernel_basis(z)
    assert k.shape == (3, 3)
    assert is_unimodular(k)


@pytest.mark.parametrize("field", [F2, F3, F4, F5])
def test_smith_randomized_invariants(field, rng):
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, field, r, c, rng.randint(0, 6))
        dec = smith_normal_form(m)
        assert dec.a * m * dec.b == dec.s
        da, db = determinant(dec.a), determinant(dec.b)
        assert da.is_constant and not da.is_zero
        assert db.is_constant and not db.is_zero
        facs = dec.invariant_factors
        for f1, f2 in zip(facs, facs[1:]):
            _, rem = divmod_poly(f2, f1)
            assert rem.is_zero
        for f in facs:
            assert f.leading_coeff() == 1
        # off-diagonal must vanish
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert dec.s.entry(i, j).is_zero
        a2, b2 = replay_ops(field, r, c, dec.ops)
        assert a2 == dec.a and b2 == dec.b


def test_rank_and_unimodular():
    m = pm(F2, [["1", "11"], ["0", "1"]])   # det = 1
    assert rank(m) == 2
    assert is_unimodular(m)
    inv = inverse_unimodular(m)
    assert m * inv == PolyMatrix.identity(F2, 2)
    sing = pm(F2, [["11", "11"], ["11", "11"]])
    assert rank(sing) == 1
    assert not is_unimodular(sing)
    assert not is_unimodular(pm(F2, [["01"]]))   # det = D


def test_determinant_matches_cofactor_small(rng):
    for _ in range(30):
        field = rng.choice([F2, F3, F5])
        n = rng.randint(1, 3)
        m = random_matrix(rng, field, n, n, 2)
        det = determinant(m)
        if n == 1:
            assert det == m.entry(0, 0)
        elif n == 2:
            assert det == m.entry(0, 0) * m.entry(1, 1) - m.entry(0, 1) * m.entry(1, 0)
        else:
            acc = zero(field)
            for j in range(3):
                minor = m.submatrix([1, 2], [c for c in range(3) if c != j])
                cof = minor.entry(0, 0) * minor.entry(1, 1) - minor.entry(0, 1) * minor.entry(1, 0)
                term = m.entry(0, j) * cof
                acc = acc + (term if j % 2 == 0 else -term)
            assert det == acc


def test_row_module_membership():
    g = pm(F2, [["11", "0"], ["0", "01"]])   # rows (1+D, 0), (0, D)
    assert row_module_contains(g, pm(F2, [["11", "01"]]))
    assert not row_module_contains(g, pm(F2, [["1", "0"]]))
    assert row_module_contains(g, pm(F2, [["1", "0"]]), rational=True)


def test_row_modules_equal():
    a = pm(F2, [["1", "1"], ["0", "11"]])
    b = pm(F2, [["1", "111"], ["0", "11"]])   # row1 + D*row2, row2
    assert row_modules_equal(a, b)
    assert not row_modules_equal(a, pm(F2, [["1", "1"]]))


def test_row_reduce_minimizes_degrees():
    m = pm(F2, [["1", "01"], ["01", "101"]])   # unimodular: det = 1
    red = row_reduce(m)
    assert row_modules_equal(m, red)
    degs = [max(e.degree for e in row if not e.is_zero) for row in red.entries]
    assert sum(degs) == 0   # minimal form of a unimodular matrix is constant


def test_const_linear_algebra():
    assert const_rank(F2, [[1, 1], [1, 1]]) == 1
    ker = const_kernel(F3, [[1, 2, 0]])
    assert len(ker) == 2
    for v in ker:
        assert (v[0] + 2 * v[1]) % 3 == 0


def test_kron_shapes():
    from qcconv import kron
    a = pm(F2, [["1", "01"]])
    b = cm(F2, [[1, 0], [1, 1]])
    k = kron(a, b)
    assert k.shape == (2, 4)
    assert k.entry(0, 2) == P(F2, "01")
    assert k.entry(1, 3) == P(F2, "01")
