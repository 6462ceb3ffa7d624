import pytest

from qcconv import (PolyMatrix, StabilizerMatrix, code_params,
                    expand_semi_infinite, is_self_orthogonal, laurent,
                    reconstruct, render_pauli, symplectic_commutator,
                    trivial_stabilizer)
from conftest import (F2, F3, cm, example1_stabilizer, five_qubit_stabilizer,
                      pm, random_matrix, stab)

EXAMPLE1_PAULI = "\n".join([
    "XXXXZY",
    "ZZZZYX",
    "   XXXXZY",
    "   ZZZZYX",
    "      XXXXZY",
    "      ZZZZYX",
])


def test_example1_commutator_is_zero():
    s = example1_stabilizer()
    comm = symplectic_commutator(s)
    assert comm.shape == (2, 2)
    assert comm.is_zero
    assert is_self_orthogonal(s)


def test_z_only_and_x_only_always_commute(rng):
    for _ in range(10):
        g = random_matrix(rng, F3, 2, 4, 3)
        z_only = StabilizerMatrix(x=PolyMatrix.zeros(F3, 2, 4), z=g)
        x_only = StabilizerMatrix(x=g, z=PolyMatrix.zeros(F3, 2, 4))
        assert is_self_orthogonal(z_only)
        assert is_self_orthogonal(x_only)


def test_x_and_z_on_same_wire_anticommute():
    s = stab(F2, [["1"], ["0"]], [["0"], ["1"]])
    assert not is_self_orthogonal(s)


def test_commutator_is_anti_self_adjoint(rng):
    for _ in range(15):
        x = random_matrix(rng, F3, 2, 3, 2)
        z = random_matrix(rng, F3, 2, 3, 2)
        c = symplectic_commutator(StabilizerMatrix(x=x, z=z))
        assert c == -(c.adjoint_transpose())


def test_example1_params():
    p = code_params(example1_stabilizer())
    assert (p.n, p.k, p.m) == (3, 1, 1)
    assert p.nu_i == (1, 1) and p.nu == 2
    assert str(p.rate) == "1/3"


def test_five_qubit_params():
    p = code_params(five_qubit_stabilizer())
    assert (p.n, p.k, p.nu, p.m) == (5, 1, 0, 0)


def test_rank_deficient_rejected():
    s = stab(F2, [["1", "1"], ["1", "1"]], [["0", "0"], ["0", "0"]])
    with pytest.raises(ValueError, match="rank deficient"):
        code_params(s)


def test_expand_band_and_render():
    s = example1_stabilizer()
    sl = expand_semi_infinite(s, 3)
    assert sl.frames == 3
    assert len(sl.g_blocks) == 2
    assert len(sl.band) == 6
    assert len(sl.band[0]) == 12
    assert render_pauli(sl) == EXAMPLE1_PAULI


def test_expand_too_few_frames():
    with pytest.raises(ValueError, match="frames"):
        expand_semi_infinite(example1_stabilizer(), 1)


def test_expand_degree_zero_block_diagonal():
    s = five_qubit_stabilizer()
    sl = expand_semi_infinite(s, 2)
    assert len(sl.g_blocks) == 1
    # second block-row is the first shifted by n columns
    for i in range(s.rows):
        assert sl.band[s.rows + i][s.n:2 * s.n] == sl.band[i][:s.n]
        assert all(sym == (0, 0) for sym in sl.band[s.rows + i][:s.n])


def test_expand_pure_delay():
    s = stab(F2, [["01"]], [["0"]])
    sl = expand_semi_infinite(s, 2)
    assert sl.g_blocks[0][0][0] == (0, 0)
    assert sl.g_blocks[1][0][0] == (1, 0)
    assert sl.band[0][0] == (0, 0) and sl.band[0][1] == (1, 0)


def test_render_single_y_and_blank():
    s = stab(F2, [["1"], ["0"]], [["1"], ["0"]])
    sl = expand_semi_infinite(s, 1)
    lines = render_pauli(sl).split("\n")
    assert lines[0] == "Y" and lines[1] == ""


def test_render_nonbinary_pairs():
    s = stab(F3, [["2"]], [["1"]])
    sl = expand_semi_infinite(s, 1)
    assert render_pauli(sl) == "(2,1)"


def test_expand_reconstruct_roundtrip(rng):
    for _ in range(10):
        x = random_matrix(rng, F2, 2, 3, 2)
        z = random_matrix(rng, F2, 2, 3, 2)
        s = StabilizerMatrix(x=x, z=z)
        frames = s.memory() + 1 + rng.randint(0, 2)
        sl = expand_semi_infinite(s, frames)
        assert reconstruct(sl) == s
        sl2 = expand_semi_infinite(reconstruct(sl), frames)
        assert sl2 == sl


def _band_symplectic_products_zero(s, frames):
    sl = expand_semi_infinite(s, frames)
    field = s.field
    for i, ri in enumerate(sl.band):
        for rj in sl.band[i:]:
            acc = 0
            for (x1, z1), (x2, z2) in zip(ri, rj):
                acc = field.add(acc, field.sub(field.mul(x1, z2), field.mul(z1, x2)))
            if acc:
                return False
    return True


def test_band_products_match_polynomial_check(rng):
    s = example1_stabilizer()
    assert _band_symplectic_products_zero(s, 8)
    bad = stab(F2, [["1", "0"], ["0", "0"]], [["0", "0"], ["1", "0"]])
    assert not is_self_orthogonal(bad)
    assert not _band_symplectic_products_zero(bad, 8)
    for _ in range(8):
        x = random_matrix(rng, F2, 1, 3, 2)
        z = random_matrix(rng, F2, 1, 3, 2)
        s = StabilizerMatrix(x=x, z=z)
        assert is_self_orthogonal(s) == _band_symplectic_products_zero(s, 8)


def test_trivial_stabilizer_shape():
    t = trivial_stabilizer(F2, 5, 2)
    assert t.x.is_zero
    assert t.z.entry(0, 0) == laurent(F2, [1])
    assert t.z.entry(1, 1) == laurent(F2, [1])
    assert t.z.entry(0, 2).is_zero
    p = code_params(t)
    assert (p.n, p.k) == (5, 3)
