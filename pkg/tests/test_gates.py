import pytest

from qcconv import (Add, Circuit, CPhase, Dft, Mult, Phase, StabilizerMatrix,
                    apply_circuit, apply_gate, circuit_stats, cz_gates,
                    decompose_column_addition, inverse_gates, is_self_orthogonal,
                    laurent, monomial, swap_gates, symplectic_commutator,
                    trivial_stabilizer)
from qcconv.gates import gate_wires, inverse_circuit
from conftest import F2, F3, F5, P, pm, random_matrix, random_poly, stab

FIELDS = [F2, F3, F5]


def _apply_gates(s, gates):
    for g in gates:
        s = apply_gate(s, g)
    return s


def test_dft_action_over_f2():
    s = stab(F2, [["1"]], [["0"]])
    out = apply_gate(s, Dft(0))
    assert out == stab(F2, [["0"]], [["1"]])


def test_dft_action_sign():
    s = stab(F3, [["1"]], [["0"]])
    out = apply_gate(s, Dft(0))
    assert out.x.entry(0, 0).is_zero
    assert out.z.entry(0, 0) == P(F3, "2")   # -1


def test_add_delay_action():
    s = stab(F2, [["1", "0"]], [["0", "0"]])
    out = apply_gate(s, Add(0, 1, 2))
    assert out.x.entry(0, 0) == P(F2, "1")
    assert out.x.entry(0, 1) == monomial(F2, 2)
    assert out.z.is_zero


def test_add_z_side_is_laurent():
    s = stab(F2, [["0", "0"]], [["0", "1"]])
    out = apply_gate(s, Add(0, 1, 1))
    assert out.z.entry(0, 0) == monomial(F2, -1)
    assert not out.is_polynomial


def test_phase_pair_is_identity():
    s = stab(F5, [["3", "1"]], [["2", "0"]])
    g = F5.element(4)
    out = apply_gate(apply_gate(s, Phase(0, g)), Phase(0, -g))
    assert out == s


def test_cphase_action():
    s = stab(F2, [["1"]], [["0"]])
    out = apply_gate(s, CPhase(0, 1))
    assert out.z.entry(0, 0) == monomial(F2, 1) + monomial(F2, -1)


def test_mult_requires_invertible():
    with pytest.raises(ValueError):
        Mult(0, F5.element(0))


def test_add_same_wire_rejected():
    with pytest.raises(ValueError):
        Add(1, 1, 2)
    with pytest.raises(ValueError):
        Add(0, 1, -1)
    with pytest.raises(ValueError):
        CPhase(0, 0)


def test_wire_out_of_range():
    s = stab(F2, [["1"]], [["0"]])
    with pytest.raises(ValueError, match="out of range"):
        apply_gate(s, Dft(1))
    with pytest.raises(ValueError, match="out of range"):
        Circuit(1, (Dft(3),))


def test_empty_circuit_identity():
    s = stab(F2, [["1", "01"]], [["0", "1"]])
    assert apply_circuit(s, Circuit(2)) == s


def test_dft_layer_swaps_halves():
    g = pm(F2, [["1", "11"], ["01", "0"]])
    s = StabilizerMatrix(x=g, z=pm(F2, [["0", "0"], ["0", "0"]]))
    out = apply_circuit(s, Circuit(2, (Dft(0), Dft(1))))
    assert out.x.is_zero
    assert out.z == g     # -G = G over F_2
    s3 = StabilizerMatrix(x=pm(F3, [["1", "2"]]), z=pm(F3, [["0", "0"]]))
    out3 = apply_circuit(s3, Circuit(2, (Dft(0), Dft(1))))
    assert out3.z == pm(F3, [["2", "1"]])    # negated


def test_stats_examples():
    assert circuit_stats(Circuit(3)) == circuit_stats(Circuit(3, ()))
    assert circuit_stats(Circuit(3)).gate_count == 0
    assert circuit_stats(Circuit(3)).depth == 0
    c = Circuit(4, (Dft(0), Dft(1)))
    assert circuit_stats(c).depth == 1
    c2 = Circuit(4, (Add(0, 1, 0), Phase(1, F2.element(1)), Dft(3)))
    st = circuit_stats(c2)
    assert st.gate_count == 3 and st.depth == 2
    assert gate_wires(CPhase(2, 3)) == (2,)


def test_decompose_column_addition_examples():
    assert decompose_column_addition(monomial(F2, 2), 0, 1) == (Add(0, 1, 2),)
    assert decompose_column_addition(P(F2, "11"), 0, 1) == (Add(0, 1, 0), Add(0, 1, 1))
    gates = decompose_column_addition(laurent(F5, [0, 2]), 0, 1)
    assert gates == (Mult(0, F5.element(3)), Add(0, 1, 1), Mult(0, F5.element(2)))


def test_decompose_rejects_bad_input():
    with pytest.raises(ValueError):
        decompose_column_addition(laurent(F2, [1], lo=-1), 0, 1)
    with pytest.raises(ValueError):
        decompose_column_addition(laurent(F2, [1]), 2, 2)


@pytest.mark.parametrize("field", FIELDS)
def test_decompose_replay_matches_direct_column_op(field, rng):
    for _ in range(25):
        f = random_poly(rng, field, rng.randint(0, 6))
        x = random_matrix(rng, field, 2, 3, 2)
        z = random_matrix(rng, field, 2, 3, 2)
        s = StabilizerMatrix(x=x, z=z)
        out = _apply_gates(s, decompose_column_addition(f, 0, 2))
        for r in range(2):
            assert out.x.entry(r, 2) == x.entry(r, 2) + f * x.entry(r, 0)
            assert out.x.entry(r, 0) == x.entry(r, 0)
            assert out.z.entry(r, 0) == z.entry(r, 0) - f.adjoint() * z.entry(r, 2)


@pytest.mark.parametrize("field", FIELDS)
def test_swap_gates_swap_both_halves(field, rng):
    for _ in range(10):
        x = random_matrix(rng, field, 2, 3, 2)
        z = random_matrix(rng, field, 2, 3, 2)
        s = StabilizerMatrix(x=x, z=z)
        out = _apply_gates(s, swap_gates(0, 2, field))
        for r in range(2):
            assert out.x.entry(r, 0) == x.entry(r, 2)
            assert out.x.entry(r, 2) == x.entry(r, 0)
            assert out.z.entry(r, 0) == z.entry(r, 2)
            assert out.z.entry(r, 2) == z.entry(r, 0)
            assert out.x.entry(r, 1) == x.entry(r, 1)


@pytest.mark.parametrize("field", FIELDS)
def test_cz_gates_action(field, rng):
    for _ in range(10):
        c = rng.randrange(1, field.q)
        x = random_matrix(rng, field, 2, 3, 1)
        z = random_matrix(rng, field, 2, 3, 1)
        s = StabilizerMatrix(x=x, z=z)
        out = _apply_gates(s, cz_gates(0, 2, c, field))
        assert out.x == x
        for r in range(2):
            assert out.z.entry(r, 0) == z.entry(r, 0) + x.entry(r, 2).scale(c)
            assert out.z.entry(r, 2) == z.entry(r, 2) + x.entry(r, 0).scale(c)
            assert out.z.entry(r, 1) == z.entry(r, 1)


def _random_self_orthogonal(rng, field, n, rows, gate_pool=6):
    s = trivial_stabilizer(field, n, rows)
    for _ in range(gate_pool):
        s = apply_gate(s, _random_gate(rng, field, n))
    return s


def _random_gate(rng, field, n):
    kind = rng.randrange(5)
    if kind == 0:
        return Dft(rng.randrange(n))
    if kind == 1:
        return Mult(rng.randrange(n), field.element(rng.randrange(1, field.q)))
    if kind == 2:
        return Phase(rng.randrange(n), field.element(rng.randrange(field.q)))
    if kind == 3:
        i = rng.randrange(n)
        j = (i + rng.randrange(1, n)) % n
        return Add(i, j, rng.randrange(0, 3))
    return CPhase(rng.randrange(n), rng.choice([-2, -1, 1, 2]))


@pytest.mark.parametrize("field", FIELDS + [pytest.param(F2, id="F4-run")])
def test_gates_preserve_commutation(field, rng):
    for _ in range(30):
        n = rng.randint(2, 4)
        s = _random_self_orthogonal(rng, field, n, rng.randint(1, n))
        assert is_self_orthogonal(s)
        out = apply_gate(s, _random_gate(rng, field, n))
        assert is_self_orthogonal(out)


@pytest.mark.parametrize("field", FIELDS)
def test_every_gate_variant_has_inverse(field, rng):
    n = 3
    variants = [Dft(1), Mult(0, field.element(field.q - 1)),
                Phase(2, field.element(1)), Add(0, 2, 2), CPhase(1, 2)]
    for g in variants:
        for _ in range(5):
            x = random_matrix(rng, field, 2, n, 2)
            z = random_matrix(rng, field, 2, n, 2)
            s = StabilizerMatrix(x=x, z=z)
            out = _apply_gates(apply_gate(s, g), inverse_gates(g, field))
            assert out == s


def test_apply_circuit_distributes_over_concat(rng):
    for field in FIELDS:
        n = 3
        c1 = Circuit(n, tuple(_random_gate(rng, field, n) for _ in range(4)))
        c2 = Circuit(n, tuple(_random_gate(rng, field, n) for _ in range(4)))
        x = random_matrix(rng, field, 2, n, 1)
        z = random_matrix(rng, field, 2, n, 1)
        s = StabilizerMatrix(x=x, z=z)
        assert apply_circuit(s, c1 + c2) == apply_circuit(apply_circuit(s, c1), c2)


def test_inverse_circuit_round_trip(rng):
    for field in FIELDS:
        n = 4
        c = Circuit(n, tuple(_random_gate(rng, field, n) for _ in range(8)))
        x = random_matrix(rng, field, 2, n, 1)
        z = random_matrix(rng, field, 2, n, 1)
        s = StabilizerMatrix(x=x, z=z)
        back = apply_circuit(apply_circuit(s, c), inverse_circuit(c, field))
        assert back == s
