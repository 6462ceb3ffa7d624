"""Frame-translation-invariant Clifford gates as column operations.

Every gate acts simultaneously on all frames of the qudit stream; on the
stabilizer description this is a column operation on (X(D)|Z(D)):

    Dft(i)          (X_i, Z_i) <- (Z_i, -X_i)
    Mult(i, g)      X_i <- g^-1 X_i,  Z_i <- g Z_i          (g nonzero)
    Phase(i, g)     Z_i <- Z_i + g X_i
    Add(i, j, l)    X_j <- X_j + D^l X_i,  Z_i <- Z_i - D^-l Z_j   (i != j, l >= 0)
    CPhase(i, l)    Z_i <- Z_i + (D^l + D^-l) X_i           (l != 0)

    The CPhase multiplier is D^l + D^-l, the self-adjoint combination:
    the controlled-phase couples the wire to its own l-frame translate
    symmetrically, so both exponents gain the same sign.  (Writing a
    minus there, as sometimes seen, only coincides with this in
    characteristic 2 and would break commutation preservation for
    odd-characteristic fields.)

Add and CPhase may introduce negative exponents into Z; constructions
that require the canonical polynomial form re-check it at their
boundaries.  Wires are frame-relative indices in [0, n); a delayed Add
between the same frame-relative wire (i == j) has no defined action in
this gate set and is rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fields import Field, FieldElement
from .laurent import LaurentPoly, monomial, one
from .polymatrix import PolyMatrix
from .stabilizer import StabilizerMatrix


@dataclass(frozen=True)
class Dft:
    wire: int

    def __post_init__(self) -> None:
        if self.wire < 0:
            raise ValueError("wire must be nonnegative")


@dataclass(frozen=True)
class Mult:
    wire: int
    gamma: FieldElement

    def __post_init__(self) -> None:
        if self.wire < 0:
            raise ValueError("wire must be nonnegative")
        if not self.gamma:
            raise ValueError("multiplication gate requires an invertible gamma")


@dataclass(frozen=True)
class Phase:
    wire: int
    gamma: FieldElement

    def __post_init__(self) -> None:
        if self.wire < 0:
            raise ValueError("wire must be nonnegative")


@dataclass(frozen=True)
class Add:
    src: int
    dst: int
    delay: int = 0

    def __post_init__(self) -> None:
        if self.src < 0 or self.dst < 0:
            raise ValueError("wires must be nonnegative")
        if self.src == self.dst:
            raise ValueError("Add requires distinct frame-relative wires")
        if self.delay < 0:
            raise ValueError("Add delay must be >= 0")


@dataclass(frozen=True)
class CPhase:
    wire: int
    delay: int

    def __post_init__(self) -> None:
        if self.wire < 0:
            raise ValueError("wire must be nonnegative")
        if self.delay == 0:
            raise ValueError("CPhase requires a nonzero delay")


Gate = Dft | Mult | Phase | Add | CPhase


def gate_wires(g: Gate) -> tuple[int, ...]:
    """Frame-relative wires a gate touches (delayed aliases collapse mod n)."""
    if isinstance(g, Add):
        return (g.src, g.dst)
    return (g.wire,)


def apply_gate(s: StabilizerMatrix, g: Gate) -> StabilizerMatrix:
    """Column action of one gate on a stabilizer; pure, preserves Eq.-free commutation."""
    n = s.n
    for w in gate_wires(g):
        if w >= n:
            raise ValueError(f"wire {w} out of range for frame size {n}")
    field = s.field
    x = [list(row) for row in s.x.entries]
    z = [list(row) for row in s.z.entries]
    if isinstance(g, Dft):
        i = g.wire
        for r in range(s.rows):
            x[r][i], z[r][i] = z[r][i], -x[r][i]
    elif isinstance(g, Mult):
        i = g.wire
        gv = g.gamma.value
        gi = field.inv(gv)
        for r in range(s.rows):
            x[r][i] = x[r][i].scale(gi)
            z[r][i] = z[r][i].scale(gv)
    elif isinstance(g, Phase):
        i = g.wire
        gv = g.gamma.value
        if gv:
            for r in range(s.rows):
                z[r][i] = z[r][i] + x[r][i].scale(gv)
    elif isinstance(g, Add):
        i, j, ell = g.src, g.dst, g.delay
        dl = monomial(field, ell)
        dnl = monomial(field, -ell)
        for r in range(s.rows):
            x[r][j] = x[r][j] + dl * x[r][i]
            z[r][i] = z[r][i] - dnl * z[r][j]
    elif isinstance(g, CPhase):
        i, ell = g.wire, g.delay
        f = monomial(field, ell) + monomial(field, -ell)
        for r in range(s.rows):
            z[r][i] = z[r][i] + f * x[r][i]
    else:  # pragma: no cover
        raise TypeError(f"unknown gate {g!r}")
    return StabilizerMatrix(x=PolyMatrix.build(field, x, cols=n),
                            z=PolyMatrix.build(field, z, cols=n))


@dataclass(frozen=True)
class Circuit:
    """An ordered, finite gate list acting identically on every frame."""

    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        for g in self.gates:
            for w in gate_wires(g):
                if w >= self.n:
                    raise ValueError(f"wire {w} out of range for frame size {self.n}")

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError("cannot concatenate circuits with different frame sizes")
        return Circuit(self.n, self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)


@dataclass(frozen=True)
class CircuitStats:
    gate_count: int
    depth: int


def circuit_stats(c: Circuit) -> CircuitStats:
    """Gate count and greedy wire-disjoint depth over one band period."""
    last_layer: dict[int, int] = {}
    depth = 0
    for g in c.gates:
        layer = 1 + max((last_layer.get(w, 0) for w in gate_wires(g)), default=0)
        for w in gate_wires(g):
            last_layer[w] = layer
        depth = max(depth, layer)
    return CircuitStats(gate_count=len(c.gates), depth=depth)


def apply_circuit(s: StabilizerMatrix, c: Circuit) -> StabilizerMatrix:
    if c.n != s.n:
        raise ValueError("circuit frame size does not match the stabilizer")
    for g in c.gates:
        s = apply_gate(s, g)
    return s


def decompose_column_addition(f: LaurentPoly, src: int, dst: int) -> tuple[Gate, ...]:
    """Gates whose net X action is X_dst += f(D) X_src, for polynomial f.

    Each monomial c*D^t becomes Mult(src, c^-1), Add(src, dst, t),
    Mult(src, c), collapsed to the bare Add when c = 1.  The Table-forced
    Z side effect of the whole list is Z_src -= f(1/D) Z_dst.
    """
    if src == dst:
        raise ValueError("source and destination wires must differ")
    if not f.is_polynomial:
        raise ValueError("column addition requires a polynomial multiplier")
    field = f.field
    gates: list[Gate] = []
    for t, c in f.terms():
        if c == 1:
            gates.append(Add(src, dst, t))
        else:
            gates.append(Mult(src, field.element(field.inv(c))))
            gates.append(Add(src, dst, t))
            gates.append(Mult(src, field.element(c)))
    return tuple(gates)


def swap_gates(i: int, j: int, field: Field) -> tuple[Gate, ...]:
    """Swap columns i and j of both halves using three Adds.

        Add(j,i) . [X_j -= X_i] . Add(j,i) . Mult(j,-1)

    where the middle subtraction is the Mult(-1)-conjugated Add; over
    F_2 all Mult(-1) corrections vanish.  Verified action:
    (X_i, X_j, Z_i, Z_j) -> (X_j, X_i, Z_j, Z_i).
    """
    if i == j:
        raise ValueError("swap requires distinct wires")
    minus_one = field.element(field.neg(1))
    gates: list[Gate] = [Add(j, i, 0)]
    if field.p == 2:
        gates.append(Add(i, j, 0))
    else:
        gates.extend([Mult(i, minus_one), Add(i, j, 0), Mult(i, minus_one)])
    gates.append(Add(j, i, 0))
    if field.p != 2:
        gates.append(Mult(j, minus_one))
    return tuple(gates)


def cz_gates(i: int, j: int, c: int, field: Field) -> tuple[Gate, ...]:
    """Gates realizing Z_i += c X_j and Z_j += c X_i (a two-wire phase).

    Built as the Dft(j)-conjugated Add(i, j, 0), wrapped in Mult(i, .)
    to scale the coefficient; X columns are untouched.
    """
    if i == j:
        raise ValueError("use Phase for a single-wire diagonal")
    if c == 0:
        return ()
    core: list[Gate] = [Dft(j), Add(i, j, 0)]
    core.extend(inverse_gates(Dft(j), field))
    if c == 1:
        return tuple(core)
    ci = field.element(field.inv(c))
    ce = field.element(c)
    return (Mult(i, ci),) + tuple(core) + (Mult(i, ce),)


def inverse_gates(g: Gate, field: Field) -> tuple[Gate, ...]:
    """A gate list composing to the inverse column action of g."""
    if isinstance(g, Dft):
        if field.p == 2:
            return (Dft(g.wire),)
        return (Dft(g.wire), Mult(g.wire, field.element(field.neg(1))))
    if isinstance(g, Mult):
        return (Mult(g.wire, g.gamma.inverse()),)
    if isinstance(g, Phase):
        return (Phase(g.wire, -g.gamma),)
    if isinstance(g, Add):
        if field.p == 2:
            return (g,)
        minus_one = field.element(field.neg(1))
        return (Mult(g.src, minus_one), Add(g.src, g.dst, g.delay), Mult(g.src, minus_one))
    if isinstance(g, CPhase):
        # p-1 repetitions negate the self-adjoint multiplier in char p
        return (g,) * (field.p - 1)
    raise TypeError(f"unknown gate {g!r}")  # pragma: no cover


def inverse_circuit(c: Circuit, field: Field) -> Circuit:
    """Reverse the gate order, inverting each gate in place."""
    gates = tuple(itertools.chain.from_iterable(
        inverse_gates(g, field) for g in reversed(c.gates)))
    return Circuit(c.n, gates)
