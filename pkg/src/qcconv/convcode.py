"""Classical convolutional codes: duality, distances, catastrophicity.

A code is given by a full-row-rank polynomial generator matrix G(D).
Orthogonality throughout is the sequence inner product: u is orthogonal
to v when u(D) v(1/D)^t = 0 as a Laurent identity, i.e. every time shift
of v is orthogonal to u coefficientwise.  This is the convention under
which self-orthogonal codes produce commuting stabilizers.

The free distance is computed on the controller-canonical state machine
of G (one shift register per generator row), by a lowest-weight-first
search over zero-state-to-zero-state detours.  The number of minimum
weight sequences counts distinct detours that start with a nonzero
information block, which identifies sequences up to time shift.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .fields import Field
from .laurent import one
from .polymatrix import (PolyMatrix, const_rank, kernel_basis, rank,
                         row_reduce, smith_normal_form)


class WeightCapExceeded(RuntimeError):
    """Raised when no detour closes within the requested weight budget."""


@dataclass(frozen=True)
class ConvCode:
    generator: PolyMatrix

    def __post_init__(self) -> None:
        g = self.generator
        if not g.is_polynomial:
            raise ValueError("generator entries must be polynomial")
        if g.rows and rank(g) != g.rows:
            raise ValueError("generator matrix must have full row rank")

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def n(self) -> int:
        return self.generator.cols

    def row_degrees(self) -> tuple[int, ...]:
        out = []
        for i in range(self.k):
            degs = [e.degree for e in self.generator.row(i) if not e.is_zero]
            out.append(max(degs, default=0))
        return tuple(out)

    @property
    def constraint_length(self) -> int:
        return sum(self.row_degrees())

    def is_delay_free(self) -> bool:
        """G(0) has full rank k, so the first output block determines the input."""
        g0 = self.generator.constant_term_grid()
        return const_rank(self.field, g0) == self.k if self.k else True

    def is_catastrophic(self) -> bool:
        """True iff some invariant factor of G is a non-unit."""
        snf = smith_normal_form(self.generator)
        return any(f != one(self.field) for f in snf.invariant_factors)

    def is_self_orthogonal(self) -> bool:
        """G(D) G(1/D)^t = 0: every row is orthogonal to all shifted rows."""
        return (self.generator * self.generator.adjoint_transpose()).is_zero


def dual_code(c: ConvCode) -> ConvCode:
    """A minimal basic generator of {v : v(D) G(1/D)^t = 0}.

    Computed as the kernel of the entrywise-adjoint of G (rows cleared of
    negative exponents first), which by construction has unit invariant
    factors; row reduction then minimizes the constraint length.
    """
    if c.is_catastrophic():
        raise ValueError("dual generator requires a non-catastrophic code")
    adj = c.generator.adjoint()
    rows = []
    for row in adj.entries:
        lo = min((e.order for e in row if not e.is_zero), default=0)
        shift = -lo if lo < 0 else 0
        rows.append([e.shift(shift) for e in row])
    cleared = PolyMatrix.build(c.field, rows, cols=c.n)
    basis = kernel_basis(cleared)
    if basis.rows:
        basis = row_reduce(basis)
    dual = ConvCode(basis)
    assert (basis * c.generator.adjoint_transpose()).is_zero
    return dual


@dataclass(frozen=True)
class DistanceReport:
    d_free: int
    count: int
    search_bound: int
    min_detour_frames: int
    max_detour_frames: int


class _Trellis:
    """Controller-canonical state machine of a generator matrix."""

    def __init__(self, c: ConvCode):
        self.field = c.field
        self.k = c.k
        self.n = c.n
        self.degs = c.row_degrees()
        self.radix = self.field.q
        self.cells = sum(self.degs)
        # coefficient table: coef[i][j][s] = coeff of D^s in G[i][j]
        self.coef = [[[c.generator.entry(i, j).coeff(s) for s in range(self.degs[i] + 1)]
                      for j in range(self.n)] for i in range(self.k)]
        self.state_count = self.radix**self.cells
        self._transitions: dict[int, list[tuple[int, int, bool]]] = {}
        self.inputs = list(itertools.product(range(self.radix), repeat=self.k))

    def _decode(self, state: int) -> list[list[int]]:
        regs = []
        for i in range(self.k):
            reg = []
            for _ in range(self.degs[i]):
                reg.append(state % self.radix)
                state //= self.radix
            regs.append(reg)  # reg[s-1] holds the input from s frames ago
        return regs

    def _encode(self, regs: list[list[int]]) -> int:
        state = 0
        for reg in reversed(regs):
            for v in reversed(reg):
                state = state * self.radix + v
        return state

    def step(self, state: int, u: tuple[int, ...]) -> tuple[int, int]:
        """Next state and output Hamming weight for input block u."""
        f = self.field
        regs = self._decode(state)
        weight = 0
        for j in range(self.n):
            acc = 0
            for i in range(self.k):
                ci = self.coef[i][j]
                if ci[0] and u[i]:
                    acc = f.add(acc, f.mul(ci[0], u[i]))
                reg = regs[i]
                for s in range(1, len(ci)):
                    v = reg[s - 1]
                    if v and ci[s]:
                        acc = f.add(acc, f.mul(ci[s], v))
            if acc:
                weight += 1
        nxt = self._encode([([u[i]] + regs[i][:-1]) if self.degs[i] else []
                            for i in range(self.k)])
        return nxt, weight

    def transitions(self, state: int) -> list[tuple[int, int, bool]]:
        """(next_state, weight, input_nonzero) over all input blocks."""
        cached = self._transitions.get(state)
        if cached is None:
            cached = []
            for u in self.inputs:
                nxt, w = self.step(state, u)
                cached.append((nxt, w, any(u)))
            self._transitions[state] = cached
        return cached


def default_weight_cap(c: ConvCode) -> int:
    """2 (nu + 1) n: generous enough for every minimal detour in range."""
    return 2 * (c.constraint_length + 1) * c.n


def free_distance(c: ConvCode, weight_cap: int | None = None) -> DistanceReport:
    """Minimum detour weight and the number of minimum-weight detours.

    Requires a non-catastrophic, delay-free code, which guarantees
    termination (no zero-weight cycles) and d_free >= 1.  Raises
    WeightCapExceeded when no detour closes within the cap.
    """
    if c.is_catastrophic():
        raise ValueError("free distance requires a non-catastrophic code")
    if not c.is_delay_free():
        raise ValueError("free distance requires a delay-free code")
    cap = default_weight_cap(c) if weight_cap is None else weight_cap
    tr = _Trellis(c)

    # lowest-weight-first search for the cheapest zero-to-zero detour
    best = None
    dist: dict[int, int] = {}
    heap: list[tuple[int, int]] = []
    for nxt, w, nonzero in tr.transitions(0):
        if not nonzero:
            continue
        if nxt == 0:
            best = w if best is None else min(best, w)
        elif w <= cap and w < dist.get(nxt, cap + 1):
            dist[nxt] = w
            heapq.heappush(heap, (w, nxt))
    while heap:
        w, state = heapq.heappop(heap)
        if w > dist.get(state, cap + 1):
            continue
        if best is not None and w >= best:
            break
        for nxt, dw, _ in tr.transitions(state):
            w2 = w + dw
            if w2 > cap:
                continue
            if nxt == 0:
                best = w2 if best is None else min(best, w2)
            elif w2 < dist.get(nxt, cap + 1):
                dist[nxt] = w2
                heapq.heappush(heap, (w2, nxt))
    if best is None or best > cap:
        raise WeightCapExceeded(f"no detour of weight <= {cap} found")

    count, minlen, maxlen = _count_detours(tr, best)
    return DistanceReport(d_free=best, count=count, search_bound=cap,
                          min_detour_frames=minlen, max_detour_frames=maxlen)


def _compose_span(u_nonzero: bool, child_span: int) -> int:
    # span = 1 + index of the last nonzero input block along the path
    if child_span:
        return child_span + 1
    return 1 if u_nonzero else 0


def _count_detours(tr: _Trellis, d: int) -> tuple[int, int, int]:
    """Count weight-d detours; also track min/max nonzero-input spans.

    The span of a detour is 1 + the index of its last nonzero input
    block, i.e. the window a truncated enumeration needs to see it.
    Implemented as an explicit post-order walk: the dependency graph on
    (state, remaining budget) is acyclic because non-catastrophic codes
    have no zero-weight cycles.
    """
    memo: dict[tuple[int, int], tuple[int, int, int]] = {}

    # work bound: each (state, budget) node is re-expanded at most once per
    # incoming edge; exceeding it would mean a zero-weight cycle
    step_limit = 4 * (tr.state_count + 1) * (d + 2) * (len(tr.inputs) + 2) + 1000

    def resolve(state: int, budget: int) -> tuple[int, int, int]:
        steps = 0
        stack: list[tuple[int, int]] = [(state, budget)]
        while stack:
            steps += 1
            if steps > step_limit:
                raise AssertionError("detour counting did not converge "
                                     "(zero-weight cycle in the trellis)")
            st, bud = stack[-1]
            if (st, bud) in memo:
                stack.pop()
                continue
            pending = []
            for nxt, w, _ in tr.transitions(st):
                if w <= bud and nxt != 0 and (nxt, bud - w) not in memo:
                    pending.append((nxt, bud - w))
            if pending:
                stack.extend(pending)
                continue
            total, lo, hi = 0, None, None
            for nxt, w, nonzero in tr.transitions(st):
                if w > bud:
                    continue
                if nxt == 0:
                    if w == bud:
                        s = _compose_span(nonzero, 0)
                        total += 1
                        lo = s if lo is None else min(lo, s)
                        hi = s if hi is None else max(hi, s)
                    continue
                cnt, clo, chi = memo[(nxt, bud - w)]
                if cnt:
                    slo = _compose_span(nonzero, clo)
                    shi = _compose_span(nonzero, chi)
                    total += cnt
                    lo = slo if lo is None else min(lo, slo)
                    hi = shi if hi is None else max(hi, shi)
            memo[(st, bud)] = (total, lo or 0, hi or 0)
            stack.pop()
        return memo[(state, budget)]

    total, lo, hi = 0, None, None
    for nxt, w, nonzero in tr.transitions(0):
        if not nonzero or w > d:
            continue
        if nxt == 0:
            if w == d:
                total += 1
                lo = 1 if lo is None else min(lo, 1)
                hi = 1 if hi is None else max(hi, 1)
            continue
        cnt, clo, chi = resolve(nxt, d - w)
        if cnt:
            slo = _compose_span(True, clo)
            shi = _compose_span(True, chi)
            total += cnt
            lo = slo if lo is None else min(lo, slo)
            hi = shi if hi is None else max(hi, shi)
    return total, lo or 0, hi or 0


def bch_bound(zeros: set[int] | frozenset[int] | list[int], n: int) -> int:
    """One plus the longest cyclic run of consecutive exponents in the zero set."""
    if n <= 0:
        raise ValueError("code length must be positive")
    zset = {z % n for z in zeros}
    if not zset:
        return 1
    if len(zset) == n:
        return n + 1
    best = run = 0
    # walk two laps so wrap-around runs are seen whole
    for i in range(2 * n):
        if i % n in zset:
            run += 1
            best = max(best, min(run, n))
        else:
            run = 0
    return best + 1
