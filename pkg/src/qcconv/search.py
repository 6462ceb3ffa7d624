"""Search for self-orthogonal binary rate-1/4 convolutional codes.

Candidates are 4-tuples of binary polynomials with maximum degree
exactly nu and nonzero constant-term vector, enumerated in lexicographic
order of the concatenated coefficient strings (coefficients written in
increasing exponent order, as in the result tables).

Self-orthogonality of a candidate g is sum_i g_i(D) g_i(1/D) = 0, which
over F_2 reduces to parity checks on shifted自 overlaps:
popcount(g_i & (g_i >> s)) summed over i must be even for every shift s.
The hot loop uses that bit trick; emitted records are re-verified through
the generic polynomial route by the test suite.

Randomized mode draws candidate indices from a documented SplitMix64
stream, so a (seed, budget) pair reproduces byte-identical results on
every platform; rejected indices (outside the candidate domain) do not
count against the budget.  Worker parallelism partitions a precomputed
index list, so results are independent of the worker count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .convcode import ConvCode, dual_code, free_distance
from .fields import make_field
from .laurent import laurent
from .polymatrix import PolyMatrix

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """The SplitMix64 stream: state += 0x9E3779B97F4A7C15;
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z>>27) * 0x94D049BB133111EB; yield z ^ z>>31."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


@dataclass(frozen=True)
class SearchConfig:
    nu: int
    mode: str = "exhaustive"          # "exhaustive" | "random"
    seed: int = 0
    budget: int = 0                   # accepted candidate draws (random mode)
    keep: int = 32

    def __post_init__(self) -> None:
        if self.nu < 1:
            raise ValueError("nu must be >= 1")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.keep < 0 or self.budget < 0:
            raise ValueError("keep and budget must be nonnegative")


@dataclass(frozen=True)
class SearchRecord:
    nu: int
    generators: tuple[str, str, str, str]   # coefficient strings, width nu+1
    d_dual: int
    count: int

    def sort_key(self):
        return (-self.d_dual, self.count, self.generators)


def _poly_bits_to_string(bits: int, nu: int) -> str:
    return "".join("1" if (bits >> e) & 1 else "0" for e in range(nu + 1))


def _index_to_tuple(idx: int, nu: int) -> tuple[int, int, int, int]:
    """Candidate index -> 4 polynomial bitmasks (bit e = coeff of D^e).

    The index, written as a 4(nu+1)-bit string MSB first, is the
    concatenated coefficient string; lexicographic string order therefore
    equals numeric index order.
    """
    w = nu + 1
    polys = []
    for slot in range(4):
        chunk = (idx >> ((3 - slot) * w)) & ((1 << w) - 1)
        bits = 0
        for pos in range(w):
            if (chunk >> (w - 1 - pos)) & 1:
                bits |= 1 << pos
        polys.append(bits)
    return tuple(polys)  # type: ignore[return-value]


def _in_domain(polys: Sequence[int], nu: int) -> bool:
    top = any((g >> nu) & 1 for g in polys)
    delay_free = any(g & 1 for g in polys)
    return top and delay_free


def _self_orthogonal_bits(polys: Sequence[int], nu: int) -> bool:
    for s in range(nu + 1):
        parity = 0
        for g in polys:
            parity ^= bin(g & (g >> s)).count("1") & 1
        if parity:
            return False
    return True


def enumerate_candidates(nu: int) -> Iterator[tuple[int, int, int, int]]:
    """All admissible 4-tuples, in lexicographic coefficient-string order."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    for idx in range(1 << (4 * (nu + 1))):
        polys = _index_to_tuple(idx, nu)
        if _in_domain(polys, nu):
            yield polys


def candidate_strings(polys: Sequence[int], nu: int) -> tuple[str, str, str, str]:
    return tuple(_poly_bits_to_string(g, nu) for g in polys)  # type: ignore[return-value]


def evaluate_candidate(polys: Sequence[int], nu: int) -> SearchRecord | None:
    """Dual free distance and minimum-weight count for one candidate.

    Catastrophic candidates yield None: they cannot serve as parity
    checks in the CSS construction, and their dual metrics merely
    duplicate those of the reduced lower-degree code.
    """
    field = make_field(2)
    gen = PolyMatrix.build(field, [[
        laurent(field, [(g >> e) & 1 for e in range(nu + 1)]) for g in polys
    ]])
    code = ConvCode(gen)
    if code.is_catastrophic():
        return None
    dual = dual_code(code)
    rep = free_distance(dual)
    return SearchRecord(nu=nu, generators=candidate_strings(polys, nu),
                        d_dual=rep.d_free, count=rep.count)


def _scan_indices(nu: int, indices: Sequence[int], keep: int) -> list[SearchRecord]:
    w = nu + 1
    mask = (1 << w) - 1
    # bit-reversal of each w-bit chunk (string order -> exponent order) and
    # per-polynomial parity signatures of the shifted self-overlaps
    rev = [0] * (1 << w)
    sig = [0] * (1 << w)
    for g in range(1 << w):
        r = 0
        for pos in range(w):
            if (g >> (w - 1 - pos)) & 1:
                r |= 1 << pos
        rev[g] = r
        s_bits = 0
        for s in range(w):
            if ((r & (r >> s)).bit_count()) & 1:
                s_bits |= 1 << s
        sig[r] = s_bits
    top_bit = 1 << nu
    records: list[SearchRecord] = []
    seen: set[tuple[int, ...]] = set()
    for idx in indices:
        g1 = rev[(idx >> (3 * w)) & mask]
        g2 = rev[(idx >> (2 * w)) & mask]
        g3 = rev[(idx >> w) & mask]
        g4 = rev[idx & mask]
        if not ((g1 | g2 | g3 | g4) & top_bit):
            continue
        if not ((g1 | g2 | g3 | g4) & 1):
            continue
        if sig[g1] ^ sig[g2] ^ sig[g3] ^ sig[g4]:
            continue
        polys = (g1, g2, g3, g4)
        if polys in seen:
            continue
        seen.add(polys)
        rec = evaluate_candidate(polys, nu)
        if rec is not None:
            records.append(rec)
    records.sort(key=SearchRecord.sort_key)
    return records[:keep] if keep else []


def _worker(args: tuple[int, int, int, int]) -> list[SearchRecord]:
    nu, start, stop, keep = args
    return _scan_indices(nu, range(start, stop), keep)


def resolve_workers(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("QCC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def search(cfg: SearchConfig, workers: int | None = None) -> list[SearchRecord]:
    """Best self-orthogonal candidates ordered by (d desc, count asc, lex).

    Exhaustive mode scans the whole domain; random mode examines
    ``budget`` domain members drawn from the seeded stream (duplicates
    are evaluated once).  Identical configs give identical results for
    any worker count.
    """
    domain_bits = 4 * (cfg.nu + 1)
    if cfg.mode == "exhaustive":
        indices: Sequence[int] = range(1 << domain_bits)
    else:
        drawn: list[int] = []
        accepted = 0
        stream = splitmix64(cfg.seed)
        while accepted < cfg.budget:
            idx = next(stream) & ((1 << domain_bits) - 1)
            if _in_domain(_index_to_tuple(idx, cfg.nu), cfg.nu):
                drawn.append(idx)
                accepted += 1
        indices = drawn

    nworkers = resolve_workers(workers)
    if nworkers <= 1 or len(indices) < 4096:
        merged = _scan_indices(cfg.nu, indices, cfg.keep)
    else:
        import concurrent.futures

        chunk = (len(indices) + nworkers - 1) // nworkers
        if cfg.mode == "exhaustive":
            jobs = [(cfg.nu, i, min(i + chunk, len(indices)), cfg.keep)
                    for i in range(0, len(indices), chunk)]
            with concurrent.futures.ProcessPoolExecutor(max_workers=nworkers) as ex:
                parts = list(ex.map(_worker, jobs))
        else:
            parts = []
            with concurrent.futures.ProcessPoolExecutor(max_workers=nworkers) as ex:
                futs = [ex.submit(_scan_indices, cfg.nu,
                                  list(indices)[i:i + chunk], cfg.keep)
                        for i in range(0, len(indices), chunk)]
                parts = [f.result() for f in futs]
        seen: set[tuple[str, ...]] = set()
        merged = []
        for rec in sorted((r for part in parts for r in part),
                          key=SearchRecord.sort_key):
            if rec.generators not in seen:
                seen.add(rec.generators)
                merged.append(rec)
        merged = merged[:cfg.keep] if cfg.keep else []
    return merged
