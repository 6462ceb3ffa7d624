"""Command-line frontend.

Every verb is a pure function of its inputs and flags: identical
invocations produce byte-identical output.  Exit codes: 0 success,
1 domain error (bad input data, failed check), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .constructions import (CssInput, css_construct, cyclic_g2,
                            overlapped_generator, product_construct,
                            product_distance_bound)
from .convcode import free_distance, dual_code
from .fields import field_from_order
from .formats import (FormatError, parse_circuit, parse_convcode,
                      parse_element, parse_matrix, parse_stabilizer,
                      render_circuit, render_convcode, render_matrix,
                      render_poly, render_stabilizer)
from .polymatrix import PolyMatrix, smith_normal_form
from .search import SearchConfig, search
from .stabilizer import (code_params, expand_semi_infinite, is_self_orthogonal,
                         render_pauli, symplectic_commutator)
from .synthesis import (synthesize_block_inverse_encoder, synthesize_css_encoder,
                        synthesize_product_encoder, verify_inverse_encoder)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    s = parse_stabilizer(_read(args.stabilizer))
    if is_self_orthogonal(s):
        print("self-orthogonal: yes")
        return 0
    print("self-orthogonal: no")
    comm = symplectic_commutator(s)
    print("commutator:")
    for row in comm.entries:
        print("  " + ",".join(render_poly(e) for e in row))
    return 1


def _cmd_params(args) -> int:
    s = parse_stabilizer(_read(args.stabilizer))
    p = code_params(s)
    print(f"n={p.n} k={p.k} m={p.m}")
    nu_i = ",".join(str(v) for v in p.nu_i)
    print(f"nu={p.nu} nu_i={nu_i} rate={p.rate.numerator}/{p.rate.denominator}")
    return 0


def _cmd_expand(args) -> int:
    s = parse_stabilizer(_read(args.stabilizer))
    sl = expand_semi_infinite(s, args.frames)
    if args.pauli:
        print(render_pauli(sl))
    else:
        for row in sl.band:
            print(" ".join(f"({x},{z})" for x, z in row))
    return 0


def _cmd_css(args) -> int:
    h2 = parse_matrix(_read(args.h2))
    if args.h1:
        h1 = parse_matrix(_read(args.h1))
    else:
        h1 = PolyMatrix.zeros(h2.field, 0, h2.cols)
    s = css_construct(CssInput(h1=h1, h2=h2))
    _write_out(render_stabilizer(s), args.out)
    return 0


def _cmd_product(args) -> int:
    g1 = parse_convcode(_read(args.classical))
    s2 = parse_stabilizer(_read(args.quantum))
    s = product_construct(g1, s2)
    _write_out(render_stabilizer(s), args.out)
    if args.d2 is not None:
        bound = product_distance_bound(g1, args.d2)
        print(f"distance bound: {bound}")
    return 0


def _cmd_cyclic(args) -> int:
    field = field_from_order(args.q)
    alpha = parse_element(field, args.alpha, "alpha")
    g2 = cyclic_g2(field, args.n2, args.d, alpha.value)
    if args.g1:
        g1 = parse_matrix(_read(args.g1))
        res = overlapped_generator(g1, g2, args.mu)
        _write_out(render_stabilizer(res.stabilizer), args.out)
        print(f"catastrophic: {'yes' if res.catastrophic else 'no'}")
    else:
        _write_out(render_matrix(g2), args.out)
    return 0


def _synthesize(args):
    if args.kind == "css":
        h2 = parse_matrix(_read(args.h2))
        if args.h1:
            h1 = parse_matrix(_read(args.h1))
        else:
            h1 = PolyMatrix.zeros(h2.field, 0, h2.cols)
        s = css_construct(CssInput(h1=h1, h2=h2))
        return s, synthesize_css_encoder(s, h1, h2)
    if args.kind == "block":
        s = parse_stabilizer(_read(args.stabilizer))
        return s, synthesize_block_inverse_encoder(s)
    g1 = parse_convcode(_read(args.classical))
    s2 = parse_stabilizer(_read(args.quantum))
    s = product_construct(g1, s2)
    return s, synthesize_product_encoder(g1, s2)


def _cmd_encode(args) -> int:
    s, res = _synthesize(args)
    if args.emit_intermediate:
        for label, stab in res.intermediates:
            print(f"-- {label}")
            sys.stdout.write(render_stabilizer(stab))
    if args.out_inverse:
        Path(args.out_inverse).write_text(
            render_circuit(res.inverse_circuit, s.field), encoding="utf-8")
    if args.out_encoder:
        Path(args.out_encoder).write_text(
            render_circuit(res.encoder_circuit, s.field), encoding="utf-8")
    inv, enc = res.inverse_stats, res.encoder_stats
    print(f"inverse: gates={inv.gate_count} depth={inv.depth}")
    print(f"encoder: gates={enc.gate_count} depth={enc.depth}")
    print(f"verified: {'yes' if verify_inverse_encoder(s, res.inverse_circuit) else 'no'}")
    return 0


def _cmd_verify(args) -> int:
    s = parse_stabilizer(_read(args.stabilizer))
    c, field = parse_circuit(_read(args.circuit))
    if field != s.field:
        raise FormatError("circuit and stabilizer fields differ")
    ok = verify_inverse_encoder(s, c)
    print(f"verified: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_freedist(args) -> int:
    c = parse_convcode(_read(args.code))
    rep = free_distance(c, args.cap)
    print(f"d_free={rep.d_free} count={rep.count} cap={rep.search_bound}")
    return 0


def _cmd_dual(args) -> int:
    c = parse_convcode(_read(args.code))
    _write_out(render_convcode(dual_code(c)), args.out)
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(nu=args.nu, mode=args.mode, seed=args.seed,
                       budget=args.budget, keep=args.keep)
    records = search(cfg)
    header = f"{'nu':>3} {'g1':<{args.nu + 2}} {'g2':<{args.nu + 2}} " \
             f"{'g3':<{args.nu + 2}} {'g4':<{args.nu + 2}} {'d':>3} {'N':>5}"
    print(header)
    for r in records:
        g1, g2, g3, g4 = r.generators
        print(f"{r.nu:>3} {g1:<{args.nu + 2}} {g2:<{args.nu + 2}} "
              f"{g3:<{args.nu + 2}} {g4:<{args.nu + 2}} {r.d_dual:>3} {r.count:>5}")
    if args.out:
        payload = [{"nu": r.nu, "generators": list(r.generators),
                    "d_dual": r.d_dual, "count": r.count} for r in records]
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n",
                                  encoding="utf-8")
    return 0


def _cmd_snf(args) -> int:
    m = parse_matrix(_read(args.matrix))
    dec = smith_normal_form(m)
    for label, mat in (("A", dec.a), ("S", dec.s), ("B", dec.b)):
        print(f"-- {label}")
        sys.stdout.write(render_matrix(mat))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcconv",
        description="Construct, verify, and synthesize encoders for "
                    "quantum convolutional codes (exact arithmetic).")
    ap.add_argument("--version", action="version", version=f"qcconv {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="verify the commutation condition of a stabilizer")
    p.add_argument("stabilizer", help="stabilizer file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("params", help="report frame size, logical qudits, memory")
    p.add_argument("stabilizer", help="stabilizer file")
    p.set_defaults(fn=_cmd_params)

    p = sub.add_parser("expand", help="expand the semi-infinite band")
    p.add_argument("stabilizer", help="stabilizer file")
    p.add_argument("--frames", type=int, required=True, help="block rows to render")
    p.add_argument("--pauli", action="store_true", help="render Pauli letters")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("css", help="build the block-diagonal CSS stabilizer")
    p.add_argument("--h1", help="parity check of the Z-side code (omit for 0 rows)")
    p.add_argument("--h2", required=True, help="parity check of the X-side code")
    p.add_argument("--out", help="output stabilizer file (default stdout)")
    p.set_defaults(fn=_cmd_css)

    p = sub.add_parser("product", help="tensor a classical code with a stabilizer")
    p.add_argument("--classical", required=True, help="convolutional code file")
    p.add_argument("--quantum", required=True, help="stabilizer file")
    p.add_argument("--d2", type=int, help="quantum factor distance, to report the bound")
    p.add_argument("--out", help="output stabilizer file (default stdout)")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("cyclic", help="cyclic-product inner generator / overlapped code")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--n2", type=int, required=True, help="inner length (divides q-1)")
    p.add_argument("--d", type=int, required=True, help="inner designed distance")
    p.add_argument("--alpha", required=True, help="n2-th root of unity")
    p.add_argument("--g1", help="outer constant generator matrix file")
    p.add_argument("--mu", type=int, default=1, help="overlap parameter")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_cyclic)

    p = sub.add_parser("encode", help="synthesize inverse-encoding and encoding circuits")
    p.add_argument("--kind", choices=("css", "block", "product"), required=True)
    p.add_argument("--h1", help="css: Z-side parity check (omit for 0 rows)")
    p.add_argument("--h2", help="css: X-side parity check")
    p.add_argument("--stabilizer", help="block: constant stabilizer file")
    p.add_argument("--classical", help="product: convolutional code file")
    p.add_argument("--quantum", help="product: constant stabilizer file")
    p.add_argument("--out-inverse", help="write the inverse encoder circuit here")
    p.add_argument("--out-encoder", help="write the encoder circuit here")
    p.add_argument("--emit-intermediate", action="store_true",
                   help="dump the stabilizer after each pipeline step")
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("verify", help="check a circuit carries a stabilizer to (0 | I 0)")
    p.add_argument("--stabilizer", required=True)
    p.add_argument("--circuit", required=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("freedist", help="free distance of a convolutional code")
    p.add_argument("code", help="convolutional code file")
    p.add_argument("--cap", type=int, help="weight budget (default 2(nu+1)n)")
    p.set_defaults(fn=_cmd_freedist)

    p = sub.add_parser("dual", help="minimal basic generator of the dual code")
    p.add_argument("code", help="convolutional code file")
    p.add_argument("--out", help="output code file (default stdout)")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("search", help="search self-orthogonal rate-1/4 binary codes")
    p.add_argument("--nu", type=int, required=True, help="constraint length")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0, help="random mode stream seed")
    p.add_argument("--budget", type=int, default=0, help="random mode candidate count")
    p.add_argument("--keep", type=int, default=32, help="records to retain")
    p.add_argument("--out", help="also write records as JSON")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("snf", help="Smith normal form of a polynomial matrix")
    p.add_argument("matrix", help="matrix file")
    p.set_defaults(fn=_cmd_snf)

    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
