"""Command-line front end: ``dybe <command> [options]``.

Exit status is 0 on success, 1 when a reported check fails and 2 for an
invalid configuration or a non-generic rational lambda.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import fusion_exchange as fx
from . import intertwine, suite, trace, universal
from .errors import NonGenericLambda, TruncationError
from .hyperg import HypergeometricError
from .ratfield import EvaluationError, FieldError, FractionField, RatFunc, render
from .scalars import rat

LAMBDA = FractionField("lambda")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


# --- parsing ----------------------------------------------------------------------


def _parse_lambda(text):
    try:
        value = rat(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"--lambda expects p/q, got {text!r}") from None
    return value


def _parse_dims(text):
    try:
        dims = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"--dims expects G,D,E, got {text!r}") from None
    if len(dims) != 3 or min(dims) < 0:
        raise ConfigError(f"--dims expects three nonnegative integers, got {text!r}")
    return dims


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--lambda", dest="lam", metavar="P/Q", help="rational value of lambda")
    mode.add_argument("--symbolic", action="store_true", help="keep lambda symbolic (default)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="dybe", description="Exact sl(2) fusion and exchange matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intertwiner", parents=[common], help="intertwiner coefficients c[m, n]")
    p.add_argument("--gamma", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n-max", type=_nonneg)
    p.add_argument("--oracle", action="store_true", help="also compute the Leibniz expansion and compare")

    for name, text in (("fusion", "fusion matrix"), ("exchange", "exchange matrix")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--delta", type=_nonneg, required=True)
        p.add_argument("--gamma", type=_nonneg, required=True)
        p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("universal", parents=[common], help="terms of the universal fusion matrix")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("qop", parents=[common], help="diagonal of Q(lambda) on V_gamma")
    p.add_argument("--gamma", type=_nonneg, required=True)

    p = sub.add_parser("trace", parents=[common], help="bodies of Psi and F")
    p.add_argument("--gamma", type=_nonneg, required=True)

    p = sub.add_parser("qdybe", parents=[common], help="check the dynamical Yang-Baxter equation")
    p.add_argument("--dims", required=True, help="G,D,E")

    p = sub.add_parser("biorth", parents=[common], help="check biorthogonality of exchange coefficients")
    p.add_argument("--gamma", type=_nonneg, required=True)
    p.add_argument("--delta", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, required=True)

    p = sub.add_parser("mr-check", parents=[common], help="check the dual Macdonald-Ruijsenaars equation")
    p.add_argument("--gamma", type=_nonneg, required=True)
    p.add_argument("--delta", type=_nonneg, required=True)

    p = sub.add_parser("verify-all", parents=[common], help="run the full property suite")
    p.add_argument("--max-dim", type=_nonneg, help="cap on every dimension bound (env DYBE_MAX_DIM)")
    return parser


# --- rendering ---------------------------------------------------------------------


def _str(x):
    while isinstance(x, RatFunc):
        c = x.constant_value()
        if c is None:
            return render(x)
        x = c
    return str(rat(x))


def _lambda_label(lam):
    return "symbolic" if isinstance(lam, RatFunc) else str(lam)


class Output:
    def __init__(self, stream, fmt):
        self.stream = stream
        self.fmt = fmt

    def line(self, text=""):
        self.stream.write(text + "\n")

    def json(self, data):
        self.stream.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")

    def csv(self, rows):
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerows(rows)


def _emit_matrix(out: Output, title, wm: fx.WeightedMatrix):
    if out.fmt == "json":
        out.json(wm.to_json())
    elif out.fmt == "csv":
        out.csv(wm.to_csv_rows())
    else:
        out.line(f"{title} delta={wm.delta} gamma={wm.gamma} lambda={_lambda_label(wm.lam)}")
        for s in sorted(wm.blocks):
            blk = wm.blocks[s]
            out.line(f"s={s} index_range=[{blk.lo}, {blk.hi}]")
            for row in blk.rows:
                out.line("  " + " | ".join(_str(x) for x in row))


def _emit_verdict(out: Output, name, ok, extra=None):
    verdict = "PASS" if ok else "FAIL"
    if out.fmt == "json":
        data = {"check": name, "result": verdict}
        data.update(extra or {})
        out.json(data)
    elif out.fmt == "csv":
        out.csv([["check", "result"], [name, verdict]])
    else:
        out.line(f"{name}: {verdict}")
    return EXIT_OK if ok else EXIT_FAIL


# --- commands ----------------------------------------------------------------------


def cmd_intertwiner(args, lam, out):
    if args.k > args.gamma:
        raise ConfigError("need k <= gamma")
    table = intertwine.intertwiner_table(args.gamma, args.k, lam, n_max=args.n_max)
    entries = [{"m": m, "n": n, "value": _str(v)} for (m, n), v in table.entries()]
    status = EXIT_OK
    agree = None
    if args.oracle:
        oracle = intertwine.intertwiner_table(args.gamma, args.k, lam, n_max=args.n_max, oracle=True)
        agree = oracle.table == table.table
        status = EXIT_OK if agree else EXIT_FAIL
    if out.fmt == "json":
        data = {"gamma": args.gamma, "k": args.k, "lambda": _lambda_label(lam), "entries": entries}
        if agree is not None:
            data["oracle"] = "PASS" if agree else "FAIL"
        out.json(data)
    elif out.fmt == "csv":
        out.csv([["m", "n", "value"]] + [[e["m"], e["n"], e["value"]] for e in entries])
    else:
        out.line(f"intertwiner gamma={args.gamma} k={args.k} lambda={_lambda_label(lam)}")
        for e in entries:
            out.line(f"c[{e['m']},{e['n']}] = {e['value']}")
        if agree is not None:
            out.line(f"oracle: {'PASS' if agree else 'FAIL'}")
    return status


def cmd_fusion(args, lam, out):
    build = fx.assemble_J_inv if args.inverse else fx.assemble_J
    _emit_matrix(out, "fusion-inverse" if args.inverse else "fusion", build(args.delta, args.gamma, lam))
    return EXIT_OK


def cmd_exchange(args, lam, out):
    build = fx.assemble_R_inv if args.inverse else fx.assemble_R
    _emit_matrix(out, "exchange-inverse" if args.inverse else "exchange", build(args.delta, args.gamma, lam))
    return EXIT_OK


def cmd_universal(args, lam, out):
    U = (universal.universal_J_inv if args.inverse else universal.universal_J)(args.order)
    terms = [_str(t) for t in U.terms]
    if out.fmt == "json":
        out.json({"order": args.order, "kind": "J_inverse" if args.inverse else "J", "terms": terms})
    elif out.fmt == "csv":
        out.csv([["n", "coefficient"]] + [[n, t] for n, t in enumerate(terms)])
    else:
        for n, t in enumerate(terms):
            out.line(f"n={n}: f^{n} (x) {t} e^{n}")
    return EXIT_OK


def cmd_qop(args, lam, out):
    diag = [_str(v) for v in universal.q_operator_diagonal(args.gamma, lam)]
    if out.fmt == "json":
        out.json({"gamma": args.gamma, "lambda": _lambda_label(lam), "diagonal": diag})
    elif out.fmt == "csv":
        out.csv([["k", "eigenvalue"]] + [[k, v] for k, v in enumerate(diag)])
    else:
        for k, v in enumerate(diag):
            out.line(f"k={k}: {v}")
    return EXIT_OK


def _even_gamma(gamma):
    if gamma % 2:
        raise ConfigError("gamma must be even for trace functions")


def cmd_trace(args, lam, out):
    _even_gamma(args.gamma)
    psi = trace.psi(args.gamma)
    F = trace.weighted_F(args.gamma)
    rows = [("psi", "+", render(psi.body)), ("F", "-", render(F.body))]
    if out.fmt == "json":
        out.json({
            "gamma": args.gamma,
            "variables": ["u", "mu"],
            "functions": [{"name": n, "prefactor": f"exp({p}lambda*mu/2)", "body": b} for n, p, b in rows],
        })
    elif out.fmt == "csv":
        out.csv([["name", "prefactor_sign", "body"]] + [list(r) for r in rows])
    else:
        for name, sign, body in rows:
            out.line(f"{name}: exp({sign}lambda*mu/2) * {body}")
    return EXIT_OK


def cmd_qdybe(args, lam, out):
    dims = _parse_dims(args.dims)
    ok = fx.qdybe_check(*dims, lam)
    return _emit_verdict(out, f"qdybe {args.dims}", ok)


def cmd_biorth(args, lam, out):
    if args.s > min(args.gamma, args.delta):
        raise ConfigError("biorthogonality is checked for s <= min(gamma, delta)")
    ok = fx.biorthogonality_check(args.gamma, args.delta, args.s, lam)
    return _emit_verdict(out, f"biorth gamma={args.gamma} delta={args.delta} s={args.s}", ok)


def cmd_mr_check(args, lam, out):
    _even_gamma(args.gamma)
    op = trace.mr_operator(args.delta, args.gamma)
    ok = trace.mr_check(args.delta, args.gamma)
    verdict = "PASS" if ok else "FAIL"
    terms = [{"shift": nu, "coefficient": _str(c)} for nu, c in op.terms]
    if out.fmt == "json":
        out.json({"delta": args.delta, "gamma": args.gamma, "terms": terms, "result": verdict})
    elif out.fmt == "csv":
        out.csv([["shift", "coefficient"]] + [[t["shift"], t["coefficient"]] for t in terms])
        out.csv([["result", verdict]])
    else:
        for t in terms:
            out.line(f"shift {t['shift']:+d}: {t['coefficient']}")
        out.line(f"mr-check delta={args.delta} gamma={args.gamma}: {verdict}")
    return EXIT_OK if ok else EXIT_FAIL


def _max_dim(args):
    if args.max_dim is not None:
        return args.max_dim
    env = os.environ.get("DYBE_MAX_DIM")
    if env is None or env == "":
        return None
    try:
        value = int(env)
    except ValueError:
        raise ConfigError(f"DYBE_MAX_DIM must be an integer, got {env!r}") from None
    if value < 0:
        raise ConfigError("DYBE_MAX_DIM must be nonnegative")
    return value


def cmd_verify_all(args, lam, out, err=sys.stderr):
    """Verdicts go to stdout in check order; timings go to stderr so stdout stays reproducible."""
    cap = _max_dim(args)
    results = list(suite.run_suite(cap, args.seed))
    for r in results:
        err.write(f"[{r.index:02d}] {r.name} {r.seconds:.3f}s\n")
        if r.error:
            err.write(f"[{r.index:02d}] {r.name} error: {r.error}\n")
    rows = [(r.index, r.name, "PASS" if r.passed else "FAIL") for r in results]
    if out.fmt == "json":
        out.json({"seed": args.seed, "max_dim": cap, "checks": [{"index": i, "name": n, "result": v} for i, n, v in rows]})
    elif out.fmt == "csv":
        out.csv([["index", "name", "result"]] + [list(r) for r in rows])
    else:
        for i, n, v in rows:
            out.line(f"[{i:02d}] {n}: {v}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {
    "intertwiner": cmd_intertwiner,
    "fusion": cmd_fusion,
    "exchange": cmd_exchange,
    "universal": cmd_universal,
    "qop": cmd_qop,
    "trace": cmd_trace,
    "qdybe": cmd_qdybe,
    "biorth": cmd_biorth,
    "mr-check": cmd_mr_check,
    "verify-all": cmd_verify_all,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(stdout, args.format)
    try:
        lam = _parse_lambda(args.lam) if args.lam is not None else LAMBDA.gen()
        if args.command == "verify-all":
            return cmd_verify_all(args, lam, out, stderr)
        return COMMANDS[args.command](args, lam, out)
    except (ConfigError, TruncationError, FieldError) as exc:
        stderr.write(f"dybe: error: {exc}\n")
        return EXIT_CONFIG
    except (NonGenericLambda, EvaluationError, HypergeometricError, ZeroDivisionError) as exc:
        stderr.write(f"dybe: error: non-generic λ={_lambda_label(lam)}: {exc}\n")
        return EXIT_CONFIG
    except ValueError as exc:
        stderr.write(f"dybe: error: {exc}\n")
        return EXIT_CONFIG


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
