"""Command-line interface: ``infhecke <subcommand> ...``.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 invalid
input, 3 a size cap was exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Any

from . import hecke, specht, stable, trace
from .limits import ResourceCapError
from .report import Report
from .scalars import format_ratfunc, truncate
from .specht import SpechtVector
from .tableaux import (
    StableSYT,
    enumerate_by_inv,
    enumerate_syt,
    inv,
    n_lambda,
    parse_partition,
    size,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
DEFAULT_K = 12


class InputError(ValueError):
    pass


def parse_rows(text: str) -> list[list[int]]:
    """``"1,2,4/3,6/5"`` -> ``[[1, 2, 4], [3, 6], [5]]`` (an empty first row is allowed)."""
    rows = []
    for chunk in text.split("/"):
        chunk = chunk.strip()
        rows.append([int(x) for x in chunk.split(",") if x.strip()] if chunk else [])
    return rows


def _stable(lam_text: str, rows_text: str) -> StableSYT:
    return StableSYT.from_rows(parse_partition(lam_text), parse_rows(rows_text))


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def emit(payload: dict, fmt: str, text_lines: list[str], csv_rows: list[list[Any]] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows or [[line] for line in text_lines]:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(text_lines))


def emit_reports(reports: list[Report], fmt: str) -> int:
    ok = all(r.passed for r in reports)
    lines = [line for r in reports for line in r.lines()]
    rows = [["report", "check", "passed"]] + [[r.name, k, v] for r in reports for k, v in r.checks.items()]
    emit({"passed": ok, "reports": [r.to_json() for r in reports]}, fmt, lines, rows)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_syt(args) -> int:
    if args.shape is not None:
        shape = parse_partition(args.shape)
        tabs = enumerate_syt(shape)
        items = [t.to_json() for t in tabs]
        lines = [str(t) for t in tabs] + [f"count: {len(tabs)}"]
        rows = [["index", "tableau"]] + [[i, str(t)] for i, t in enumerate(tabs)]
        emit({"shape": list(shape), "count": len(tabs), "tableaux": items}, args.format, lines, rows)
        return EXIT_OK
    if args.lam is None:
        raise InputError("give --shape or --lambda with --max-inv")
    lam = parse_partition(args.lam)
    tabs = enumerate_by_inv(lam, args.max_inv)
    lines = [f"inv={inv(t)} rank={t.rank} {t}" for t in tabs] + [f"count: {len(tabs)}"]
    rows = [["index", "inv", "rank", "tableau"]] + [[i, inv(t), t.rank, str(t)] for i, t in enumerate(tabs)]
    payload = {
        "lambda": list(lam),
        "max_inv": args.max_inv,
        "count": len(tabs),
        "tableaux": [dict(t.to_json(), inv=inv(t)) for t in tabs],
    }
    emit(payload, args.format, lines, rows)
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise InputError(f"{flag} is required for this suite")
    return value


def cmd_verify(args) -> int:
    suite = args.suite
    lam = parse_partition(args.lam) if args.lam is not None else None
    reports: list[Report] = []
    if suite == "relations":
        lam = _need(lam, "--lambda")
        n = args.n if args.n is not None else n_lambda(lam)
        rule = specht.corrupted_rule() if args.corrupt else specht.t_structure
        reports.append(specht.verify_finite_relations(lam, n, rule))
    elif suite == "branching":
        lam = _need(lam, "--lambda")
        reports.append(specht.branch_dimension_check(lam, _need(args.n, "--n")))
    elif suite == "dims":
        lam = _need(lam, "--lambda")
        r = _need(args.r, "--r")
        reports.append(stable.strip_count_check(lam, r))
        if args.mu is not None:
            mu = parse_partition(args.mu)
            m = args.m if args.m is not None else max(n_lambda(mu), size(mu) + (lam[0] if lam else 0))
            reports.append(stable.dimension_identity_check(lam, mu, r, m))
    elif suite == "idempotents":
        n_max = args.n if args.n is not None else 4
        rep = Report(f"idempotent laws n<={n_max}")
        for n in range(0, n_max + 1):
            for k in range(n + 1):
                e = hecke.epsilon_fin(k, n)
                for l in range(n + 1):
                    ok = e * hecke.epsilon_fin(l, n) == hecke.epsilon_fin(min(k, l), n)
                    rep.record("product", ok, f"k={k}, l={l}, n={n}")
                for i in range(1, n):
                    g = hecke.HeckeElement.generator(i)
                    if i <= k - 1:
                        rep.record("commute", g * e == e * g, f"i={i}, k={k}, n={n}")
                    if i >= k + 1:
                        rep.record("absorb", g * e == e and e * g == e, f"j={i}, k={k}, n={n}")
        reports.append(rep)
    elif suite == "adjointness":
        lam = _need(lam, "--lambda")
        rng = random.Random(args.seed)
        basis = enumerate_by_inv(lam, 3)
        gens = range(1, max(t.rank for t in basis) + 1)
        for _ in range(args.samples):
            v = _random_vector(lam, basis, rng)
            w = _random_vector(lam, basis, rng)
            reports.append(trace.adjointness_check(v, w, gens))
        merged = Report(f"adjointness lambda={lam} samples={args.samples}")
        for r in reports:
            for k, v in r.checks.items():
                merged.record(k, v, r.details.get(k))
        reports = [merged]
    elif suite == "stability":
        lam = _need(lam, "--lambda")
        r = _need(args.r, "--r")
        rep = Report(f"stability lambda={lam} r={r}")
        for tau in enumerate_by_inv(lam, args.max_inv):
            ok = stable.stability_defect(r, tau).is_zero()
            rep.record("eps_level_independent", ok, f"tau={tau}")
        reports.append(rep)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown suite {suite}")
    return emit_reports(reports, args.format)


def _random_vector(lam, basis, rng: random.Random) -> SpechtVector:
    from .scalars import RatFunc, Poly

    terms = {}
    for tau in rng.sample(basis, min(3, len(basis))):
        terms[tau] = RatFunc(Poly([rng.randint(-3, 3) for _ in range(3)]) + Poly([1]))
    return SpechtVector(lam, terms)


def cmd_idempotent(args) -> int:
    if args.tableau is None:
        e = hecke.epsilon_fin(args.k, args.n)
        payload = {"k": args.k, "n": args.n, "element": e.to_json()}
        rows = [["perm", "coeff"]] + [[str(s), format_ratfunc(e.coeff(s))] for s in e.support()]
        emit(payload, args.format, [f"eps_{args.k}^({args.n}) = {e}"], rows)
        return EXIT_OK
    if args.lam is None:
        raise InputError("--tableau needs --lambda")
    tau = _stable(args.lam, args.tableau)
    r = args.k
    alpha, pair = stable.alpha_coefficient(r, tau)
    v = stable.epsilon_stable(r, SpechtVector.basis(tau))
    payload = {
        "r": r,
        "tableau": tau.to_json(),
        "alpha": format_ratfunc(alpha),
        "pair": None if pair is None else pair.to_json(),
        "image": v.to_json(),
    }
    lines = [f"alpha_{r}({tau}) = {format_ratfunc(alpha)}", f"eps_{r}(e_tau) = {v}"]
    rows = [["tableau", "coeff"]] + [[str(s), format_ratfunc(v.coeff(s))] for s in v.support()]
    emit(payload, args.format, lines, rows)
    return EXIT_OK


def cmd_inner(args) -> int:
    tau = _stable(args.lam, args.tableau)
    if args.other is not None:
        sigma = _stable(args.lam, args.other)
        val = trace.inner_product(SpechtVector.basis(tau), SpechtVector.basis(sigma))
        payload = {"tableau": tau.to_json(), "other": sigma.to_json(), "inner": format_ratfunc(val)}
        emit(payload, args.format, [f"(e_tau, e_sigma) = {format_ratfunc(val)}"], [["inner"], [format_ratfunc(val)]])
        return EXIT_OK
    a = trace.a_weight(tau)
    rs = trace.rescale_factor(tau)
    g = trace.gamma_weight(tau)
    pairs = [[list(b1), list(b2), gap] for b1, b2, gap in trace.inversion_pairs(tau)]
    payload = {
        "tableau": tau.to_json(),
        "inv": inv(tau),
        "inversion_pairs": pairs,
        "a_weight": format_ratfunc(a),
        "rescale_factor": format_ratfunc(rs),
        "gamma_weight": format_ratfunc(g),
    }
    lines = [
        f"tau = {tau}  (rank {tau.rank}, inv {inv(tau)})",
        f"a(tau) = {format_ratfunc(a)}",
        f"rescale = {format_ratfunc(rs)}",
        f"(e~, e~) = {format_ratfunc(g)}",
    ]
    rows = [["quantity", "value"], ["inv", inv(tau)], ["a_weight", format_ratfunc(a)],
            ["rescale_factor", format_ratfunc(rs)], ["gamma_weight", format_ratfunc(g)]]
    emit(payload, args.format, lines, rows)
    return EXIT_OK


def _trace_payload(lam, label: str, res: trace.TraceResult, guess_wanted: bool) -> tuple[dict, list[str]]:
    payload = {"lambda": list(lam), "element": label, **res.to_json()}
    lines = [f"Gamma_{lam}({label}) = {res.value}"]
    if res.exact_part is not None:
        lines.append(f"exact: {format_ratfunc(res.exact_part)}")
    if guess_wanted:
        guess = None
        if res.value.min_order == 0 and res.value.coeff(0) == 1:
            guess = trace.rational_guess(res.value)
        payload["guess"] = None if guess is None else guess.to_json()
        lines.append(f"guess: {guess if guess is not None else 'none'}")
    return payload, lines


def cmd_trace(args) -> int:
    lam = parse_partition(args.lam)
    if args.theta is not None:
        exps = [int(x) for x in args.theta.split(",") if x.strip()]
        res = trace.gamma_theta(lam, exps, args.K)
        label = "theta^(" + ",".join(map(str, exps)) + ")"
    else:
        X = hecke.parse_element(args.elem)
        res = trace.gamma_trunc(lam, X, args.K)
        label = args.elem
    payload, lines = _trace_payload(lam, label, res, args.guess)
    emit(payload, args.format, lines, list(csv.reader(io.StringIO(res.to_csv()))))
    return EXIT_OK


def _partitions_up_to(n: int):
    def parts(m, cap):
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in parts(m - first, first):
                yield (first,) + rest

    for m in range(n + 1):
        yield from parts(m, m)


def cmd_conjecture(args) -> int:
    results = []
    lines = []
    rows = [["lambda", "series", "guess"]]
    for lam in _partitions_up_to(args.max_size):
        res = trace.gamma_trunc(lam, hecke.HeckeElement.one(), args.K)
        guess = trace.rational_guess(res.value, max_exponent=args.max_exponent)
        results.append({"lambda": list(lam), "series": res.value.to_json(),
                        "guess": None if guess is None else guess.to_json()})
        shown = str(guess) if guess is not None else "none"
        lines.append(f"Gamma_{lam}(1) = {res.value}    guess: {shown}")
        rows.append([",".join(map(str, lam)), str(res.value), shown])
    emit({"K": args.K, "results": results}, args.format, lines, rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="infhecke",
        description="Specht modules of the infinite Hecke algebra: tableaux, relation checks, "
        "idempotents, inner products and regularized traces.",
        epilog="Size caps: INFHECKE_MAX_SYT_SIZE, INFHECKE_MAX_IDEMPOTENT_N, INFHECKE_MAX_MODULE_DIM. "
        "Exit codes: 0 pass, 1 check failed, 2 invalid input, 3 cap exceeded.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("syt", parents=[common], help="list standard Young tableaux")
    s.add_argument("--shape", help="finite shape, e.g. 2,2,1")
    s.add_argument("--lambda", dest="lam", help="partition lambda for stable tableaux")
    s.add_argument("--max-inv", type=int, default=2, help="inversion bound for stable tableaux")
    s.set_defaults(func=cmd_syt)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=["relations", "branching", "dims", "idempotents", "adjointness", "stability"])
    v.add_argument("--lambda", dest="lam")
    v.add_argument("--n", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--mu")
    v.add_argument("--m", type=int)
    v.add_argument("--max-inv", type=int, default=3)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("idempotent", parents=[common], help="eps_k^(n) as an element, or eps_r on a tableau")
    i.add_argument("--k", type=int, required=True, help="k (or r for the stable operator)")
    i.add_argument("--n", type=int, help="n for the finite element")
    i.add_argument("--lambda", dest="lam")
    i.add_argument("--tableau", help="rows like 1,2,4/3,6/5 (first row is the long row)")
    i.set_defaults(func=cmd_idempotent)

    n = sub.add_parser("inner", parents=[common], help="inner-product weights of a stable tableau")
    n.add_argument("--lambda", dest="lam", required=True)
    n.add_argument("--tableau", required=True)
    n.add_argument("--other", help="second tableau; prints (e_tau, e_other)")
    n.set_defaults(func=cmd_inner)

    t = sub.add_parser("trace", parents=[common], help="certified regularized trace")
    t.add_argument("--lambda", dest="lam", required=True)
    t.add_argument("--elem", default="1", help='Hecke element, e.g. "T1 T2 + (t) T3" or "1"')
    t.add_argument("--theta", help="exponents a_1,a_2,... for theta_1^a_1 theta_2^a_2 ...")
    t.add_argument("--K", type=int, default=DEFAULT_K)
    t.add_argument("--guess", action="store_true", help="attempt a product-form guess")
    t.set_defaults(func=cmd_trace)

    c = sub.add_parser("conjecture", parents=[common], help="Gamma_lam(1) with product guesses for small lam")
    c.add_argument("--max-size", type=int, default=3)
    c.add_argument("--K", type=int, default=16)
    c.add_argument("--max-exponent", type=int, help="reject guesses needing (1-t^e) with e above this")
    c.set_defaults(func=cmd_conjecture)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        if getattr(args, "K", 0) < 0:
            raise InputError("K must be >= 0")
        if args.command == "idempotent" and args.tableau is None and args.n is None:
            raise InputError("give --n (finite element) or --lambda with --tableau")
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
