"""Command-line front end. Every command writes a JSON manifest and exits 0 (all
certified), 2 (only reported gaps) or 1 (a failure or an error)."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import reduction, shareapp
from .dualcraft import amplify, compose, mass, pipeline
from .dualcraft import omega as omega_mod  # the submodule
from .exactlp import adeg_ladder, degree_certificate, dual_witness, one_sided_dual_witness
from .fncore import BASIC_KINDS, BooleanFunction, certificate_complexity, function_from_json, make_basic, surjectivity
from .hypercube import DualWitness
from .manifest import PropertyLedger, build_manifest, file_digest, write_json_atomic
from .rational import fmt, parse

Result = Tuple[dict, PropertyLedger, dict, str]  # params, ledger, results, stdout text


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- argument helpers ---------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fn_from_spec(spec: str, n: Optional[int], N: Optional[int] = None, R: Optional[int] = None) -> BooleanFunction:
    """'or' with --n, or 'or:3'; 'surj' uses --N and --R."""
    name, _, arity = spec.partition(":")
    kind = name.upper()
    if kind == "SURJ":
        if N is None or R is None:
            raise UsageError("surj needs --N and --R")
        return surjectivity(N, R)
    if kind not in BASIC_KINDS:
        raise UsageError(f"unknown function {spec!r}")
    size = int(arity) if arity else n
    if size is None:
        raise UsageError(f"{spec!r} needs an arity (--n or '{name}:k')")
    return make_basic(kind, size)


def _load_json(path: str, inputs: Dict[str, str]) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    inputs[path] = file_digest(path)
    return data


def _target(args, inputs: Dict[str, str]) -> BooleanFunction:
    if args.file:
        return function_from_json(_load_json(args.file, inputs))
    if not args.fn:
        raise UsageError("give --fn or --file")
    return _fn_from_spec(args.fn, args.n, args.N, args.R)


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.cmd} needs {', '.join(missing)}")


# -- commands -----------------------------------------------------------------


def cmd_adeg(args, inputs) -> Result:
    _need(args, "eps")
    f = _target(args, inputs)
    lad = adeg_ladder(f, args.eps)
    led = PropertyLedger()
    for d, _ in lad.ladder:
        cert = degree_certificate(f, d)
        led.assert_true(f"strong_duality_d{d}", cert.strong_duality)
        led.assert_rel(f"primal_error_d{d}", cert.primal_error(), "==", cert.epsilon)
    params = {"function": f.to_json(), "eps": fmt(args.eps)}
    return params, led, lad.to_json(), f"{lad.degree}\n"


def cmd_eps(args, inputs) -> Result:
    _need(args, "d")
    f = _target(args, inputs)
    cert = degree_certificate(f, args.d)
    led = PropertyLedger()
    led.assert_true("strong_duality", cert.strong_duality)
    led.assert_rel("primal_error", cert.primal_error(), "==", cert.epsilon)
    params = {"function": f.to_json(), "d": args.d}
    return params, led, cert.to_json(), fmt(cert.epsilon) + "\n"


def cmd_dual(args, inputs) -> Result:
    _need(args, "d")
    f = _target(args, inputs)
    psi = one_sided_dual_witness(f, args.d) if args.one_sided else dual_witness(f, args.d)
    led = PropertyLedger()
    led.assert_rel("norm", psi.l1, "==", 1)
    led.assert_true("orthogonal", psi.orthogonal_below(args.d))
    if not args.one_sided:
        led.assert_rel("correlation", psi.correlation(f), "==", degree_certificate(f, args.d - 1).epsilon)
    params = {"function": f.to_json(), "d": args.d, "one_sided": args.one_sided}
    results = {"witness": psi.to_json(), "correlation": fmt(psi.correlation(f)), "pure_high_degree": psi.pure_high_degree}
    return params, led, results, json.dumps(psi.to_json(), sort_keys=True) + "\n"


def _witness_at_third(f: BooleanFunction) -> Tuple[int, DualWitness]:
    d = adeg_ladder(f, Fraction(1, 3)).degree
    if d == 0:
        raise UsageError(f"{f!r} has degree 0 at 1/3; no nontrivial witness")
    return d, dual_witness(f, d)


def cmd_compose(args, inputs) -> Result:
    _need(args, "outer", "inner")
    F = _fn_from_spec(args.outer, None)
    f = _fn_from_spec(args.inner, None)
    dF, Psi = _witness_at_third(F)
    df, psi = _witness_at_third(f)
    laws = compose.check_laws(Psi, psi)
    comp = compose.dual_block_compose(Psi, psi)
    bound = compose.correlation_loss_bound(Psi, psi, F, f)
    led = PropertyLedger()
    for name, ok in sorted(laws.items()):
        if isinstance(ok, bool):
            led.assert_true(f"law_{name}", ok)
    led.assert_rel("norm", comp.l1, "==", 1)
    led.assert_true("pure_high_degree", comp.orthogonal_below(Psi.pure_high_degree * psi.pure_high_degree))
    led.assert_rel("correlation_loss", bound["lhs"], ">=", bound["rhs"])
    params = {"outer": F.to_json(), "inner": f.to_json(), "d_outer": dF, "d_inner": df}
    results = {"correlation": fmt(bound["lhs"]), "bound": {k: fmt(v) for k, v in bound.items()}, "support": len(comp)}
    return params, led, results, fmt(bound["lhs"]) + "\n"


def cmd_omega(args, inputs) -> Result:
    _need(args, "k")
    w = omega_mod.omega(args.k)
    led = omega_mod.check_omega(args.k) if args.check else PropertyLedger()
    results = {"support": omega_mod.omega_support(args.k), "omega": w.to_json(), "or_correlation": fmt(omega_mod.or_correlation(w))}
    if args.N is not None:
        psi = omega_mod.psi_or(args.N, args.k)
        if args.check:
            led.extend(omega_mod.check_psi_or(args.N, args.k, psi), prefix="psi_")
        results["psi_support"] = len(psi)
    params = {"k": args.k, "N": args.N}
    return params, led, results, json.dumps(results["omega"], sort_keys=True) + "\n"


def cmd_amplify(args, inputs) -> Result:
    if args.schedule:
        _need(args, "n", "d")
        over = {k: getattr(args, k) for k in ("k", "N", "R") if getattr(args, k) is not None}
        sched = amplify.AmplificationParams.schedule(args.n, args.d, **over)
        return {"n": args.n, "d": args.d}, PropertyLedger(), sched.to_json(), json.dumps(sched.to_json(), sort_keys=True) + "\n"
    M = args.M or 1
    f = _target(args, inputs)
    d = args.d or 2
    psi = one_sided_dual_witness(f, d)
    Psi = amplify.amplifier_Psi(M)
    led = amplify.check_amplification(M, f, psi, Psi)
    G = make_basic("AND", M)
    bound = compose.correlation_loss_bound(Psi, psi, G, f)
    led.assert_rel("correlation_loss", bound["lhs"], ">=", bound["rhs"])
    params = {"function": f.to_json(), "M": M, "d": d}
    results = {"Psi": Psi.to_json(), "composed_correlation": fmt(bound["lhs"])}
    return params, led, results, fmt(bound["lhs"]) + "\n"


def _clauses(text: Optional[str], R: int) -> List[List[int]]:
    if not text:
        return [list(range(1, R + 1))]
    return [[int(v) for v in part.split(",") if v.strip()] for part in text.split(";") if part.strip()]


def cmd_reduce(args, inputs) -> Result:
    _need(args, "N", "R")
    eps = args.eps if args.eps is not None else Fraction(1, 3)
    params, led = reduction.run_reduction(_clauses(args.clauses, args.R), args.R, args.N, eps, width=args.width)
    return params, led, {}, f"exit {led.exit_code()}\n"


def cmd_correct(args, inputs) -> Result:
    _need(args, "d")
    f = _target(args, inputs)
    run = pipeline.run_pipeline(f, args.d, args.M or 1, cap=args.N)
    results = {"support_sizes": run.to_json()["support_sizes"], "zetahat": run.zetahat.to_json()}
    return run.params, run.ledger, results, f"{len(run.zetahat)}\n"


def cmd_masscheck(args, inputs) -> Result:
    _need(args, "N")
    f = _target(args, inputs)
    R = args.R or 2
    psi = one_sided_dual_witness(f, args.d or 2)
    Phi = amplify.amplifier_Psi(R)
    plus, minus = mass.layer_split(psi)
    fast = mass.mass_outside(Phi, plus, minus, args.N)
    led = PropertyLedger()
    led.assert_rel("mass_dp_matches", fast, "==", mass.mass_outside_brute(Phi, psi, args.N))
    led.extend(mass.check_helper_bounds())
    params = {"function": f.to_json(), "R": R, "N": args.N}
    return params, led, {"mass_outside": fmt(fast)}, fmt(fast) + "\n"


def cmd_share(args, inputs) -> Result:
    action = args.action
    if action == "make":
        _need(args, "d", "scheme")
        f = _target(args, inputs)
        scheme = shareapp.scheme_from_witness(f, dual_witness(f, args.d))
        write_json_atomic(args.scheme, scheme.to_json())
        led = shareapp.check_scheme(scheme, args.d)
        return {"function": f.to_json(), "d": args.d}, led, {"scheme_id": scheme.scheme_id}, scheme.scheme_id + "\n"
    _need(args, "scheme")
    scheme = shareapp.Scheme.from_json(_load_json(args.scheme, inputs))
    params: dict = {"scheme_id": scheme.scheme_id}
    led = PropertyLedger()
    if action == "split":
        _need(args, "secret")
        seed = args.seed or 0
        bundle = shareapp.split(args.secret, scheme, seed)
        params.update(secret=args.secret, seed=seed)
        return params, led, bundle.to_json(), json.dumps(bundle.to_json(), sort_keys=True) + "\n"
    if action == "reconstruct":
        _need(args, "file")
        bundle = shareapp.ShareBundle.from_json(_load_json(args.file, inputs))
        if bundle.scheme_id != scheme.scheme_id:
            raise UsageError("bundle was made with a different scheme")
        bit = shareapp.reconstruct(bundle, scheme.f)
        return params, led, {"bit": bit}, f"{bit}\n"
    if action == "audit":
        _need(args, "d")
        rep = shareapp.secrecy_audit(scheme, args.d)
        led.assert_true("secrecy", rep.passed)
        params["d"] = args.d
        return params, led, rep.to_json(), ("pass" if rep.passed else "fail") + "\n"
    if action == "advantage":
        adv = shareapp.advantage(scheme)
        led.assert_rel("advantage_equals_correlation", adv, "==", scheme.psi.correlation(scheme.f))
        results: dict = {"advantage": fmt(adv)}
        if args.trials:
            mc = shareapp.monte_carlo(scheme, args.trials, args.seed or 0)
            led.assert_true("monte_carlo_3_sigma", mc["within_3_sigma"])
            results["monte_carlo"] = {k: fmt(v) if isinstance(v, Fraction) else v for k, v in mc.items()}
            params.update(trials=args.trials, seed=args.seed or 0)
        return params, led, results, fmt(adv) + "\n"
    raise UsageError(f"unknown share action {action!r}")  # pragma: no cover - argparse choices


def cmd_cert(args, inputs) -> Result:
    f = _target(args, inputs)
    rep = certificate_complexity(f)
    led = PropertyLedger()
    led.assert_rel("C_is_max", rep.C, "==", max(rep.C_minus, rep.C_plus))
    return {"function": f.to_json()}, led, rep.to_json(), f"{rep.C} {rep.C_minus} {rep.C_plus}\n"


def cmd_report(args, inputs) -> Result:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if args.file:
        data = _load_json(args.file, inputs)
        w.writerow(["name", "status", "lhs", "relation", "rhs"])
        for rec in data.get("properties", []):
            w.writerow([rec["name"], rec["status"], rec.get("lhs", ""), rec.get("relation", ""), rec.get("rhs", "")])
        params: dict = {"source": args.file}
    else:
        f = _target(args, inputs)
        w.writerow(["d", "eps_opt", "eps_opt_approx"])
        for d in range(f.n + 1):
            e = degree_certificate(f, d).epsilon
            w.writerow([d, fmt(e), f"~{float(e):.6f}"])
        params = {"function": f.to_json()}
    text = buf.getvalue()
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    return params, PropertyLedger(), {"csv": text}, text


COMMANDS: Dict[str, Callable] = {
    "adeg": cmd_adeg,
    "eps": cmd_eps,
    "dual": cmd_dual,
    "compose": cmd_compose,
    "omega": cmd_omega,
    "amplify": cmd_amplify,
    "reduce": cmd_reduce,
    "correct": cmd_correct,
    "masscheck": cmd_masscheck,
    "share": cmd_share,
    "cert": cmd_cert,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dualdeg", description="Exact approximate-degree and dual-witness workbench.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "share":
            p.add_argument("action", choices=["make", "split", "reconstruct", "audit", "advantage"])
            p.add_argument("--scheme")
            p.add_argument("--secret", type=int, choices=[-1, 1])
            p.add_argument("--trials", type=int)
        p.add_argument("--fn")
        p.add_argument("--file")
        p.add_argument("--n", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--eps", type=_rational)
        p.add_argument("--k", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--R", type=int)
        p.add_argument("--M", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--out")
        p.add_argument("--check", action="store_true")
        if name == "compose":
            p.add_argument("--outer")
            p.add_argument("--inner")
        if name == "dual":
            p.add_argument("--one-sided", action="store_true")
        if name == "reduce":
            p.add_argument("--clauses", help="monotone DNF for F_R, e.g. '1,2;2,3'")
            p.add_argument("--width", type=int)
        if name == "amplify":
            p.add_argument("--schedule", action="store_true")
        if name == "report":
            p.add_argument("--csv")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = args.out or f"{args.cmd}_manifest.json"
    inputs: Dict[str, str] = {}
    start = time.perf_counter()
    try:
        params, led, results, text = COMMANDS[args.cmd](args, inputs)
    except Exception as exc:  # surfaced verbatim, manifest still written
        led = PropertyLedger()
        led.assert_true("command_completed", False, note=f"{type(exc).__name__}: {exc}")
        manifest = build_manifest(args.cmd, {}, led, inputs, time.perf_counter() - start, {"error": str(exc)})
        write_json_atomic(out, manifest)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    manifest = build_manifest(args.cmd, params, led, inputs, time.perf_counter() - start, results)
    write_json_atomic(out, manifest)
    sys.stdout.write(text)
    return led.exit_code()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
