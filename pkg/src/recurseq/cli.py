"""Command-line front end.

Sequences are given as JSON sequence-spec documents (a file path, ``-`` for
stdin, or the JSON text inline)::

    {"type": "linear", "coeffs": [1, 1], "initial": [0, 1]}
    {"type": "nonlinear", "k": 1, "sign": 1, "poly": [{"exps": [2], "c": 1}], "initial": [1, 1]}
    {"type": "polynomial", "poly": [1, 0, 1]}

Polynomials given directly on the command line are comma-separated
ascending coefficients, e.g. ``--g 1,-1,-1`` for 1 - x - x^2.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 bound exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import divisors as dv
from . import modular, recurrences, topology, transforms
from .errors import BoundExceeded, CapExceeded, DomainError, VerificationFailure
from .exact_algebra import IntPoly, p_adic_valuation
from .recurrences import LinearRecurrence, NonlinearRecurrence, SpecError

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_poly(text: str) -> IntPoly:
    try:
        return IntPoly(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise UsageError(f"bad polynomial {text!r}: expected comma-separated integers") from None


def format_poly(p: IntPoly) -> str:
    return ",".join(str(c) for c in p.coeffs) or "0"


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def load_source(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read spec {arg!r}: {exc.strerror}") from None
    return recurrences.load_spec(text)


def _need_linear(src) -> LinearRecurrence:
    if not isinstance(src, LinearRecurrence):
        raise UsageError("this subcommand needs a linear sequence spec")
    return src


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _checkpoints(text: str) -> tuple[int, ...]:
    vals = tuple(int(t) for t in text.split(",") if t.strip())
    if not vals or any(v < 2 for v in vals):
        raise argparse.ArgumentTypeError("checkpoints must be integers >= 2")
    return vals


def _cert_dict(c) -> dict:
    return {
        "modulus": c.modulus,
        "preperiod": c.preperiod,
        "period": c.period,
        "cycle_residue_states": c.cycle_residue_states,
    }


def _rec_dict(rec: LinearRecurrence) -> dict:
    return {"coeffs": list(rec.coeffs), "initial": list(rec.initial), "order": rec.order}


def _table(d: dict) -> str:
    width = max((len(k) for k in d), default=0)
    lines = []
    for k, v in d.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines)


# --- subcommand handlers: each returns (payload, exit code) ----------------


def cmd_terms(a):
    src = load_source(a.spec)
    return {"source": src.describe(), "terms": recurrences.evaluate(src, a.n_max)}, EXIT_OK


def cmd_gf(a):
    rec = _need_linear(load_source(a.spec))
    gf = recurrences.generating_function(rec)
    return {"numerator": format_poly(gf.numerator), "denominator": format_poly(gf.denominator)}, EXIT_OK


def cmd_minimal(a):
    rec = _need_linear(load_source(a.spec))
    m = recurrences.minimal_order(rec)
    return {"input_order": rec.order, **_rec_dict(m)}, EXIT_OK


def cmd_degenerate(a):
    rec = recurrences.minimal_order(_need_linear(load_source(a.spec)))
    v = recurrences.is_degenerate(rec)
    return {"verdict": v.verdict.value, "witness_cyclotomic_index": v.witness, "minimal_order": rec.order}, EXIT_OK


def cmd_phi_b(a):
    h = transforms.phi_b(parse_poly(a.g), a.b)
    return {"g": format_poly(parse_poly(a.g)), "b": a.b, "phi_b": format_poly(h)}, EXIT_OK


def cmd_subseq(a):
    rec = _need_linear(load_source(a.spec))
    sub = transforms.subsequence_recurrence(rec, a.c, a.b)
    out = _rec_dict(sub)
    try:
        lost = recurrences.minimal_order(sub).order < sub.order
    except DomainError:
        lost = True
    out["flags"] = ["MINIMALITY_LOST"] if lost else []
    return out, EXIT_OK


def cmd_period(a):
    return _cert_dict(modular.period_mod(load_source(a.spec), a.m, a.cap)), EXIT_OK


def cmd_null_divisor(a):
    return {"m": a.m, "null_divisor": modular.is_null_divisor(load_source(a.spec), a.m, a.cap)}, EXIT_OK


def cmd_prime_index(a):
    src = load_source(a.spec)
    try:
        idx = modular.prime_index(src, a.p, a.j_cap, a.cap)
    except CapExceeded as exc:
        return {"p": a.p, "index": None, "status": "CAP_EXCEEDED", "j_cap": a.j_cap, "note": exc.note}, EXIT_BOUND
    return {"p": a.p, "index": idx, "status": "OK", "note": modular.coefficient_gcd_note(src)}, EXIT_OK


def _bound(a, src):
    return a.bound or dv.default_prime_bound(src)


def _report_exit(report):
    return (report.to_dict(), EXIT_BOUND if report.errors else EXIT_OK)


def cmd_divisors(a):
    src = load_source(a.spec)
    report = dv.enumerate_prime_divisors(src, _bound(a, src), a.checkpoints, a.cap, a.jobs)
    return _report_exit(report)


def cmd_verify(a):
    if a.target == "schur":
        if a.poly is not None:
            f = parse_poly(a.poly)
        else:
            src = load_source(a.spec) if a.spec else None
            if not isinstance(src, recurrences.IntPolynomialSequence):
                raise UsageError("verify schur needs --poly or a polynomial spec")
            f = src.poly
        report = dv.schur_profile(f, a.bound or 5000, a.checkpoints, a.jobs)
    elif a.target == "linear":
        rec = _need_linear(load_source(a.spec))
        report = dv.verify_infinitude(rec, _bound(a, rec), a.checkpoints, a.trace, a.cap, a.jobs)
    elif a.target == "generalized":
        rec = load_source(a.spec)
        if not isinstance(rec, NonlinearRecurrence):
            raise UsageError("verify generalized needs a nonlinear sequence spec")
        report = dv.verify_generalized(rec, _bound(a, rec), a.checkpoints, a.growth_window, a.cap, a.jobs)
    else:
        src = load_source(a.spec)
        report = dv.coprime_prime_divisors(src, a.m, _bound(a, src), a.checkpoints, a.cap, a.jobs)
    return _report_exit(report)


def cmd_scaling(a):
    rec = _need_linear(load_source(a.spec))
    if a.t is None:
        rep = transforms.scaling_candidate(rec, a.s)
        if a.n_max is not None:
            rep = transforms.verify_scaling(rec, a.s, rep.t, a.n_max)
    else:
        rep = transforms.verify_scaling(rec, a.s, a.t, a.n_max if a.n_max is not None else 20)
    return rep.to_dict(), EXIT_VERIFY if rep.base_case_ok is False else EXIT_OK


def cmd_strip_prime(a):
    rec = _need_linear(load_source(a.spec))
    spec = transforms.strip_prime(rec, a.p, a.l_margin, a.cap, a.j_cap)
    out = spec.to_dict()
    out.update(p=a.p, j=spec.step, t=spec.offset, r=p_adic_valuation(a.p, spec.divisor_extracted))
    return out, EXIT_OK


def cmd_topology(a):
    C = topology.CongruenceClass
    if a.op == "intersect":
        c1, c2 = (C(*_pair(x)) for x in (a.first, a.second))
        r = topology.intersect(c1, c2)
        return {"first": str(c1), "second": str(c2), "intersection": str(r) if r else "EMPTY"}, EXIT_OK
    if a.op == "witness":
        primes = parse_int_list(a.primes) if a.primes else []
        return {"primes": primes, "witness": topology.euclid_witness(primes)}, EXIT_OK
    src = load_source(a.spec)
    return _cert_dict(topology.continuity_certificate(src, a.b, a.cap)), EXIT_OK


def _pair(text: str) -> tuple[int, int]:
    vals = parse_int_list(text)
    if len(vals) != 2 or vals[1] < 1:
        raise UsageError(f"congruence class must be 'a,b' with b >= 1, got {text!r}")
    return vals[0], vals[1]


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--cap", type=_positive, default=None,
                        help="period-scan state cap (default 1e8 or $RECURSEQ_STATE_CAP)")

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--spec", required=True, help="sequence-spec JSON: path, '-' or inline text")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--bound", type=_positive, default=None,
                        help="prime bound (default 5000; 500 for order >= 3)")
    bounds.add_argument("--checkpoints", type=_checkpoints, default=dv.DEFAULT_CHECKPOINTS)
    bounds.add_argument("--jobs", type=_positive, default=1)

    p = argparse.ArgumentParser(
        prog="recurseq",
        description="Prime divisors of recurrence sequences.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, parents=(), **kw):
        sp = sub.add_parser(name, parents=[common, *parents], **kw)
        sp.set_defaults(func=func)
        return sp

    add("terms", cmd_terms, [spec], help="exact terms").add_argument("--n-max", type=_nonneg, default=20)
    add("gf", cmd_gf, [spec], help="generating function f/g")
    add("minimal", cmd_minimal, [spec], help="reduce to minimal order")
    add("degenerate", cmd_degenerate, [spec], help="exact degeneracy test")
    sp = add("phi-b", cmd_phi_b, help="phi_b transform of a characteristic polynomial")
    sp.add_argument("--g", required=True, help="g as ascending coefficients, g(0) = 1")
    sp.add_argument("--b", type=_positive, required=True)
    sp = add("subseq", cmd_subseq, [spec], help="recurrence of a_{c+bn}")
    sp.add_argument("--c", type=_nonneg, required=True)
    sp.add_argument("--b", type=_positive, required=True)
    add("period", cmd_period, [spec], help="preperiod/period mod m").add_argument("--m", type=_positive, required=True)
    add("null-divisor", cmd_null_divisor, [spec], help="is m a null divisor").add_argument(
        "--m", type=_positive, required=True)
    sp = add("prime-index", cmd_prime_index, [spec], help="index of a prime")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--j-cap", type=_positive, default=modular.DEFAULT_J_CAP)
    add("divisors", cmd_divisors, [spec, bounds], help="enumerate prime divisors")

    sp = add("verify", cmd_verify, [bounds], help="theorem verifiers")
    sp.add_argument("target", choices=("schur", "linear", "generalized", "coprime"))
    sp.add_argument("--spec", default=None)
    sp.add_argument("--poly", default=None, help="schur: polynomial as ascending coefficients")
    sp.add_argument("--m", type=_positive, default=1, help="coprime: the modulus m")
    sp.add_argument("--growth-window", type=_positive, default=8)
    sp.add_argument("--trace", action="store_true", help="linear: include the reduction trace")

    sp = add("scaling", cmd_scaling, [spec], help="coefficient scaling candidate / check")
    sp.add_argument("--s", type=_positive, default=1)
    sp.add_argument("--t", type=_positive, default=None)
    sp.add_argument("--n-max", type=_nonneg, default=None)

    sp = add("strip-prime", cmd_strip_prime, [spec], help="subsequence prime to p")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--l-margin", type=_positive, default=1)
    sp.add_argument("--j-cap", type=_positive, default=modular.DEFAULT_J_CAP)

    sp = add("topology", cmd_topology, help="congruence-class utilities")
    sp.add_argument("op", choices=("intersect", "witness", "continuity"))
    sp.add_argument("first", nargs="?", help="intersect: class 'a,b'")
    sp.add_argument("second", nargs="?", help="intersect: class 'a,b'")
    sp.add_argument("--primes", default=None, help="witness: comma-separated primes")
    sp.add_argument("--spec", default=None)
    sp.add_argument("--b", type=_positive, default=None)
    return p


def _emit(payload, fmt, out, command=None):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif command == "phi-b":
        out.write(payload["phi_b"] + "\n")
    elif "divisors" in payload and "checkpoints" in payload:
        out.write(dv.DivisorReport.from_dict(payload).to_table() + "\n")
    else:
        out.write(_table(payload) + "\n")


def _check_topology_args(a):
    if a.command != "topology":
        return
    if a.op == "intersect" and not (a.first and a.second):
        raise UsageError("topology intersect needs two classes 'a,b'")
    if a.op == "continuity" and (a.spec is None or a.b is None):
        raise UsageError("topology continuity needs --spec and --b")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if a.cap is None and os.environ.get("RECURSEQ_STATE_CAP"):
        a.cap = modular.default_state_cap()
    try:
        _check_topology_args(a)
        payload, code = a.func(a)
    except (UsageError, SpecError) as exc:
        print(f"recurseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        payload = {"status": exc.code, "message": str(exc), "witness": exc.witness}
        if exc.report is not None:
            payload["report"] = exc.report.to_dict()
        code = EXIT_VERIFY
    except (BoundExceeded, CapExceeded) as exc:
        payload = {"status": exc.code, "message": str(exc)}
        code = EXIT_BOUND
    except DomainError as exc:
        print(f"recurseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, a.format, out, a.command)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
