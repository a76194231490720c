"""Command-line front end.

Exit codes: 0 pass / planar, 1 counterexample / non-planar, 2 usage or
capability error.  Every command prints one canonical JSON report.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import theorems
from .gf2r import CapabilityError, DomainError, UsageError, build_field, poly_str
from .planarity import MonomialSpec, check_witness, decide
from .report import FormatError, Report, serialize
from .search import ProgressError, emit_result, progress_path, result_report, \
    search_all_degrees, search_quadratic

JOBS_ENV = "PLANAR2_JOBS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar2", description="Planar monomials over GF(2^r).")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in reports")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("field", help="describe GF(2^r)")
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--show-modulus", action="store_true")

    c = sub.add_parser("check", help="decide planarity of a*x^t")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    grp = c.add_mutually_exclusive_group(required=True)
    grp.add_argument("--a-enc", type=int, help="coefficient as an encoding")
    grp.add_argument("--a-pow", type=int, help="coefficient as generator^M")
    c.add_argument("--method", default="auto",
                   choices=["auto", "definition", "lemma_mono", "lemma_mono2", "matrix_rank"])

    v = sub.add_parser("verify", help="run a theorem verifier")
    vs = v.add_subparsers(dest="verifier", required=True, parser_class=_Parser)
    vs.add_parser("theorem1").add_argument("--k", type=int, required=True)
    vs.add_parser("fermat").add_argument("--Q", type=int, required=True)
    vs.add_parser("prop-odd").add_argument("--r", type=int, required=True)
    for name in ("identities", "root-d"):
        sp = vs.add_parser(name)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--omega", type=int, choices=[0, 1], default=0,
                        help="which primitive cube root of unity (by encoding order)")
    vs.add_parser("minpoly").add_argument("--Q", type=int, required=True)
    nd = vs.add_parser("no-de")
    nd.add_argument("--k", type=int, required=True)
    nd.add_argument("--a-enc", type=int, required=True)
    cv = vs.add_parser("curve")
    cv.add_argument("--r", type=int, required=True)
    cv.add_argument("--J", type=int, required=True)
    cv.add_argument("--a-enc", type=int)
    wg = vs.add_parser("weil-gap")
    wg.add_argument("--r", type=int, required=True)
    wg.add_argument("--J", type=int, required=True)

    s = sub.add_parser("search", help="exhaustive planar-monomial search")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--mode", choices=["all", "quadratic"], required=True)
    s.add_argument("--out")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--jobs", type=int)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--large-memory", action="store_true", help="allow quadratic search up to r = 24")
    s.add_argument("--long-running", action="store_true", help="allow all-degree search up to r = 14")
    return p


def resolve_jobs(flag: int | None) -> int:
    """--jobs, else $PLANAR2_JOBS, else the CPU count."""
    if flag is not None:
        jobs = flag
    elif os.environ.get(JOBS_ENV):
        try:
            jobs = int(os.environ[JOBS_ENV])
        except ValueError:
            raise UsageError(f"{JOBS_ENV} must be an integer") from None
    else:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise UsageError("worker count must be positive")
    return jobs


def _field_for(args) -> int:
    """Degree of the field a verifier works in."""
    name = args.verifier
    if name in ("theorem1", "no-de"):
        return 6 * args.k
    if name in ("fermat", "minpoly"):
        if args.Q < 2 or args.Q & (args.Q - 1):
            raise UsageError(f"--Q must be a power of 2 greater than 1, got {args.Q}")
        return 3 * (args.Q.bit_length() - 1)
    if name in ("identities", "root-d"):
        return args.m
    return args.r


def _run_verify(args) -> tuple[dict, int, int]:
    name = args.verifier
    if name == "theorem1":
        rep = theorems.verify_theorem1(args.k)
    elif name == "fermat":
        rep = theorems.verify_fermat_cubes(args.Q)
    elif name == "prop-odd":
        rep = theorems.verify_prop_odd(args.r)
    elif name == "identities":
        rep = theorems.verify_factorization_identities(args.m, omega_choice=args.omega)
    elif name == "root-d":
        rep = theorems.verify_root_d(args.m, omega_choice=args.omega)
    elif name == "minpoly":
        rep = theorems.verify_minpoly_structure(args.Q)
    elif name == "no-de":
        rep = theorems.verify_no_de_solutions(args.k, args.a_enc)
    elif name == "curve":
        rep = theorems.verify_curve(args.r, args.J, args.a_enc)
    else:
        ok = theorems.weil_gap_check(args.J, args.r)
        rep = theorems.VerifierReport("weil_gap", {"r": args.r, "J": args.J}, ok, 1,
                                      None if ok else {"J": args.J, "r": args.r})
    return rep.to_dict(args.timing), 0 if rep.passed else 1, _field_for(args)


def _run_check(args) -> tuple[dict, int]:
    ctx = build_field(args.r)
    a = args.a_enc if args.a_enc is not None else ctx.pow(ctx.gen, args.a_pow)
    spec = MonomialSpec(args.r, args.t, a)
    verdict = decide(spec, args.method, ctx)
    if not check_witness(verdict, ctx, t=spec.t_reduced, a=a):
        raise RuntimeError("internal error: witness failed re-verification")
    payload = {"r": args.r, "t": args.t, "t_reduced": spec.t_reduced, "a_enc": a,
               **verdict.to_dict()}
    return payload, 0 if verdict.planar else 1


def dispatch(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "field":
            ctx = build_field(args.r)
            payload = {"q": ctx.q}
            if args.show_modulus:
                payload["modulus"] = poly_str(ctx.modulus)
            report = Report("field", ctx.descriptor(), payload, 0)
        elif args.command == "check":
            payload, code = _run_check(args)
            report = Report("check", build_field(args.r).descriptor(), payload, code)
        elif args.command == "verify":
            payload, code, r = _run_verify(args)
            report = Report(f"verify {args.verifier}", build_field(r).descriptor(), payload, code)
        else:
            return _run_search(args, stdout, stderr)
        stdout.write(serialize(report))
        return report.exit_status
    except (UsageError, CapabilityError, DomainError, FormatError, ProgressError) as exc:
        print(f"planar2: error: {exc}", file=stderr)
        return 2


def _run_search(args, stdout, stderr) -> int:
    jobs = resolve_jobs(args.jobs)
    if args.resume and not args.out:
        raise UsageError("--resume needs --out")
    progress = progress_path(args.out) if args.out else None
    run = search_quadratic if args.mode == "quadratic" else search_all_degrees
    extra = {"large_memory": args.large_memory} if args.mode == "quadratic" \
        else {"long_running": args.long_running}
    result = run(args.r, jobs=jobs, progress=progress, resume=args.resume, **extra)
    report = result_report(result, args.timing)
    data = serialize(report, args.format)
    if args.out:
        emit_result(result, args.out, args.format, args.timing)
        print(f"planar2: wrote {args.out} ({len(result.findings)} findings)", file=stderr)
    else:
        stdout.write(data)
    return report.exit_status


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
