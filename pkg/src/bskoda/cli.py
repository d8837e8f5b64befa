"""Command-line front end.

Every invocation emits one structured report document (stdout or --out)
and exits 0 when no verdict failed, 1 on any FAIL, 2 on usage or input
errors.  `--fig-dir` additionally renders matplotlib figures next to the
report for the commands that have a natural picture.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import figures
from .closures import (find_multiplier_c, icl_member_general,
                       jacobian_test_candidates, tc_trace)
from .construction import (ConstructionError, construct_32, verify_34,
                           verify_35)
from .grammar import (PASS, FAIL, SKIP, ParseError, ReportDoc, emit_report,
                      ideal_text, parse_fixture, parse_ideal, parse_poly,
                      parse_ring, ring_text)
from .groebner import BudgetExceededError, set_default_budget
from .harness import (HypothesisError, results_to_report, run_fixture,
                      verify_bs_monomial, verify_bs_sampled, verify_krull_step,
                      verify_thm41)
from .ideals import (bracket_power, colon, eliminate, ideal_equal,
                     ideal_power, intersect)
from .invariants import (INFINITE_HEIGHT, analytic_spread, height, is_reduction,
                         krull_dim, minimal_reduction, monomial_min_primes)
from .newton import monomial_icl, monomial_icl_member, newton_hull

SUBCOMMANDS = ("gb nf member dim power bracket colon intersect eliminate equal "
               "height spread reduce-check min-reduction min-primes newton "
               "icl-monomial icl-member-monomial icl-member tc-trace "
               "test-candidates construct-32 verify-34 verify-35 bs-monomial "
               "bs-sampled krull-step thm41 suite").split()


def _build_parser():
    top = argparse.ArgumentParser(
        prog="bskoda",
        description="Exact ideal-theoretic toolkit and Briancon-Skoda "
                    "containment verifier.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, help_, ring=True, ideal=True, **extra):
        p = sub.add_parser(name, help=help_)
        if ring:
            p.add_argument("--ring", required=True,
                           help="ring grammar, e.g. 'ring char=0 vars=x,y order=grevlex'")
        if ideal:
            p.add_argument("--ideal", required=True,
                           help="semicolon-separated generators")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--no-timings", action="store_true",
                       help="omit timing lines (byte-stable output)")
        p.add_argument("--fig-dir", help="also render figures into this directory")
        p.add_argument("--budget", type=int, default=None,
                       help="reduction step budget override")
        p.add_argument("--assume-equidimensional", action="store_true",
                       help="assert equidimensionality for multi-relation quotients")
        return p

    add("gb", "reduced Groebner basis of an ideal")
    p = add("nf", "normal form of a polynomial")
    p.add_argument("--poly", required=True)
    p = add("member", "ideal membership of a polynomial")
    p.add_argument("--poly", required=True)
    add("dim", "Krull dimension of ring/ideal")
    p = add("power", "ordinary ideal power")
    p.add_argument("--n", type=int, required=True)
    p = add("bracket", "Frobenius bracket power")
    p.add_argument("--q", type=int, required=True)
    p = add("colon", "colon ideal I : J")
    p.add_argument("--by", required=True, help="generators of the second ideal")
    p = add("intersect", "intersection of two ideals")
    p.add_argument("--with", dest="second", required=True)
    p = add("eliminate", "eliminate variables from an ideal")
    p.add_argument("--vars", required=True, help="comma-separated variables")
    p = add("equal", "equality of two ideals")
    p.add_argument("--with", dest="second", required=True)
    add("height", "height of an ideal")
    add("spread", "analytic spread of an ideal")
    p = add("reduce-check", "Northcott-Rees reduction test")
    p.add_argument("--reduction", required=True)
    p.add_argument("--n-max", type=int, default=8)
    p = add("min-reduction", "search for a minimal reduction")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--retries", type=int, default=64)
    add("min-primes", "minimal primes of a monomial ideal")
    add("newton", "Newton polyhedron of a monomial ideal")
    add("icl-monomial", "integral closure of a monomial ideal")
    p = add("icl-member-monomial", "monomial integral-closure membership")
    p.add_argument("--poly", required=True, help="a monomial")
    p = add("icl-member", "general integral-closure membership (stabilization)")
    p.add_argument("--poly", required=True)
    p.add_argument("--n-max", type=int, default=8)
    p = add("tc-trace", "tight-closure membership trace over Frobenius powers")
    p.add_argument("--poly", required=True)
    p.add_argument("--c", required=True, help="multiplier polynomial")
    p.add_argument("--e-max", type=int, default=2)
    add("test-candidates", "Jacobian multiplier candidates", ideal=False)
    p = add("construct-32", "randomized parameter construction + verification")
    p.add_argument("--reduction", default=None)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--retries", type=int, default=64)
    p.add_argument("--lambda", dest="lambda_file", default=None,
                   help="file of lines '<i> <poly;...>': a prime for each index")
    p.add_argument("--r-over-i-equidimensional", action="store_true")
    p = add("verify-34", "containment sweep (construction + multiplier)")
    p.add_argument("--reduction", default=None)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--n-max", type=int, default=2)
    p = add("verify-35", "Frobenius containment sweep on the construction")
    p.add_argument("--reduction", default=None)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--q-list", default=None, help="comma-separated prime powers")
    p = add("bs-monomial", "regular-ring containment check (monomial path)")
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--mode", choices=("gens", "spread"), default="gens")
    p = add("bs-sampled", "sampled containment check on a flagged fixture",
            ring=False, ideal=False)
    p.add_argument("--fixture", required=True, help="fixture file path")
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--samples", type=int, default=8)
    p = add("krull-step", "closure members inside J^(w+1) + m^N")
    p.add_argument("--reduction", default=None)
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--N-list", default="2,4,6")
    p = add("thm41", "height < spread containment and proof sub-claims",
            ring=False, ideal=False)
    p.add_argument("--fixture", required=True)
    p.add_argument("--checks", default="containment,lemma43,colon_chain")
    p = add("suite", "run the whole fixture campaign", ring=False, ideal=False)
    p.add_argument("--fixtures", required=True, help="directory of .fix files")
    return top


def _load_ring_ideal(args):
    ring = parse_ring(args.ring,
                      assume_equidimensional=getattr(args, "assume_equidimensional", False))
    I = parse_ideal(args.ideal, ring)
    return ring, I


def _fmt_height(h):
    return "infinity" if h == INFINITE_HEIGHT else str(h)


def _read_fixture(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_fixture(fh.read(), os.path.splitext(os.path.basename(path))[0])
    except OSError as exc:
        raise ParseError("unreadable fixture file: %s" % exc, 1)


def _read_lambdas(path, ring):
    lambdas = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            idx, _, rest = line.partition(" ")
            prime = parse_ideal(rest.strip(), ring, line_no)
            lambdas.setdefault(int(idx), []).append(prime)
    return lambdas


def _figure_result(doc, path):
    if path:
        doc.add_result("figure", os.path.basename(path))


def _run(args, doc):
    cmd = args.command
    set_default_budget(args.budget)

    if cmd == "gb":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        for k, g in enumerate(I.groebner().generators):
            doc.add_result("gb.%d" % k, g)
        return

    if cmd == "nf":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        f = parse_poly(args.poly, ring)
        doc.add_result("nf", I.groebner().normal_form(f))
        return

    if cmd == "member":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        f = parse_poly(args.poly, ring)
        doc.add_result("member", "true" if I.contains(f) else "false")
        return

    if cmd == "dim":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        doc.add_result("dim", krull_dim(I))
        return

    if cmd == "power":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        doc.add_result("power", ideal_text(ideal_power(I, args.n)))
        return

    if cmd == "bracket":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        doc.add_result("bracket", ideal_text(bracket_power(I, args.q)))
        return

    if cmd == "colon":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        J = parse_ideal(args.by, ring)
        doc.add_result("colon", ideal_text(colon(I, J)))
        return

    if cmd == "intersect":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        J = parse_ideal(args.second, ring)
        doc.add_result("intersect", ideal_text(intersect(I, J)))
        return

    if cmd == "eliminate":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        names = [v for v in args.vars.split(",") if v]
        doc.add_result("eliminate", ideal_text(eliminate(I, names)))
        return

    if cmd == "equal":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        J = parse_ideal(args.second, ring)
        doc.add_result("equal", "true" if ideal_equal(I, J) else "false")
        return

    if cmd == "height":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        doc.add_result("height", _fmt_height(height(I)))
        return

    if cmd == "spread":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        doc.add_result("spread", analytic_spread(I))
        return

    if cmd == "reduce-check":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        J = parse_ideal(args.reduction, ring)
        v = is_reduction(J, I, args.n_max)
        doc.add_result("is_reduction", "true" if v.is_reduction else "false")
        doc.add_result("reduction_number",
                       v.reduction_number if v.is_reduction else "exhausted@%d" % v.n_max)
        return

    if cmd == "min-reduction":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        ell = args.ell if args.ell is not None else analytic_spread(I)
        J = minimal_reduction(I, ell, seed=args.seed, retries=args.retries)
        if J is None:
            doc.add_result("min_reduction", "failure:retries_exhausted")
        else:
            doc.add_result("min_reduction", ideal_text(J))
        return

    if cmd == "min-primes":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        for k, P in enumerate(monomial_min_primes(I)):
            doc.add_result("prime.%d" % k, ideal_text(P))
        return

    if cmd == "newton":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        hull = newton_hull(I)
        for k, (normal, rhs) in enumerate(hull.facets):
            doc.add_result("facet.%d" % k,
                           "+".join("%d*e%d" % (a, i) for i, a in enumerate(normal) if a)
                           + ">=%d" % rhs)
        for k, v in enumerate(hull.vertices):
            doc.add_result("vertex.%d" % k, ",".join(str(e) for e in v))
        if args.fig_dir:
            _figure_result(doc, figures.render_newton(hull, args.fig_dir, "newton",
                                                      names=ring.names))
        return

    if cmd == "icl-monomial":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        closure = monomial_icl(I)
        doc.add_result("icl", ideal_text(closure))
        if args.fig_dir:
            hull = newton_hull(I)
            pts = [g.lead_exps() for g in closure.groebner().generators]
            _figure_result(doc, figures.render_newton(hull, args.fig_dir,
                                                      "icl_monomial", pts,
                                                      names=ring.names))
        return

    if cmd == "icl-member-monomial":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        f = parse_poly(args.poly, ring)
        if not f.is_term:
            raise ParseError("--poly must be a single monomial", 1)
        doc.add_result("member", "true" if monomial_icl_member(f.lead_exps(), I)
                       else "false")
        return

    if cmd == "icl-member":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        f = parse_poly(args.poly, ring)
        v = icl_member_general(f, I, args.n_max)
        doc.add_result("icl_member",
                       "member(n=%d)" % v.witness_n if v.member
                       else "unknown(n_max=%d)" % v.n_max)
        return

    if cmd == "tc-trace":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        x = parse_poly(args.poly, ring)
        c = parse_poly(args.c, ring)
        trace = tc_trace(x, I, c, args.e_max)
        for e, q, member in trace.rows:
            doc.add_result("row.e%d" % e, "q=%d:%s" % (q, "member" if member else "out"))
        if args.fig_dir:
            _figure_result(doc, figures.render_trace(trace, args.fig_dir, "tc_trace"))
        return

    if cmd == "test-candidates":
        ring = parse_ring(args.ring)
        doc.ring = ring_text(ring)
        for k, c in enumerate(jacobian_test_candidates(ring)):
            doc.add_result("candidate.%d" % k, c)
        return

    if cmd in ("construct-32", "verify-34", "verify-35"):
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        J = parse_ideal(args.reduction, ring) if args.reduction else I
        lambdas = None
        if cmd == "construct-32" and args.lambda_file:
            lambdas = _read_lambdas(args.lambda_file, ring)
        retries = getattr(args, "retries", 64)
        state = construct_32(
            I, J, N=args.N, w=args.w, lambdas=lambdas, seed=args.seed,
            retries=retries,
            r_over_i_equidimensional=getattr(args, "r_over_i_equidimensional", False))
        for k, (ai, ti, bi) in enumerate(zip(state.a, state.t, state.b), start=1):
            doc.add_result("a.%d" % k, ai)
            doc.add_result("t.%d" % k, ti)
            doc.add_result("b.%d" % k, bi)
        doc.add_result("M", state.M)
        for item in sorted(state.item_status):
            status = state.item_status[item]
            doc.add_verdict("construct32.%s" % item,
                            SKIP if status == "skipped" else
                            (PASS if status == "verified" else FAIL),
                            checked=1,
                            detail="skip:not_asserted" if status == "skipped" else "")
        if cmd == "verify-34":
            c = find_multiplier_c(I, state.M)
            ok, wit = verify_34(state, c, args.n_max)
            doc.add_verdict("verify34", PASS if ok else FAIL, checked=1)
            if not ok:
                doc.add_witness("verify34", wit[0], wit[1], wit[2])
        if cmd == "verify-35":
            c = find_multiplier_c(I, state.M)
            p = ring.char
            qs = ([int(q) for q in args.q_list.split(",")] if args.q_list
                  else [p, p * p])
            ok, wit = verify_35(state, c, qs, args.r)
            doc.add_verdict("verify35", PASS if ok else FAIL, checked=len(qs))
            if not ok:
                doc.add_witness("verify35", wit[0], wit[1], wit[2])
        return

    if cmd == "bs-monomial":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        result = verify_bs_monomial(I, args.w, args.mode)
        results_to_report(doc, [result])
        if args.fig_dir and ring.arity == 2:
            ell = len(I.min_exps()) if args.mode == "gens" else analytic_spread(I)
            A = ideal_power(I, ell + args.w)
            hull = newton_hull(A)
            closure = monomial_icl(A)
            target = ideal_power(I, args.w + 1)
            pts = [g.lead_exps() for g in closure.groebner().generators]
            inside = [target.contains(g) for g in closure.groebner().generators]
            _figure_result(doc, figures.render_newton(hull, args.fig_dir,
                                                      "bs_monomial", pts, inside,
                                                      names=ring.names))
        return

    if cmd == "bs-sampled":
        fixture = _read_fixture(args.fixture)
        doc.ring = ring_text(fixture.ring)
        result = verify_bs_sampled(fixture, args.w, args.samples, args.seed)
        results_to_report(doc, [result])
        return

    if cmd == "krull-step":
        ring, I = _load_ring_ideal(args)
        doc.ring = ring_text(ring)
        if args.reduction:
            J = parse_ideal(args.reduction, ring)
        else:
            J = minimal_reduction(I, analytic_spread(I), seed=args.seed) or I
        N_list = tuple(int(n) for n in args.N_list.split(","))
        results_to_report(doc, verify_krull_step(I, J, args.w, N_list, args.seed))
        return

    if cmd == "thm41":
        fixture = _read_fixture(args.fixture)
        doc.ring = ring_text(fixture.ring)
        checks = tuple(c for c in args.checks.split(",") if c)
        results_to_report(doc, verify_thm41(fixture, checks, args.seed))
        return

    if cmd == "suite":
        fixture_dir = args.fixtures
        if not os.path.isdir(fixture_dir):
            raise ParseError("not a fixture directory: %s" % fixture_dir, 1)
        paths = sorted(p for p in os.listdir(fixture_dir)
                       if p.endswith(".fix"))
        if not paths:
            raise ParseError("no .fix files in %s" % fixture_dir, 1)
        all_results = []
        for p in paths:
            fixture = _read_fixture(os.path.join(fixture_dir, p))
            t0 = time.time()
            results = run_fixture(fixture, seed=args.seed)
            doc.add_timing("fixture.%s" % fixture.name, time.time() - t0)
            for r in results:
                r.name = "%s.%s" % (fixture.name, r.name)
            all_results.extend(results)
        results_to_report(doc, all_results)
        if args.fig_dir:
            _figure_result(doc, figures.render_verdict_summary(
                doc.verdicts, args.fig_dir, "suite"))
        return

    raise ParseError("unknown subcommand %r" % cmd, 1)


def cli_main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    doc = ReportDoc(command="bskoda " + " ".join(argv), seed=args.seed)
    t0 = time.time()
    try:
        _run(args, doc)
    except (ParseError, HypothesisError, ConstructionError, BudgetExceededError,
            ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    finally:
        set_default_budget(None)
    doc.add_timing("total", time.time() - t0)
    text = emit_report(doc, include_timings=not args.no_timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if doc.failed else 0


def main():
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
