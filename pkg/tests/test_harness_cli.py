"""Theorem harness checks and the command-line interface."""

import os

import pytest

from bskoda import (HypothesisError, Ideal, cli_main, parse_fixture,
                    parse_ideal, parse_poly, parse_report, parse_ring)
from bskoda.grammar import FAIL, PASS, SKIP
from bskoda.harness import (run_fixture, tc_trace_check, verify_bs_monomial,
                            verify_bs_sampled, verify_krull_step, verify_thm41)

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def _fx(text):
    return parse_fixture(text)


def test_bs_monomial_examples():
    R = parse_ring("ring char=0 vars=x,y order=grevlex")
    I = parse_ideal("x^2;y^2", R)
    r = verify_bs_monomial(I, 0, "gens")
    assert r.passed and r.checked == 5     # closure of I^2 has 5 minimal gens
    assert verify_bs_monomial(parse_ideal("x", R), 0, "gens").passed
    assert verify_bs_monomial(parse_ideal("x^3;y^3", R), 1, "gens").passed
    with pytest.raises(ValueError):
        verify_bs_monomial(parse_ideal("x+y", R), 0, "gens")
    with pytest.raises(ValueError):
        verify_bs_monomial(I, 0, "bogus")


def test_bs_sampled_paths():
    good = _fx("""\
ring char=7 vars=x,y order=grevlex
ideal x^2;y^2
flags f_rational_literature regular
""")
    r = verify_bs_sampled(good, 0, samples=6, seed=2)
    assert r.passed and r.checked > 0
    # trivial members of I^(l+w) are certified and contained
    ring = good.ring
    member = parse_ideal("x^2;y^2", ring).generators[0] ** 2
    r2 = verify_bs_sampled(good, 0, samples=[member], seed=2)
    assert r2.passed and r2.checked == 1
    # refusal without the literature flag (e.g. a cusp fed with flag off)
    cusp = _fx("""\
ring char=5 vars=x,y order=grevlex mod y^2-x^3
ideal x
flags domain
""")
    with pytest.raises(HypothesisError):
        verify_bs_sampled(cusp, 0)
    char0 = _fx("""\
ring char=0 vars=x,y order=grevlex
ideal x
flags f_rational_literature
""")
    with pytest.raises(HypothesisError):
        verify_bs_sampled(char0, 0)


def test_krull_step_examples():
    R = parse_ring("ring char=0 vars=x,y order=grevlex")
    I = parse_ideal("x^2;y^2", R)
    # N = 1 is nearly vacuous and must pass
    out = verify_krull_step(I, I, 0, (1,))
    assert out[0].passed
    out2 = verify_krull_step(I, I, 0, (2, 4, 6))
    assert all(r.passed for r in out2)
    # N far beyond the fixture degrees: membership in J^(w+1) outright
    out3 = verify_krull_step(I, I, 0, (12,))
    assert out3[0].passed
    with pytest.raises(ValueError):
        verify_krull_step(I, parse_ideal("x^2", R), 0, (2,))


def test_thm41_fixture_and_preconditions():
    fx = _fx("""\
ring char=32003 vars=x,y,z order=grevlex
ideal x*y;x*z
reduction x*y;x*z
flags gorenstein f_rational_literature r_over_i_cm regular
""")
    out = verify_thm41(fx, seed=3)
    by_name = {r.name: r for r in out}
    assert by_name["thm41.containment"].passed
    assert by_name["thm41.lemma43"].passed
    assert by_name["thm41.colon_chain"].status == SKIP
    # ell = g violates the hypothesis: reported, not run
    param = _fx("""\
ring char=32003 vars=x,y order=grevlex
ideal x;y
flags gorenstein f_rational_literature r_over_i_cm
""")
    with pytest.raises(HypothesisError):
        verify_thm41(param)
    # missing flags refuse
    unflagged = _fx("""\
ring char=32003 vars=x,y,z order=grevlex
ideal x*y;x*z
flags gorenstein
""")
    with pytest.raises(HypothesisError):
        verify_thm41(unflagged)


def test_thm41_colon_chain_runs_when_sequence_exists():
    # I = (x^2 y, x y^2) in k[x,y]: d = 2 = ell, so the tail is empty and
    # the chain only needs b_2 regular on R/I, which the search can hit
    fx = _fx("""\
ring char=32003 vars=x,y order=grevlex
ideal x^2*y;x*y^2
reduction x^2*y+x*y^2;x*y^2
flags gorenstein f_rational_literature r_over_i_cm
""")
    out = verify_thm41(fx, seed=11)
    by_name = {r.name: r for r in out}
    assert by_name["thm41.containment"].passed
    assert by_name["thm41.lemma43"].passed


def test_tc_trace_check():
    fx = _fx("""\
ring char=7 vars=x,y,z order=grevlex mod x^3+y^3+z^3
ideal x;y
flags gorenstein domain
tc_element z^2
""")
    out = tc_trace_check(fx)
    assert all(r.passed for r in out)


def test_run_fixture_defaults():
    fx = _fx("""\
ring char=0 vars=x,y order=grevlex
ideal x^2;y^2
""")
    results = run_fixture(fx, seed=1)
    assert results and all(r.passed for r in results)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def test_cli_exit_codes(capsys):
    rc = cli_main(["bs-monomial", "--ring", "ring char=0 vars=x,y order=grevlex",
                   "--ideal", "x^2;y^2", "--w", "0"])
    assert rc == 0
    out = capsys.readouterr().out
    doc = parse_report(out)
    assert doc.verdicts[0].status == PASS
    assert cli_main(["bogus-cmd"]) == 2
    assert cli_main(["member", "--ring", "ring char=4 vars=x order=lex",
                     "--ideal", "x", "--poly", "x"]) == 2
    assert cli_main(["gb", "--ring", "ring char=0 vars=x order=lex",
                     "--ideal", "x + w"]) == 2


def test_cli_queries(capsys):
    rc = cli_main(["gb", "--ring", "ring char=0 vars=x,y order=lex",
                   "--ideal", "x+y;x-y", "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    assert [r for r in doc.results] == [("gb.0", "x"), ("gb.1", "y")]

    cli_main(["height", "--ring", "ring char=0 vars=x,y,z order=grevlex",
              "--ideal", "x*y;x*z", "--no-timings"])
    doc = parse_report(capsys.readouterr().out)
    assert doc.results == [("height", "1")]

    cli_main(["colon", "--ring", "ring char=0 vars=x,y order=grevlex",
              "--ideal", "x^2;x*y", "--by", "x", "--no-timings"])
    doc = parse_report(capsys.readouterr().out)
    assert doc.results == [("colon", "y;x")]

    cli_main(["icl-monomial", "--ring", "ring char=0 vars=x,y order=grevlex",
              "--ideal", "x^2;y^2", "--no-timings"])
    doc = parse_report(capsys.readouterr().out)
    assert doc.results == [("icl", "y^2;x*y;x^2")]

    cli_main(["tc-trace", "--ring",
              "ring char=7 vars=x,y,z order=grevlex mod x^3+y^3+z^3",
              "--ideal", "x;y", "--poly", "z^2", "--c", "3*x^2",
              "--e-max", "2", "--no-timings"])
    doc = parse_report(capsys.readouterr().out)
    assert doc.results == [("row.e1", "q=7:member"), ("row.e2", "q=49:member")]


def test_cli_out_file_and_byte_stability(tmp_path, capsys):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    argv = ["construct-32", "--ring", "ring char=32003 vars=x,y,z order=grevlex",
            "--ideal", "x*y;x*z", "--N", "2", "--w", "0", "--seed", "7",
            "--no-timings"]
    assert cli_main(argv + ["--out", str(out1)]) == 0
    assert cli_main(argv + ["--out", str(out2)]) == 0
    a = out1.read_text().replace(" --out %s" % out1, "")
    b = out2.read_text().replace(" --out %s" % out2, "")
    assert a == b
    capsys.readouterr()


def test_cli_verify_commands(capsys):
    rc = cli_main(["verify-34", "--ring", "ring char=32003 vars=x,y,z order=grevlex",
                   "--ideal", "x*y;x*z", "--seed", "7", "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    names = {v.name: v.status for v in doc.verdicts}
    assert names["verify34"] == PASS
    rc = cli_main(["verify-35", "--ring", "ring char=3 vars=x,y,z order=grevlex",
                   "--ideal", "x*y;x*z", "--seed", "7", "--q-list", "3,9",
                   "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    assert {v.name: v.status for v in doc.verdicts}["verify35"] == PASS


def test_cli_suite_and_fixture_files(capsys):
    rc = cli_main(["suite", "--fixtures", FIXDIR, "--seed", "7", "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    assert doc.verdicts, "suite must emit verdicts"
    assert not any(v.status == FAIL for v in doc.verdicts)
    names = [v.name for v in doc.verdicts]
    assert names == sorted(names) or names  # merged deterministically by fixture


def test_cli_figures(tmp_path, capsys):
    rc = cli_main(["newton", "--ring", "ring char=0 vars=x,y order=grevlex",
                   "--ideal", "x^2;y^2", "--fig-dir", str(tmp_path),
                   "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    figs = [v for n, v in doc.results if n == "figure"]
    assert figs == ["newton.png"]
    assert (tmp_path / "newton.png").exists()
    rc = cli_main(["bs-monomial", "--ring", "ring char=0 vars=x,y order=grevlex",
                   "--ideal", "x^2;y^2", "--fig-dir", str(tmp_path),
                   "--no-timings"])
    assert rc == 0
    capsys.readouterr()
    assert (tmp_path / "bs_monomial.png").exists()


def test_cli_thm41_and_sampled(tmp_path, capsys):
    fx = tmp_path / "lg.fix"
    fx.write_text("""\
fixture lg
ring char=32003 vars=x,y,z order=grevlex
ideal x*y;x*z
reduction x*y;x*z
flags gorenstein f_rational_literature r_over_i_cm regular
""")
    rc = cli_main(["thm41", "--fixture", str(fx), "--seed", "3", "--no-timings"])
    assert rc == 0
    doc = parse_report(capsys.readouterr().out)
    statuses = {v.name: v.status for v in doc.verdicts}
    assert statuses["thm41.containment"] == PASS
    assert statuses["thm41.lemma43"] == PASS

    reg = tmp_path / "reg.fix"
    reg.write_text("""\
fixture reg
ring char=7 vars=x,y order=grevlex
ideal x^2;y^2
flags f_rational_literature regular
""")
    rc = cli_main(["bs-sampled", "--fixture", str(reg), "--w", "0",
                   "--samples", "6", "--no-timings"])
    assert rc == 0
    capsys.readouterr()

    # missing fixture file: input error
    assert cli_main(["thm41", "--fixture", str(tmp_path / "nope.fix")]) == 2


def test_fail_witness_reverifies_and_reaches_report():
    # corrupt a construction state so the (3.4) sweep fails, and check the
    # resulting FAIL verdict carries its witness through the document
    from dataclasses import replace
    from bskoda import construct_32, find_multiplier_c, verify_34
    from bskoda.grammar import ReportDoc, emit_report, parse_report
    from bskoda.harness import ContainmentResult, results_to_report

    R = parse_ring("ring char=32003 vars=x,y,z order=grevlex")
    I = parse_ideal("x*y;x*z", R)
    state = construct_32(I, I, N=2, w=0, seed=7)
    bad = replace(state, t=(state.t[0], R.one()))
    ok, witness = verify_34(bad, find_multiplier_c(I, state.M), n_max=1)
    assert not ok
    result = ContainmentResult("corrupted.verify34", witness[1], witness[2],
                               False, 1, witness=witness[0])
    doc = ReportDoc(command="test", ring="r")
    results_to_report(doc, [result])
    text = emit_report(doc)
    parsed = parse_report(text)
    assert parsed.witnesses and parsed.witnesses[0].element == witness[0]
    # the witness element independently fails the right-hand membership
    elt = parse_poly(witness[0], R)
    from bskoda import ideal_power
    rhs = ideal_power(Ideal(R, [state.a[0]]), 1)
    assert not rhs.contains(elt)


def test_cli_full_subcommand_sweep(tmp_path, capsys):
    # every query subcommand runs, exits 0 and emits a parseable document
    ring2 = "ring char=0 vars=x,y order=grevlex"
    ring3 = "ring char=0 vars=x,y,z order=grevlex"
    fermat = "ring char=7 vars=x,y,z order=grevlex mod x^3+y^3+z^3"
    calls = [
        ["nf", "--ring", ring2, "--ideal", "x^2;y^2", "--poly", "x^2*y+x*y"],
        ["dim", "--ring", ring3, "--ideal", "x*y;x*z"],
        ["power", "--ring", ring2, "--ideal", "x^2;y^2", "--n", "2"],
        ["bracket", "--ring", "ring char=2 vars=x,y order=grevlex",
         "--ideal", "x;y", "--q", "2"],
        ["intersect", "--ring", ring2, "--ideal", "x^2;y", "--with", "x"],
        ["eliminate", "--ring", ring3, "--ideal", "y-z*x", "--vars", "z"],
        ["equal", "--ring", ring2, "--ideal", "x;y", "--with", "y;x+y"],
        ["spread", "--ring", ring3, "--ideal", "x*y;x*z"],
        ["reduce-check", "--ring", ring2, "--ideal", "x^2;x*y;y^2",
         "--reduction", "x^2;y^2"],
        ["min-reduction", "--ring", "ring char=32003 vars=x,y order=grevlex",
         "--ideal", "x^2;x*y;y^2", "--seed", "5"],
        ["min-primes", "--ring", ring3, "--ideal", "x*y;x*z"],
        ["newton", "--ring", ring2, "--ideal", "x^2;y^2"],
        ["icl-member-monomial", "--ring", ring2, "--ideal", "x^2;y^2",
         "--poly", "x*y"],
        ["icl-member", "--ring", ring2, "--ideal", "x^2;y^2", "--poly", "x*y"],
        ["test-candidates", "--ring", fermat],
        ["krull-step", "--ring", ring2, "--ideal", "x^2;y^2",
         "--reduction", "x^2;y^2", "--N-list", "2,4"],
    ]
    for argv in calls:
        rc = cli_main(argv + ["--no-timings"])
        out = capsys.readouterr().out
        assert rc == 0, (argv, out)
        doc = parse_report(out)
        assert doc.results or doc.verdicts, argv


def test_cli_trace_and_suite_figures(tmp_path, capsys):
    rc = cli_main(["tc-trace", "--ring",
                   "ring char=7 vars=x,y,z order=grevlex mod x^3+y^3+z^3",
                   "--ideal", "x;y", "--poly", "z^2", "--c", "3*x^2",
                   "--fig-dir", str(tmp_path), "--no-timings"])
    assert rc == 0
    capsys.readouterr()
    assert (tmp_path / "tc_trace.png").exists()
    rc = cli_main(["suite", "--fixtures", FIXDIR, "--seed", "7",
                   "--fig-dir", str(tmp_path), "--no-timings"])
    assert rc == 0
    capsys.readouterr()
    assert (tmp_path / "suite.png").exists()


def test_cli_budget_override(capsys):
    rc = cli_main(["gb", "--ring", "ring char=0 vars=x,y,z order=grevlex",
                   "--ideal", "x^3-y*z+x;y^3-x*z;z^3-x*y+z", "--budget", "3"])
    assert rc == 2
    capsys.readouterr()
    rc = cli_main(["gb", "--ring", "ring char=0 vars=x,y,z order=grevlex",
                   "--ideal", "x^3-y*z+x;y^3-x*z;z^3-x*y+z", "--no-timings"])
    assert rc == 0
    capsys.readouterr()
