import itertools
import os
import subprocess

import pytest

import mpj


def words(alphabet, n):
    return ("".join(t) for t in itertools.product(alphabet, repeat=n))


def test_regex_membership_and_counts():
    e = mpj.parse_regex("(a+b)*ac+")
    assert e.alphabet == "abc"
    assert mpj.member(e, "bac")
    assert mpj.member(e, "acc")
    assert not mpj.member(e, "ac" + "b")
    assert mpj.count_words(e, 3) == [0, 0, 1, 3]


def test_equality_and_classification():
    e = mpj.parse_regex("(a+b)*ac+")
    assert mpj.equal(e, e) is None
    cex = mpj.equal(e, mpj.shuffle("abc", "ac"))
    assert cex is not None and not mpj.member(e, cex)

    c = mpj.classify(e)
    assert c["monoid_size"] == 6
    assert c["varieties"] == {"A": True, "DA": True, "J": False}
    assert c["stable"]["quasi_J"] is False

    c = mpj.classify(mpj.shuffle("ab", "ab"))
    assert c["monoid_size"] == 5
    assert c["varieties"]["J"] is True


def test_feedback_sweep_reduction():
    g = mpj.feedback_sweep("abc", 4)
    assert g.positions == [2, 1, 3, 2, 4, 3]
    assert mpj.gamma_eval(g, "abac") == "baabca"
    k = mpj.sweep_target()
    source = mpj.parse_regex("(a+b)*ac+")
    for n in range(5):
        gn = mpj.feedback_sweep("abc", n)
        for w in words("abc", n):
            assert mpj.member(source, w) == mpj.member(k, mpj.gamma_eval(gn, w))


def test_selector_round_trip_and_agreement():
    s = mpj.SelectorFn.random(1, 2, seed=11)
    d = mpj.selector_to_dict(s)
    assert d["k"] == 1 and d["n"] == 2
    s2 = mpj.selector_from_dict(d)
    assert s2.table == s.table

    g = mpj.selector_program(s)
    lang = mpj.selector_language(1)
    for w in words("01", (s.k + 1) * s.n):
        assert mpj.selector_member(s, w) == mpj.member(lang, mpj.gamma_eval(g, w))


def test_product_program_agreement():
    e = mpj.threshold_block("abc", ["ab", "c"], 2)
    p = mpj.compile_tddo(e, 3)
    for w in words("abc", 3):
        assert mpj.recognizes(p, w) == mpj.member(e, w)
    comp = mpj.product_component(p, 0)
    assert comp.n == 3


def test_run_check_and_suites():
    r = mpj.run_check({"check_id": "sweep-reduction", "parameters": {"n_max": "3"}})
    assert r["verdict"] == "pass"
    assert r["instances_checked"] == 40
    assert r["counterexample"] is None

    for r in mpj.run_suite("mutation"):
        assert r["verdict"] == "fail"
        assert r["counterexample"] is not None


def test_errors():
    with pytest.raises(mpj.Error):
        mpj.parse_regex("(ab)*")
    with pytest.raises(mpj.Error):
        mpj.run_check({"check_id": "nope"})
    with pytest.raises(mpj.Error):
        mpj.run_check({})


@pytest.mark.skipif("MPJ_CLI" not in os.environ, reason="CLI path not provided")
def test_cli():
    cli = os.environ["MPJ_CLI"]

    r = subprocess.run([cli, "program", "sweep", "--n", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "2 1 3 2 4 3" in r.stdout

    r = subprocess.run([cli, "lang", "member", "(a+b)*ac+", "bac"],
                       capture_output=True, text=True)
    assert r.returncode == 0

    r = subprocess.run([cli, "verify", "--suite", "mutation"],
                       capture_output=True, text=True)
    assert r.returncode == 1

    r = subprocess.run([cli, "verify", "--suite", "nope"],
                       capture_output=True, text=True)
    assert r.returncode == 2
