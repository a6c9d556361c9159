import json
from fractions import Fraction

import pytest

from hyperjack.config import DEFAULT, SMALL, GridConfig, load_grid
from hyperjack.identities import (
    REGISTRY,
    CapExceeded,
    IdentityCase,
    compare,
    grid_cases,
    omega_plus,
    omega_plus_integral,
    run_grid,
    schur_expand_vandermonde,
    strip_timings,
    summarize,
    vanishing_schur_coefficients,
    verify_identity,
)
from hyperjack.hyperdet import LambdaGenerator, det, hankel, toeplitz, umbral
from hyperjack.laurent import vandermonde
from hyperjack.partitions import partitions_of
from hyperjack.symfunc import Alphabet, jacobi_trudi, schur, schur_laurent

EXPECTED_IDS = {
    "HT-SIGNS", "D2H", "TRANS-SCHUR", "K1-EXAMPLE", "GEN-MATSUMOTO", "Q-KAPPA", "MATSUMOTO",
    "HANKEL-JACK", "INV-ALPHA", "KERNEL-DUAL", "LTOP", "BRANCHING", "SKEW-HANKEL", "Y-PLUS-Z",
    "SCHUR-COEFF", "ALT-TO-DET", "OMEGA-PLUS", "PAT-MINUS-X", "VAND-JACK", "FINAL-SKEW", "DYSON",
}


def test_registry_ids():
    assert set(REGISTRY) == EXPECTED_IDS
    for ident in REGISTRY.values():
        assert ident.statement


def test_every_id_has_default_cases():
    for id_ in REGISTRY:
        assert REGISTRY[id_].cases(DEFAULT), id_


def test_d2h_example_values():
    gen = LambdaGenerator(Alphabet.finite([1, 2]))
    lhs = umbral(vandermonde(2) ** 2, gen) / 2
    rhs = det(hankel(1, 2, None, gen))
    assert lhs == rhs == -7
    case = verify_identity("D2H", {"n": 2, "k": 1, "mode": "evaluated", "Y": ["1", "2"]})
    assert case.verdict == "equal" and not case.degenerate


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ht_signs_n1(k):
    for v in ([0], [2], [-1]):
        case = verify_identity("HT-SIGNS", {"n": 1, "k": k, "v": v, "direction": "H=T"})
        assert case.verdict == "equal"


def test_schur_coeff_example():
    case = verify_identity("SCHUR-COEFF", {"n": 2, "k": 1, "lam": [2]})
    assert case.verdict == "equal" and case.ratio == "1"
    case = verify_identity("SCHUR-COEFF", {"n": 2, "k": 1, "lam": [1, 1]})
    assert case.verdict == "equal"


def test_schur_expand_examples():
    assert schur_expand_vandermonde(2, 1) == {(2,): 1, (1, 1): -3}
    exp = schur_expand_vandermonde(3, 1, "both")
    assert set(exp) <= set(partitions_of(6, 3))
    assert exp[(4, 2)] == 1
    for n in (1, 2, 3):
        for k in (1, 2):
            assert all(sum(lam) == k * n * (n - 1) for lam in schur_expand_vandermonde(n, k))


def test_schur_expand_paths_agree():
    for n in (1, 2, 3):
        a = schur_expand_vandermonde(n, 1, "alternant")
        assert a == schur_expand_vandermonde(n, 1, "scalar")
    assert schur_expand_vandermonde(2, 2, "alternant") == schur_expand_vandermonde(2, 2, "scalar")


def test_schur_expand_reconstructs_power():
    from hyperjack.symfunc import to_poly

    for n, k in [(2, 1), (3, 1), (2, 2)]:
        total = vandermonde(n).zero()
        for lam, c in schur_expand_vandermonde(n, k).items():
            total = total + to_poly(schur(lam), n) * c
        assert total == vandermonde(n) ** (2 * k)


def test_schur_expand_cap_and_vanishing():
    with pytest.raises(CapExceeded):
        schur_expand_vandermonde(5, 1)
    with pytest.raises(CapExceeded):
        schur_expand_vandermonde(2, 3)
    with pytest.raises(ValueError):
        schur_expand_vandermonde(2, 1, "guess")
    vanish = vanishing_schur_coefficients(3, 1)
    support = schur_expand_vandermonde(3, 1)
    assert set(vanish) | set(support) == set(partitions_of(6, 3))
    assert not set(vanish) & set(support)
    assert vanish == [(6,), (5, 1)]


def test_omega_plus_two_routes():
    for n in (1, 2, 3):
        for lam in partitions_of(3, n):
            v = tuple(lam) + (0,) * (n - len(lam))
            g = schur_laurent(v)
            assert omega_plus(g) == jacobi_trudi(v) == omega_plus_integral(g)


def test_omega_plus_literal_form_differs_off_rectangles():
    case = verify_identity("OMEGA-PLUS", {"n": 2, "v": [2, 1]})
    assert case.verdict == "equal"
    assert case.notes["literal_det_form_matches"] is False
    case = verify_identity("OMEGA-PLUS", {"n": 2, "v": [1, 1]})
    assert case.notes["literal_det_form_matches"] is True


def test_compare_reports_ratio():
    a = schur((2, 1))
    assert compare(a, a) == (True, Fraction(1), False)
    assert compare(a * -2, a) == (False, Fraction(-2), False)
    assert compare(a, schur((3,))) == (False, None, False)
    assert compare(0, Fraction(0)) == (True, None, True)


def test_wrong_sign_is_detected_as_constant():
    gen = LambdaGenerator(Alphabet.formal())
    ratios = set()
    for v in ([0, 0, 0], [0, 0, 1], [0, 2, -1]):
        h = det(hankel(1, 3, v, gen))
        t = det(toeplitz(1, 3, [x + 2 for x in v], gen))  # sign (-1)^3 deliberately dropped
        equal, ratio, _ = compare(h, t)
        assert not equal
        ratios.add(ratio)
    assert ratios == {-1}


def _case(verdict, ratio=None, degenerate=False):
    return IdentityCase("LTOP", {}, verdict, ratio=ratio, degenerate=degenerate)


def test_summarize_modes():
    s = summarize("LTOP", [_case("unequal", "-1"), _case("unequal", "-1"), _case("equal", "1", True)])
    assert s["status"] == "constant" and s["constant"] == "-1" and s["ok"]
    s = summarize("LTOP", [_case("unequal", "-1"), _case("unequal", "2")])
    assert s["status"] == "inconsistent" and not s["ok"]
    s = summarize("LTOP", [_case("unequal", None)])
    assert s["status"] == "inconsistent" and not s["ok"]
    s = summarize("LTOP", [_case("equal", "1")] * 2)
    assert s["status"] == "exact" and not s["ok"]  # fewer than 3 nondegenerate cases
    s = summarize("DYSON", [IdentityCase("DYSON", {}, "unequal", ratio="2")])
    assert s["status"] == "constant" and not s["ok"]  # exact mode required
    s = summarize("LTOP", [_case("skipped")])
    assert s["status"] == "empty" and s["skipped"] == 1


def test_skipped_case():
    cfg = GridConfig(max_weight=3)
    case = verify_identity("MATSUMOTO", {"n": 2, "p": 2, "k": 1}, cfg)
    assert case.verdict == "skipped" and "cap" in case.reason


def test_run_grid_empty():
    report = run_grid([], SMALL)
    assert report["cases"] == [] and report["summary"] == {} and report["ok"]


def test_run_grid_accounting_and_determinism():
    ids = ["DYSON", "HT-SIGNS", "LTOP", "OMEGA-PLUS"]
    a = run_grid(ids, SMALL)
    b = run_grid(ids, SMALL)
    assert len(a["cases"]) == len(grid_cases(ids, SMALL))
    assert json.dumps(strip_timings(a), sort_keys=True) == json.dumps(strip_timings(b), sort_keys=True)
    assert [c["id"] for c in a["cases"]] == [i for i, _ in grid_cases(ids, SMALL)]
    assert all("seconds" in c for c in a["cases"])
    assert a["ok"]


def test_run_grid_threads_same_report():
    ids = ["DYSON", "K1-EXAMPLE"]
    a = strip_timings(run_grid(ids, SMALL, threads=1))
    b = strip_timings(run_grid(ids, SMALL, threads=2))
    assert a == b


def test_unknown_id():
    with pytest.raises(KeyError):
        grid_cases(["NOPE"], SMALL)


def test_small_grid_passes():
    report = run_grid(None, SMALL)
    assert report["ok"], {k: v for k, v in report["summary"].items() if not v["ok"]}


def test_grid_config_json(tmp_path):
    data = SMALL.to_json()
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(data))
    assert load_grid(str(path)) == SMALL
    assert load_grid("default") == DEFAULT
    with pytest.raises(ValueError):
        GridConfig.from_json({"bogus": 1})
