import math

import pytest

from rcong.oracle import LEMMA_IDS, LEMMAS, Bounds, UnknownLemma, Verdict, recheck, verify, verify_all

SMALL = Bounds(max_m=4, max_value=3, max_k=3, max_moduli=2)


def test_lemma_ids_fixed_order():
    assert LEMMA_IDS == (
        "L2.3", "L2.4", "L2.5", "L2.7i", "L2.7ii", "T2.8", "T2.9-order", "L2.10i", "L2.10ii",
        "L2.10iii", "L2.10iv", "L2.10v", "L2.11", "L2.12", "L2.13", "T2.14-psi",
    )


def test_bounds_parse():
    assert Bounds.parse("m=6,v=5") == Bounds(max_m=6, max_value=5)
    assert Bounds.parse("m=2,v=3,k=1,n=2") == Bounds(2, 3, 1, 2)
    for bad in ("m=0", "x=3", "m", "m=two", "v=-1"):
        with pytest.raises(ValueError):
            Bounds.parse(bad)
    with pytest.raises(ValueError):
        Bounds(max_m=0)


def test_unknown_lemma():
    with pytest.raises(UnknownLemma):
        verify("bogus-id")


def test_l213_confirmed():
    rep = verify("L2.13", Bounds(max_m=8, max_value=6))
    assert rep.verdict is Verdict.CONFIRMED and rep.counterexamples == ()
    assert rep.cases_checked == 8 * 13**3


def test_l27i_literal_counterexample():
    rep = verify("L2.7i", Bounds(max_m=6, max_value=8), limit=None)
    assert rep.verdict is Verdict.FALSIFIED
    assert len(rep.counterexamples) == rep.counterexample_count
    hits = [ce for ce in rep.counterexamples if (ce["m"], ce["r1"], ce["r2"]) == (5, 2, 7)]
    assert hits and all(recheck("L2.7i", ce) is False for ce in hits)
    (alt,) = rep.alternatives
    assert alt.reading == "mod-m" and alt.verdict is Verdict.CONFIRMED


def test_t29_counterexamples_only_off_coprime_points():
    rep = verify("T2.9-order", Bounds(max_m=12), limit=None)
    assert rep.verdict is Verdict.FALSIFIED
    first = rep.counterexamples[0]
    assert (first["m"], first["r"], first["true_order"]) == (4, 2, 2)
    bad = {(ce["m"], ce["r"]) for ce in rep.counterexamples}
    for m in range(1, 13):
        for r in range(m):
            assert ((m, r) in bad) == (math.gcd(r, m) > 1 and r != 0)
    assert rep.alternatives[0].verdict is Verdict.CONFIRMED


def test_counterexamples_recheck_as_failures():
    for rep in verify_all(SMALL):
        for r in (rep, *rep.alternatives):
            assert (r.verdict is Verdict.FALSIFIED) == bool(r.counterexamples) == (r.counterexample_count > 0)
            for ce in r.counterexamples:
                assert recheck(r.lemma, ce, r.reading) is False


def test_limit_caps_list_not_count():
    full = verify("T2.14-psi", SMALL, limit=None)
    capped = verify("T2.14-psi", SMALL, limit=3)
    assert capped.counterexample_count == full.counterexample_count > 3
    assert capped.counterexamples == full.counterexamples[:3]
    assert verify("T2.14-psi", SMALL, limit=0).counterexamples == ()


@pytest.mark.parametrize("lemma", [lid for lid in LEMMA_IDS
                                   if any(p.batch for p in LEMMAS[lid].headline.parts)])
def test_batch_matches_scalar_path(lemma):
    fast = verify(lemma, SMALL, limit=None)
    slow = verify(lemma, SMALL, limit=None, use_batch=False)
    assert fast == slow


def test_batch_reports_failures_in_grid_order():
    # a deliberately wrong predicate pair shows the vectorised path keeps order and counts
    from rcong.oracle import _claim_pairs, _pairwise
    import numpy as np

    def check(m, a, b, r1, c, d, r2):
        return np.ones((a.shape[0], c.shape[1]), dtype=bool), (a + c) % 3 != 0

    got = [ex for _, _, found in _pairwise(SMALL, None, check) for ex in found]
    want = [p for p in _claim_pairs(SMALL) if (p[1] + p[4]) % 3 == 0]
    assert got == want


def test_deterministic():
    assert verify_all(SMALL) == verify_all(SMALL)
    assert [r.to_dict() for r in verify_all(SMALL)] == [r.to_dict() for r in verify_all(SMALL)]


def test_monotone_under_larger_bounds():
    small = {r.lemma: r for r in verify_all(SMALL)}
    big = {r.lemma: r for r in verify_all(Bounds(max_m=6, max_value=5, max_k=4, max_moduli=3))}
    for lid, rep in small.items():
        if rep.verdict is Verdict.FALSIFIED:
            assert big[lid].verdict is Verdict.FALSIFIED


def test_unit_bounds():
    reports = verify_all(Bounds(1, 1, 1, 1))
    verdicts = {r.lemma: r.verdict for r in reports}
    # mod 1 every index names the same class, so only the set-level reading of psi fails
    assert {lid for lid, v in verdicts.items() if v is Verdict.FALSIFIED} == {"T2.14-psi"}
    psi_rep = reports[-1]
    assert all(ce["m"] == 1 and ce["r1"] != ce["r2"] for ce in psi_rep.counterexamples)


def test_equivalence_reading_of_class_lemma_fails_for_nontrivial_r():
    rep = verify("L2.5", SMALL, limit=None)
    assert rep.verdict is Verdict.CONFIRMED
    (alt,) = rep.alternatives
    assert alt.verdict is Verdict.FALSIFIED
    assert all(ce["r"] % ce["m"] != 0 for ce in alt.counterexamples)
