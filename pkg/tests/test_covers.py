import pytest

from origami_veech.covers import (FLAVORS, Flavor, branch_vertices, build_dp,
                                  build_w, classify_flavors, is_hyperelliptic,
                                  solve_cocycle, verify_theorem)
from origami_veech.modular import (NotGeneralPosition, NotOdd, TorsionConfig,
                                   sl2_group_order)
from origami_veech.orbit import orbit
from origami_veech.origami import (are_isomorphic, genus, minus_one_lifts,
                                   stratum, translations)
from origami_veech.perms import perm_order


def test_flavor_validation():
    assert len(FLAVORS) == 4
    assert len({(f.eps_x, f.eps_y) for f in FLAVORS}) == 4
    with pytest.raises(ValueError):
        Flavor(2, 0)


def test_build_w():
    w = build_w()
    assert w.degree == 8
    assert genus(w) == 3


def test_solve_cocycle_sums():
    cfg = TorsionConfig(3, 1, 0)
    c00 = solve_cocycle(cfg, Flavor(0, 0))
    assert sum(c00.lambda_x[a][0] for a in range(3)) % 2 == 0
    assert sum(c00.lambda_y[0][b] for b in range(3)) % 2 == 0
    c11 = solve_cocycle(cfg, Flavor(1, 1))
    assert sum(c11.lambda_x[a][0] for a in range(3)) % 2 == 1
    assert sum(c11.lambda_y[0][b] for b in range(3)) % 2 == 1


def test_build_dp_invariants():
    for n in range(3, 10):
        cfg = TorsionConfig(n, 1, 0)
        o = build_dp(cfg, Flavor(0, 0))
        assert o.degree == 2 * n * n
        st = stratum(o)
        assert st.genus == 3 and st.zero_orders == (1, 1, 1, 1)
        assert branch_vertices(cfg, o) == sorted(set(cfg.points()))


def test_build_dp_examples():
    assert genus(build_dp(TorsionConfig(5, 1, 0), Flavor(1, 0))) == 3
    o = build_dp(TorsionConfig(3, 1, 0), Flavor(0, 0))
    assert o.degree == 18
    ts = translations(o)
    assert len(ts) == 2
    assert sorted(perm_order(t) for t in ts) == [1, 2]


def test_cocycle_solution_independence():
    for (n, p, q), flavor in (((5, 1, 1), Flavor(0, 0)),
                              ((3, 1, 0), Flavor(1, 1))):
        cfg = TorsionConfig(n, p, q)
        o1 = build_dp(cfg, flavor)
        o2 = build_dp(cfg, flavor, reverse_vars=True)
        assert are_isomorphic(o1, o2)


def test_classify_flavors():
    for cfg in (TorsionConfig(3, 1, 0), TorsionConfig(5, 1, 1)):
        reports = classify_flavors(cfg)
        hyp = [r for r in reports if r["hyperelliptic"]]
        assert len(hyp) == 1
        assert hyp[0]["lift_totals"] == [0, 8]
        for r in reports:
            if not r["hyperelliptic"]:
                assert r["lift_totals"] == [4, 4]
        assert sum(r["distinguished"] for r in reports) == 1
        assert not next(r for r in reports if r["distinguished"])["hyperelliptic"]
    with pytest.raises(NotOdd):
        classify_flavors(TorsionConfig(4, 1, 0))


def test_flavor_isomorphism_regression():
    cfg = TorsionConfig(3, 1, 0)
    o10 = build_dp(cfg, Flavor(1, 0))
    o01 = build_dp(cfg, Flavor(0, 1))
    assert not are_isomorphic(o10, o01)


def test_two_s_orbits_regression():
    # n = 3 has two rotation orbits of 3-torsion configurations; the two
    # origamis lie on the same curve but are not isomorphic as origamis
    o1 = build_dp(TorsionConfig(3, 1, 0), Flavor(0, 0))
    o2 = build_dp(TorsionConfig(3, 1, 1), Flavor(0, 0))
    assert not are_isomorphic(o1, o2)


def test_nonhyperelliptic_flavors_share_orbit():
    cfg = TorsionConfig(3, 1, 0)
    reports = classify_flavors(cfg)
    key_sets = []
    for r in reports:
        if r["hyperelliptic"]:
            continue
        g = orbit(build_dp(cfg, Flavor(*r["flavor"])))
        key_sets.append(frozenset(g.keys))
    assert len(key_sets) == 3
    assert key_sets[0] == key_sets[1] == key_sets[2]
    assert len(key_sets[0]) == 18


def test_hyperellipticity_orbit_invariant():
    cfg = TorsionConfig(3, 1, 0)
    reports = classify_flavors(cfg)
    hyp_flavor = next(r["flavor"] for r in reports if r["hyperelliptic"])
    g = orbit(build_dp(cfg, Flavor(*hyp_flavor)))
    assert len(g.keys) == 6
    for rep in g.reps:
        assert is_hyperelliptic(rep)


def test_verify_theorem_310():
    report = verify_theorem(TorsionConfig(3, 1, 0))
    assert report["pass"]
    assert report["computed_index"] == 18
    assert report["predicted_index"] == 18
    assert report["predicted_index"] == sl2_group_order(6) // 8
    assert report["pointed_equivalent"]
    assert report["index3_check"]
    assert report["membership_checks"] == {"-I in Gamma": True,
                                           "T in Gamma": False}
    assert report["chosen_flavor"] in [r["flavor"]
                                       for r in report["flavor_reports"]]


def test_verify_theorem_preconditions():
    with pytest.raises(NotOdd):
        verify_theorem(TorsionConfig(4, 1, 0))
    with pytest.raises(NotGeneralPosition):
        verify_theorem(TorsionConfig(5, 1, 2))


def test_dp_lift_structure():
    o = build_dp(TorsionConfig(3, 1, 0), Flavor(0, 0))
    lifts = minus_one_lifts(o)
    assert len(lifts) == 2
    assert sorted(l.total_fixed for l in lifts) == [4, 4]
