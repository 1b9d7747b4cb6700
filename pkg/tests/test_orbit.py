import random

from helpers import conjugate, random_matz, random_origami, random_perm
from origami_veech import sl2
from origami_veech.covers import Flavor, build_dp, build_w
from origami_veech.modular import TorsionConfig, in_gamma_uu
from origami_veech.orbit import (act_generator, act_word, coset_action, orbit,
                                 orbit_to_json, veech_action, veech_contains,
                                 veech_generators)
from origami_veech.origami import are_isomorphic, make_origami, stratum
from origami_veech.perms import inv


def _dp310():
    return build_dp(TorsionConfig(3, 1, 0), Flavor(0, 0))


def test_relations_exact_on_random_origamis():
    rng = random.Random(11)
    for _ in range(15):
        o = random_origami(rng, rng.randint(2, 7))
        s4 = act_word(["S"] * 4, o)
        assert s4 == o
        s2 = act_word(["S", "S"], o)
        assert s2.sigma_x == inv(o.sigma_x) and s2.sigma_y == inv(o.sigma_y)
        st6 = act_word(["S", "T"] * 6, o)
        assert st6 == o
        for g in ("S", "T"):
            assert act_word([g, g + "^-1"], o) == o
            assert act_word([g + "^-1", g], o) == o


def test_act_preserves_invariants():
    rng = random.Random(13)
    for _ in range(10):
        o = random_origami(rng, rng.randint(2, 7))
        for g in ("S", "T", "S^-1", "T^-1"):
            img = act_generator(g, o)
            assert img.degree == o.degree
            assert stratum(img) == stratum(o)


def test_torus_and_w_orbits():
    t = make_origami((0,), (0,))
    assert act_generator("T", t) == t
    g = orbit(t)
    assert len(g.keys) == 1
    w = build_w()
    assert are_isomorphic(act_generator("T", w), w)
    gw = orbit(w)
    assert len(gw.keys) == 1
    aw = veech_action(w)
    assert aw.size == 1 and aw.perm_S == (0,) and aw.perm_T == (0,)
    rng = random.Random(3)
    for _ in range(20):
        assert veech_contains(aw, random_matz(rng, bound=1000))


def test_dp_orbit():
    o = _dp310()
    g = orbit(o)
    assert len(g.keys) == 18
    assert len(set(g.keys)) == 18  # canonical keys pairwise distinct
    a = coset_action(g)
    assert a.size == 18
    assert not veech_contains(a, sl2.T)
    assert veech_contains(a, sl2.NEG_I)
    data = orbit_to_json(g)
    assert len(data["nodes"]) == 18
    assert data["perm_S"] == list(g.edges_S)


def test_orbit_size_representative_independent():
    rng = random.Random(17)
    o = _dp310()
    o2 = conjugate(o, random_perm(rng, o.degree))
    assert veech_action(o2).size == 18


def test_veech_generators_dp():
    o = _dp310()
    a = veech_action(o)
    gens = veech_generators(a)
    assert gens
    allowed_mod3 = {(1, 0, 0, 1), (2, 0, 0, 2), (0, 2, 1, 0), (0, 1, 2, 0)}
    for m in gens:
        assert veech_contains(a, m)
        assert in_gamma_uu(m)
        assert tuple(e % 3 for e in m.entries()) in allowed_mod3


def test_action_is_homomorphism():
    o = _dp310()
    a = veech_action(o)
    rng = random.Random(19)
    for _ in range(20):
        m1 = random_matz(rng, bound=50)
        m2 = random_matz(rng, bound=50)
        w1, w2 = sl2.decompose_word(m1), sl2.decompose_word(m2)
        w12 = sl2.decompose_word(m1 * m2)
        for node in range(a.size):
            assert a.apply_word(w12, node) == a.apply_word(w1 + w2, node)
