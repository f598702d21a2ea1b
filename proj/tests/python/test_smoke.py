"""Smoke tests for the compiled extension."""

import math

import pytest

import plankcount as pc


def test_normalize_three_four_five():
    u = pc.normalize([3.0, 4.0])
    assert u.weights == pytest.approx([0.6, 0.8], abs=1e-14)
    assert u.is_normalized()


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        pc.normalize([0.0, 0.0])


def test_vertex_codec():
    assert pc.vertex_decode(5, 3) == [-1, 1, -1]
    v = pc.SignVertex(3, 5)
    assert pc.antipode(v).mask == 2


def test_exact_tight_case():
    c = pc.count_plank_exact(pc.IntWeightVector([1, 1]))
    assert c.inside == 2
    assert c.outside == 2
    assert c.satisfied == 2
    assert c.ratio == 0.5


def test_plank_counts_match_modes():
    b = pc.IntWeightVector([3, 4, 0, 0])
    exact = pc.count_plank_exact(b)
    fl = pc.count_plank_gray(b.to_unit())
    assert (exact.inside, exact.boundary, exact.outside) == (fl.inside, fl.boundary, fl.outside)


def test_halfspace_axis():
    h = pc.count_halfspace(pc.normalize([1.0, 0.0, 0.0]))
    assert h.strict_interior == 0
    assert h.boundary == 4
    assert h.closed == 4


def test_bound_report():
    r = pc.bound_report(pc.normalize([1.0, 1.0, 1.0]))
    assert r.satisfied == 6
    assert r.pass_tomaszewski and r.pass_theorem1 and r.pass_lemma1
    assert r.theorem1_bound == pytest.approx(4.0 / math.sqrt(3.0))


def test_checkers():
    u = pc.normalize([1.0, 1.0, 0.0])
    assert pc.antipodal_free_check(u).pass_
    obs = pc.observation2_check(u)
    assert obs.pass_ and not obs.pair_found
    wit = pc.centroid_witness(u)
    assert wit.k == 2
    assert wit.w == [2, 2, 0]
    assert wit.holds()


def test_pi_map_first_coordinate():
    v = pc.SignVertex(3, 0b100)  # (+1, +1, -1)
    image = pc.pi_map(v, 1)
    assert [image.sign(i) for i in (1, 2, 3)] == [1, -1, 1]


def test_family_count():
    assert pc.family_count(5, 2) == 16
    assert pc.family_count(3, 3) == 6
    assert pc.family_count(5, 5) == 20


def test_norm_sq_is_exact_python_int():
    b = pc.IntWeightVector([3, 4])
    assert b.norm_sq == 25


def test_search_minimum_small():
    cfg = pc.SearchConfig(restarts=4, steps_per_restart=300, rng_seed=7)
    res = pc.search_minimum(2, cfg)
    assert res.satisfied == 2
    assert res.ratio == 0.5
    assert abs(sum(w * w for w in res.best.weights) - 1.0) < 1e-9


def test_parallel_count_matches_serial():
    u = pc.sample_unit_vector(12, seed=3)
    serial = pc.count_plank_gray(u)
    par = pc.count_parallel(u, pc.EnumConfig(chunk_bits=4), workers=2)
    assert (par.inside, par.boundary, par.outside) == (
        serial.inside,
        serial.boundary,
        serial.outside,
    )
