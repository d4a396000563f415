import random

import pytest
from hypothesis import given, strategies as st

from helpers import Q

from evo2d.exactmath import parse_field
from evo2d.freealg import (APPENDIX_SYSTEMS, FreeAlgebra, a8_relation, a8_system, appendix_system,
                           nc_dimension_probe, nc_groebner, nc_normal_form, star_close,
                           verify_appendix)
from evo2d.polyring import ResourceLimit

A = FreeAlgebra(Q)


def test_parse_aliases_and_star():
    f = A("x*y - 2*z + xs*ys")
    assert f == A("x*y - 2*z + z*t")
    # the involution reverses words and swaps x <-> z, y <-> t
    assert f.star() == A("t*z - 2*x + y*x")
    assert f.star().star() == f
    assert f.degree() == 2


def test_arithmetic():
    x, y = A.letter("x"), A.letter("y")
    assert (x + y) * (x - y) == A("x*x - x*y + y*x - y*y")
    assert (x * y) ** 2 == A("x*y*x*y")
    assert not (x - x)


def test_commutative_idempotent_basis():
    gb = nc_groebner([A("x*x - x"), A("x*y - y*x")], 4)
    assert {str(g) for g in gb.elements} == {"x*x - x", "y*x - x*y"}
    assert gb.complete_below == 4
    assert not nc_normal_form(A("y*x*x*y - x*y*y"), gb)


def test_methods_agree():
    gens = [A("x*y - y*x - x"), A("x*x - y")]
    lin = nc_groebner(gens, 5)
    ovl = nc_groebner(gens, 5, method="overlap")
    for w in ["y*x*x", "x*y*x*y", "y*y*x - x*x*x*x"]:
        assert nc_normal_form(A(w), lin) == nc_normal_form(A(w), ovl)
    with pytest.raises(ValueError):
        nc_groebner(gens, 5, method="magic")
    with pytest.raises(ValueError):
        nc_groebner([A("x*x*x")], 2)


def test_dimension_probe():
    assert nc_dimension_probe([], 1) == 4
    assert nc_dimension_probe([], 2) == 16
    assert nc_dimension_probe([A(c) for c in "xyzt"], 1) == 0
    # x*y as a leading word removes exactly one degree-2 word
    assert nc_dimension_probe([A("x*y")], 2) == 15


def test_star_close():
    # t*z is already the star of x*y, so nothing is duplicated
    assert star_close([A("x*y"), A("t*z")]) == [A("x*y"), A("t*z")]
    assert set(star_close([A("x - y")])) == {A("x - y"), A("z - t")}


def test_specialized_appendix_results():
    for name, spec in APPENDIX_SYSTEMS.items():
        res = verify_appendix(name, samples=2, seed=3)
        assert res.certified and len(res.points) == 2
        assert all(res.members[c] for c in spec["expect"])
        js = res.to_json()
        assert js["mode"] == "specialized" and js["system"] == name
    # A3 does not force y into the ideal
    assert not verify_appendix("appendix-A3", samples=2, seed=3).members["y"]


def test_parametric_a3_matches_specialization():
    res = verify_appendix("appendix-A3", mode="parametric")
    spec = verify_appendix("appendix-A3", samples=3, seed=1)
    assert res.certified and res.members == spec.members


def test_parametric_time_budget():
    with pytest.raises(ResourceLimit):
        verify_appendix("appendix-A4", mode="parametric", max_seconds=0)


def test_appendix_system_over_field():
    gens = appendix_system("appendix-A5ab")
    assert len(gens) == 6
    assert gens[0].alg.field.params == APPENDIX_SYSTEMS["appendix-A5ab"]["params"]


@pytest.mark.parametrize("alpha", [1, 2, Q(1) / 3])
def test_a8_relation_in_ideal(alpha):
    gb = nc_groebner(a8_system(alpha), 6)
    assert not nc_normal_form(a8_relation(alpha), gb)


def test_a8_relation_over_prime_field():
    F = parse_field("F7")
    gb = nc_groebner(a8_system(2, F), 6)
    assert not nc_normal_form(a8_relation(2, F), gb)


def _random_free(rng, terms=3, deg=3):
    f = A.zero()
    for _ in range(terms):
        w = tuple(rng.randrange(4) for _ in range(rng.randint(0, deg)))
        f = f + A.word(w, rng.randint(-3, 3))
    return f


@given(st.integers(0, 10_000))
def test_normal_form_is_ideal_membership(seed):
    rng = random.Random(seed)
    gens = [A("x*x - y"), A("y*x - x*y")]
    gb = nc_groebner(gens, 6)
    f = _random_free(rng, 3, 2)
    g = gens[rng.randrange(2)]
    u, v = _random_free(rng, 1, 1), _random_free(rng, 1, 1)
    assert nc_normal_form(f + u * g * v, gb) == nc_normal_form(f, gb)
    # the result contains no leading word
    nf = nc_normal_form(f, gb)
    leads = [e.lw() for e in gb.elements]
    for w in nf.terms:
        assert not any(w[i:i + len(l)] == l for l in leads for i in range(len(w)))


@given(st.integers(0, 10_000))
def test_star_is_antiautomorphism(seed):
    rng = random.Random(seed)
    f, g = _random_free(rng), _random_free(rng)
    assert (f * g).star() == g.star() * f.star()
    assert (f + g).star() == f.star() + g.star()
