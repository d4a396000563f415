import pytest
from hypothesis import given, strategies as st

from helpers import F3, F5, Q, canonical, seeded

from evo2d.classify import canonical_matrix
from evo2d.exactmath import Matrix, parse_field
from evo2d.freealg import FreeAlgebra, a8_system
from evo2d.reps import (INVOLUTIONS, TARGET_KINDS, BilinearForm, CharacteristicError,
                        InvolutiveAlgebra2, MatrixStarAlgebra, Representation, a8_form,
                        check_representation, commutative_universal, complex_like,
                        nonexistence_commutative, explicit_representations, search_rep_2dim,
                        universal_presentation)

A = FreeAlgebra(Q)


def form(**terms):
    return BilinearForm.from_dict({k.replace("s", "*"): Q(v) for k, v in terms.items()})


def test_bilinear_form_constructors():
    assert form(xy=1).coeffs == (Q(1),) + (0,) * 7
    assert BilinearForm.symmetric4(1, 2, 3, 4).coeffs == (1, 1, 2, 3, 3, 2, 4, 4)
    assert BilinearForm.commutative3(1, 2, 4).coeffs == (1, 0, 2, 0, 2, 0, 0, 4)
    with pytest.raises(ValueError):
        BilinearForm((1, 2))
    with pytest.raises(ValueError):
        BilinearForm.from_dict({"xx": 1})


def test_bilinear_form_evaluation():
    B = MatrixStarAlgebra(Q, "transpose")
    a, b = Matrix(Q, [[1, 2], [0, 1]]), Matrix(Q, [[0, 1], [1, 0]])
    assert form(xys=1)(B, a, b) == a @ b.transpose()
    assert form(ysxs=1)(B, a, b) == b.transpose() @ a.transpose()


def test_noncommutative_presentation_a21():
    gens = universal_presentation(canonical_matrix("A2", Q, 1), form(xsys=1))
    expect = ["z*z - y", "x*x - t", "t*t - x", "y*y - z", "z*t", "y*x", "t*z", "x*y"]
    assert set(gens) == {A(g) for g in expect}
    # the list is closed under the involution
    assert all(g.star() in gens for g in gens)


def test_noncommutative_presentation_a0_and_a8():
    assert len(universal_presentation(canonical("A0"), form(xy=1))) == 8
    for alpha in (1, 3):
        gens = universal_presentation(canonical_matrix("A8", Q, alpha), a8_form(alpha, Q))
        assert set(gens) == set(a8_system(alpha))


def test_commutative_universal_examples():
    cu = commutative_universal(canonical("A1"), form(xys=1))
    assert cu.dimension == 2 and cu.is_faithful()
    cu = commutative_universal(canonical_matrix("A5ab", Q, 2, 2), form(xy=1, xsys=2))
    assert cu.dimension == 2 and cu.is_faithful()
    js = cu.to_json()
    assert js["dim"] == 2 and js["faithful"] and len(js["basis"]) == 2
    cu = commutative_universal(canonical("A7"), form(xys=1))
    assert cu.dimension is None and cu.is_faithful()
    cu = commutative_universal(canonical("A6"), form(xy=-2, xys=2, xsy=2, xsys=-2))
    assert cu.is_faithful()


def test_characteristic_three_is_rejected():
    with pytest.raises(CharacteristicError):
        universal_presentation(canonical_matrix("A1", F3), form(xy=1))
    with pytest.raises(CharacteristicError):
        explicit_representations(F3)
    with pytest.raises(CharacteristicError):
        search_rep_2dim(canonical_matrix("A1", F3))


@pytest.mark.parametrize("F", [Q, F5, parse_field("F7"), parse_field("F11")], ids=str)
def test_explicit_representations(F):
    reps = explicit_representations(F, t=2, z=1, alpha=3)
    assert len(reps) == 12
    for name, r in reps.items():
        assert check_representation(r), name
        assert r.is_faithful(), name


def test_representation_json_and_failure():
    r = explicit_representations(Q)["A2,1 in KxK"]
    js = r.to_json()
    assert js["valid"] and js["faithful"] and js["target"] == "split[exchange]"
    bad = Representation(r.algebra, r.target, r.images, form(xy=1))
    assert not check_representation(bad)


def test_search_none_for_a5_2_3():
    res = search_rep_2dim(canonical_matrix("A5ab", Q, 2, 3))
    assert res.status == "NONE" and res.found is None
    assert all(c["status"] == "inconsistent" for c in res.certificates)
    assert len(res.certificates) == sum(len(INVOLUTIONS[k]) for k in TARGET_KINDS)


def test_search_found_cases():
    res = search_rep_2dim(canonical_matrix("A5ab", Q, 2, 2))
    assert res.status == "FOUND" and res.found.target.kind == "split"
    assert res.to_json()["representation"]["valid"]
    for M in (canonical("A6"), canonical("A7"), canonical_matrix("A8", Q, 1), canonical("A1")):
        res = search_rep_2dim(M)
        assert res.status == "FOUND"
        assert check_representation(res.found) and res.found.is_faithful()


def test_search_keeps_going_when_asked():
    res = search_rep_2dim(canonical("A6"), stop_at_first=False)
    found = [c for c in res.certificates if c["status"] == "found"]
    assert len(found) >= 2
    assert len(res.certificates) == sum(len(INVOLUTIONS[k]) for k in TARGET_KINDS)


@pytest.mark.parametrize("label", ["A3", "A4", "A5ab"])
def test_nonexistence_specialized(label):
    cert = nonexistence_commutative(label, samples=2, seed=1)
    assert cert.not_faithful
    assert len(cert.strata) == 5 * 2
    names = {s["stratum"] for s in cert.strata}
    assert names == {"generic", "l1=0", "l2=0", "l3=0", "l4=0"}
    js = cert.to_json()
    assert js["mode"] == "specialized" and js["not_faithful"]
    for s in cert.strata:
        if s["stratum"] != "generic":
            assert s["point"][s["stratum"][:2]] == "0/1"


def test_nonexistence_rejects_other_labels():
    with pytest.raises(ValueError):
        nonexistence_commutative("A1")
    with pytest.raises(ValueError):
        nonexistence_commutative("A3", mode="bogus")


def test_target_construction():
    with pytest.raises(ValueError):
        InvolutiveAlgebra2("split", Q, "neg")
    with pytest.raises(ValueError):
        InvolutiveAlgebra2("cubic", Q)
    with pytest.raises(ValueError):
        InvolutiveAlgebra2("dual", parse_field("F2"), "neg")
    assert InvolutiveAlgebra2.parse("quad(0,1)", Q, "conj").is_field_extension()
    assert not InvolutiveAlgebra2.parse("quad(0,-1)", Q).is_field_extension()
    assert repr(complex_like(Q)) == "quad(0/1,1/1)[conj]"


@given(st.integers(0, 10_000), st.sampled_from([(k, i) for k in TARGET_KINDS for i in INVOLUTIONS[k]]))
def test_targets_are_associative_star_algebras(seed, target):
    rng = seeded(seed)
    kind, inv = target
    if kind == "quad":
        b, c = Q(rng.randint(-4, 4)), Q(rng.randint(-4, 4))
        B = InvolutiveAlgebra2(kind, Q, inv, b, c)
    else:
        B = InvolutiveAlgebra2(kind, Q, inv)
    els = [B.element(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(3)]
    a, b, c = els
    assert B.equal(B.mul(B.mul(a, b), c), B.mul(a, B.mul(b, c)))
    assert B.equal(B.star(B.star(a)), a)
    assert B.equal(B.star(B.mul(a, b)), B.mul(B.star(b), B.star(a)))
    assert B.equal(B.star(B.add(a, b)), B.add(B.star(a), B.star(b)))
