import pytest

from agkit.enumerator import canonical_form, census
from agkit.identities import IdentityId, classify
from agkit.magma import OrderTooLarge
from agkit.theorems import Implication, check_implication, find_counterexample, paper_implications

I = IdentityId


def by_name():
    return {impl.name: impl for impl in paper_implications()}


def test_suite_shape():
    suite = paper_implications()
    assert len(suite) == 8
    assert len({impl.name for impl in suite}) == 8
    ad = by_name()["AD=>semigroup"]
    assert ad.antecedent == {I.LEFT_INVERTIVE, I.LAD, I.RAD}
    assert ad.consequent == {I.ASSOCIATIVE}
    rad = by_name()["RAD=>RD"]
    assert rad.antecedent == {I.LEFT_INVERTIVE, I.RAD}
    assert rad.consequent == {I.RIGHT_DISTRIBUTIVE}
    lad_consequents = {
        next(iter(impl.consequent)) for impl in suite if impl.antecedent == {I.LEFT_INVERTIVE, I.LAD}
    }
    assert lad_consequents == {
        I.RIGHT_COMMUTATIVE, I.SELF_DUAL, I.AG_STAR_STAR, I.LEFT_DISTRIBUTIVE,
        I.PARAMEDIAL, I.LEFT_NUCLEAR_SQUARE,
    }


def test_caveat_only_on_imported_definition():
    flagged = [impl.name for impl in paper_implications() if impl.caveat]
    assert flagged == ["LAD=>left-nuclear-square"]


def test_implication_requires_nonempty_sides():
    with pytest.raises(ValueError):
        Implication("empty", set(), {I.LAD}, "-")


@pytest.mark.parametrize("impl", paper_implications(), ids=lambda i: i.name)
def test_suite_implications_hold_to_order_four(impl):
    r = check_implication(impl, 4)
    assert r.counterexample is None and r.holds
    assert r.orders_checked == range(1, 5)
    assert r.classes_checked == 1 + 3 + 20 + 331


@pytest.mark.parametrize(
    "name, ante, cons, example",
    [
        ("LD=>LAD", {I.LEFT_DISTRIBUTIVE}, {I.LAD}, "ld_example"),
        ("RD=>RAD", {I.RIGHT_DISTRIBUTIVE}, {I.RAD}, "rd_example"),
    ],
)
def test_false_implications_are_refuted(name, ante, cons, example, request):
    r = check_implication(Implication(name, ante, cons, "fabricated"), 4)
    m = r.counterexample
    assert m is not None and m.order <= 4
    props = classify(m)
    assert ante <= props and not cons <= props
    # the first counterexample is exactly the published table, up to relabeling
    assert m == canonical_form(request.getfixturevalue(example))


def test_find_counterexample_ld_not_lad():
    m = find_counterexample({I.LEFT_DISTRIBUTIVE}, {I.LAD}, 4)
    props = classify(m)
    assert I.LEFT_DISTRIBUTIVE in props and I.LAD not in props


def test_find_counterexample_rad_non_associative():
    m = find_counterexample({I.RAD}, {I.ASSOCIATIVE}, 3)
    assert m is not None and m.order == 3
    props = classify(m)
    assert I.RAD in props and I.ASSOCIATIVE not in props


def test_find_counterexample_lad_non_associative_order_four(lad_example):
    # The published order-4 LAD example is itself non-associative, so a class exists.
    m = find_counterexample({I.LAD}, {I.ASSOCIATIVE}, 4)
    assert m == canonical_form(lad_example)
    assert find_counterexample({I.LAD}, {I.ASSOCIATIVE}, 3) is None


def test_find_counterexample_is_deterministic():
    a = find_counterexample({I.RIGHT_DISTRIBUTIVE}, {I.RAD}, 4)
    b = find_counterexample({I.RIGHT_DISTRIBUTIVE}, {I.RAD}, 4)
    assert a == b


def test_find_counterexample_rejects_overlap():
    with pytest.raises(ValueError):
        find_counterexample({I.LAD}, {I.LAD}, 3)
    with pytest.raises(ValueError):
        find_counterexample(set(), {I.LEFT_INVERTIVE}, 3)


def test_order_gate():
    with pytest.raises(OrderTooLarge):
        find_counterexample({I.LAD}, set(), 6)
    with pytest.raises(OrderTooLarge):
        check_implication(paper_implications()[0], 6)


@pytest.mark.slow
def test_lad_census_consistency_order_five():
    m = find_counterexample({I.LAD}, {I.ASSOCIATIVE}, 5)
    assert (m is not None) == (census(5).per_filter["lad_na"] > 0)
    props = classify(m)
    assert I.LAD in props and I.ASSOCIATIVE not in props
