import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiaxial.abelian import FGAbelianGroup


def test_canonical_form_merges_coprime_orders():
    assert FGAbelianGroup.from_orders([2, 3]) == FGAbelianGroup(0, (6,))
    assert FGAbelianGroup.from_orders([6, 4]) == FGAbelianGroup.from_orders([12, 2])
    assert FGAbelianGroup.from_orders([0, 4, 2]) == FGAbelianGroup(1, (2, 4))


def test_zero_orders_become_free_rank():
    assert FGAbelianGroup.from_orders([0, 0, 1]) == FGAbelianGroup.free(2)
    assert FGAbelianGroup.from_orders([]) == FGAbelianGroup.trivial()


def test_constructor_rejects_non_chain():
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (4, 2))
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        FGAbelianGroup(-1, ())


def test_direct_sum_of_two_torsion():
    z4_z2 = FGAbelianGroup(4, (2, 2))
    assert FGAbelianGroup(4, (2,)).direct_sum(FGAbelianGroup(0, (2,))) == z4_z2
    assert z4_z2.direct_sum(FGAbelianGroup.trivial()) == z4_z2


def test_rendering():
    assert str(FGAbelianGroup.trivial()) == "0"
    assert str(FGAbelianGroup.free(1)) == "Z"
    assert str(FGAbelianGroup(4, (2, 2))) == "Z^4 ⊕ Z_2^2"
    assert str(FGAbelianGroup(0, (2, 4))) == "Z_2 ⊕ Z_4"


def test_json_shape():
    assert FGAbelianGroup(3, (2,)).to_json() == {"free_rank": 3, "torsion": [2]}


def test_embeds_in_free_and_torsion():
    assert FGAbelianGroup(1, (2,)).embeds_in(FGAbelianGroup(2, (2, 2)))
    assert not FGAbelianGroup(2, ()).embeds_in(FGAbelianGroup(1, (2, 2)))
    assert not FGAbelianGroup(0, (2,)).embeds_in(FGAbelianGroup(5, ()))
    # order considerations, not just counts
    z4 = FGAbelianGroup(0, (4,))
    z2z2 = FGAbelianGroup(0, (2, 2))
    assert not z4.embeds_in(z2z2)
    assert not z2z2.embeds_in(z4)
    assert z4.embeds_in(FGAbelianGroup(0, (8,)))


def test_embeds_in_is_reflexive_on_spot_values():
    for group in [
        FGAbelianGroup.trivial(),
        FGAbelianGroup(4, (2, 2)),
        FGAbelianGroup(1, (2, 4, 8)),
    ]:
        assert group.embeds_in(group)


orders = st.lists(st.integers(min_value=0, max_value=24), max_size=6)


@given(orders, orders)
def test_direct_sum_commutes(left, right):
    a = FGAbelianGroup.from_orders(left)
    b = FGAbelianGroup.from_orders(right)
    assert a.direct_sum(b) == b.direct_sum(a)


@given(orders)
def test_canonicalization_is_idempotent(raw):
    group = FGAbelianGroup.from_orders(raw)
    assert FGAbelianGroup.from_orders(group.invariant_factors()) == group


@given(orders, orders)
def test_summands_embed_in_direct_sum(left, right):
    a = FGAbelianGroup.from_orders(left)
    b = FGAbelianGroup.from_orders(right)
    total = a.direct_sum(b)
    assert a.embeds_in(total)
    assert b.embeds_in(total)
