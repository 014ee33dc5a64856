"""Brute-force oracle comparisons with the pipeline."""

import pytest

from pfspec.catalog import (
    all_posets_up_to_iso,
    chain,
    powerset_lattice,
    semiring_catalog,
)
from pfspec.oracles import (
    ideal_product,
    prime_filters,
    prime_ideals,
    radical_ideals,
    scott_frame_compare,
    semiring_ideals,
    stone_compare,
    zariski_compare,
)
from pfspec.order import build_poset


def test_zariski_z4_counts():
    s = dict(semiring_catalog())["Z4"]
    assert len(semiring_ideals(s)) == 3
    assert len(radical_ideals(s)) == 2
    assert len(prime_ideals(s)) == 1
    assert zariski_compare(s).ok()


def test_zariski_ideal_product_z4():
    s = dict(semiring_catalog())["Z4"]
    two = 0b0101  # the ideal {0, 2}
    assert ideal_product(s, two, two) == 0b0001  # {0}


@pytest.mark.parametrize("name,semiring", semiring_catalog())
def test_zariski_pipeline_matches(name, semiring):
    cmp = zariski_compare(semiring, name=name)
    assert cmp.ok(), cmp


def test_stone_square_two_prime_filters():
    lat = powerset_lattice(2)
    assert len(prime_filters(lat)) == 2
    cmp = stone_compare(lat)
    assert cmp.ok() and cmp.point_count == 2


def test_prime_filters_are_principal_on_square():
    lat = powerset_lattice(2)
    a, b = lat.index("{1}"), lat.index("{2}")
    assert sorted(prime_filters(lat)) == sorted([lat.up[a], lat.up[b]])


def test_hofmann_lawson_two_chain():
    p = build_poset(["a", "b"], [("a", "b")])
    cmp = scott_frame_compare(p)
    assert cmp.ok()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hofmann_lawson_small_posets(n):
    for poset in all_posets_up_to_iso(n):
        assert scott_frame_compare(poset).ok()
