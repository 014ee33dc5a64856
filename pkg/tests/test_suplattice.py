"""Tensor products, duals, totally-below, dual bases."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from pfspec.caps import Caps
from pfspec.catalog import chain, diamond_m3, grid, pentagon_n5, powerset_lattice
from pfspec.errors import CapExceeded, NotSupercontinuous
from pfspec.iso import find_lattice_iso
from pfspec.order import bits, build_poset, lattice_structure, upset_lattice
from pfspec.suplattice import (
    OMEGA_TRUE,
    SupMap,
    TensorSpace,
    all_supmaps,
    dual,
    dual_basis,
    dual_element_of,
    omega,
    supmap_to_omega,
    tensor,
    tensor_map,
    totally_below,
    totally_below_exhaustive,
    supercontinuity_witness,
)

CATALOG = [chain(2), chain(3), chain(4), powerset_lattice(2), diamond_m3(), pentagon_n5()]


# ---------------------------------------------------------------------------
# tensor lattices


def test_tensor_omega_omega_is_omega():
    t = tensor([omega(), omega()])
    assert t.n == 2
    # the codiagonal sends the pure tensor (p, q) to p /\ q
    om = omega()
    delta = t.induce(lambda pq: om.meet(pq[0], pq[1]), om)
    for p in range(2):
        for q in range(2):
            assert delta(t.pure((p, q))) == om.meet(p, q)
    assert find_lattice_iso(t, om) is not None


def test_tensor_powerset_powerset():
    p2 = powerset_lattice(2)
    t = tensor([p2, p2])
    assert t.n == 16
    assert find_lattice_iso(t, powerset_lattice(4)) is not None


def test_tensor_c3_c3_is_grid_upsets():
    t = tensor([chain(3), chain(3)])
    assert t.n == 6
    two_by_two = build_poset(
        ["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    )
    up, _ = upset_lattice(two_by_two)
    assert find_lattice_iso(t, up) is not None


def test_tensor_cap():
    p3 = powerset_lattice(3)
    with pytest.raises(CapExceeded):
        tensor([p3, p3], Caps(max_tensor_carrier=24))


def test_tensor_unitor():
    # L (x) Omega is isomorphic to L for every catalog lattice
    for lat in CATALOG:
        t = tensor([lat, omega()])
        assert find_lattice_iso(t, lat) is not None


def test_tensor_map_identity_and_composition():
    c2, c3 = chain(2), chain(3)
    t22 = tensor([c2, c2])
    ident = tensor_map([SupMap.identity(c2), SupMap.identity(c2)], t22, t22)
    assert ident.values == tuple(range(t22.n))
    t33 = tensor([c3, c3])
    f = SupMap(c2, c3, [0, 2])
    g = SupMap(c2, c3, [0, 1])
    fp = SupMap(c3, c3, [0, 1, 1])
    gp = SupMap(c3, c3, [0, 0, 2])
    lhs = tensor_map([fp, gp], t33, t33).compose(tensor_map([f, g], t22, t33))
    rhs = tensor_map(
        [SupMap(c2, c3, [fp(v) for v in f.values]), SupMap(c2, c3, [gp(v) for v in g.values])],
        t22,
        t33,
    )
    assert lhs.values == rhs.values


def test_tensor_map_exists_component():
    # (id (x) positivity): L (x) M -> L (x) Omega sends a pure (a, b) to
    # (a, [b positive]); through the unitor that is a if b /= 0 else 0
    c3 = chain(3)
    t = tensor([c3, c3])
    to = tensor([c3, omega()])
    exists = SupMap(c3, omega(), [0, 1, 1])
    f = tensor_map([SupMap.identity(c3), exists], t, to)
    for a in range(3):
        for b in range(3):
            image = f(t.pure((a, b)))
            expect = to.pure((a, 1)) if b else to.bottom
            assert image == expect


def test_bi_ideal_closure_is_closure_operator():
    space = TensorSpace((chain(3), powerset_lattice(2)))
    full = (1 << space.ntuples) - 1
    for seed in range(0, full, 97):
        mask = seed & full
        closed = space.closure(mask)
        assert closed | mask == closed
        assert space.closure(closed) == closed
    assert space.closure(0) == space.zero_mask()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, (1 << 9) - 1), st.integers(0, (1 << 9) - 1))
def test_bi_ideal_closure_monotone(m1, m2):
    space = TensorSpace((chain(3), chain(3)))
    c1, c2 = space.closure(m1 & (1 << 9) - 1), space.closure((m1 | m2) & (1 << 9) - 1)
    assert c1 & c2 == c1  # monotone


def test_universal_property_counts():
    # bilinear maps L x M -> N are in bijection with SupMaps L (x) M -> N
    targets = [chain(1), chain(2), chain(3)]
    factor_pairs = [
        (chain(2), chain(2)),
        (chain(2), chain(3)),
        (chain(3), chain(3)),
        (chain(2), powerset_lattice(2)),
    ]
    for left, right in factor_pairs:
        t = tensor([left, right])
        for target in targets:
            bilinear = 0
            for table in product(range(target.n), repeat=left.n * right.n):
                fn = lambda ab: table[ab[0] * right.n + ab[1]]
                ok = all(fn((left.bottom, b)) == target.bottom for b in range(right.n))
                ok = ok and all(fn((a, right.bottom)) == target.bottom for a in range(left.n))
                ok = ok and all(
                    fn((left.join(a, a2), b)) == target.join(fn((a, b)), fn((a2, b)))
                    for a in range(left.n)
                    for a2 in range(left.n)
                    for b in range(right.n)
                )
                ok = ok and all(
                    fn((a, right.join(b, b2))) == target.join(fn((a, b)), fn((a, b2)))
                    for a in range(left.n)
                    for b in range(right.n)
                    for b2 in range(right.n)
                )
                if ok:
                    bilinear += 1
            supmaps = len(all_supmaps(t, target))
            assert bilinear == supmaps


# ---------------------------------------------------------------------------
# duals


def test_dual_omega_self():
    d, pairing = dual(omega())
    assert find_lattice_iso(d, omega()) is not None


def test_dual_powerset_is_complement():
    p2 = powerset_lattice(2)
    d, pairing = dual(p2)
    # the encoding c represents a -> [a not<= c]; matching complement:
    # the supmap of c agrees with membership tests against the complement
    for c in range(4):
        comp = p2.n - 1 - c if False else None
    # mask-level: element index equals its subset mask by construction
    for c in range(4):
        h = supmap_to_omega(p2, c)
        complement = 3 ^ c  # bitmask complement within {1,2}
        for a in range(4):
            assert (h(a) == OMEGA_TRUE) == bool(a & complement)


def test_supmap_count_c3_to_omega():
    # brute force over all 8 functions: exactly 3 preserve joins
    c3 = chain(3)
    om = omega()
    count = 0
    for values in product(range(2), repeat=3):
        if values[0] != 0:
            continue
        if all(
            values[c3.join(a, b)] == om.join(values[a], values[b])
            for a in range(3)
            for b in range(3)
        ):
            count += 1
    assert count == 3 == c3.n
    assert len(all_supmaps(c3, om)) == 3


def test_dual_roundtrip_encoding():
    for lat in CATALOG:
        d, pairing = dual(lat)
        for c in range(lat.n):
            h = supmap_to_omega(lat, c)
            assert dual_element_of(lat, h) == c


# ---------------------------------------------------------------------------
# totally below


def test_totally_below_chain():
    c4 = chain(4)
    rel = totally_below(c4)
    for b in range(4):
        for a in range(4):
            expect = c4.leq(a, b) and b != c4.bottom
            assert bool(rel[b] >> a & 1) == expect


def test_totally_below_m3():
    m3 = diamond_m3()
    rel = totally_below(m3)
    for b in range(5):
        for a in range(5):
            expect = a == m3.bottom and b != m3.bottom
            assert bool(rel[b] >> a & 1) == expect


def test_totally_below_powerset():
    p2 = powerset_lattice(2)
    rel = totally_below(p2)
    s1, top = p2.index("{1}"), p2.top
    assert rel[top] >> s1 & 1


@pytest.mark.parametrize("lat", CATALOG + [grid(2, 3)])
def test_totally_below_matches_subset_oracle(lat):
    assert totally_below(lat) == totally_below_exhaustive(lat)


def test_totally_below_exhaustive_cap():
    with pytest.raises(CapExceeded):
        totally_below_exhaustive(powerset_lattice(2), Caps(max_exhaustive=2))


# ---------------------------------------------------------------------------
# dual bases


def test_dual_basis_powerset_atoms():
    p2 = powerset_lattice(2)
    basis, data = dual_basis(p2)
    assert [p2.names[p] for p in basis.irreducibles] == ["{1}", "{2}"]
    for k, p in enumerate(basis.irreducibles):
        for a in range(p2.n):
            assert (basis.sigma(k, a) == OMEGA_TRUE) == p2.leq(p, a)


def test_dual_basis_c3_reconstructs():
    c3 = chain(3)
    basis, data = dual_basis(c3)
    assert [c3.names[p] for p in basis.irreducibles] == ["m", "1"]
    for a in range(3):
        assert basis.reconstruct(a) == a


def test_dual_basis_m3_fails():
    m3 = diamond_m3()
    with pytest.raises(NotSupercontinuous):
        dual_basis(m3)
    # the totally-below join under the top is the bottom
    rel = totally_below(m3)
    assert m3.join_mask(rel[m3.top]) == m3.bottom


def test_supercontinuity_matches_distributivity():
    from pfspec.order import is_distributive

    for lat in CATALOG + [grid(2, 3), chain(5)]:
        assert (supercontinuity_witness(lat) is None) == is_distributive(lat)[0]


def test_duality_unit_element_parity():
    # the unit element's bi-ideal contains exactly the pairs (c, a) bounded
    # by some basis pair
    c3 = chain(3)
    basis, data = dual_basis(c3)
    space = data.unit_element.space
    for idx in data.unit_element.members():
        c, a = space.tuple_of(idx)
        dominated = any(
            (data.lattice.leq(a, p) and data.dual_lattice.leq(c, enc))
            for p, enc in zip(basis.irreducibles, basis.sigma_encodings)
        )
        assert dominated or a == c3.bottom or c == data.dual_lattice.bottom
