"""Semirings, localic presentations, the holoid quotient."""

import pytest

from pfspec.algebra import (
    FiniteCommMonoid,
    build_discrete_semiring,
    holoid_quotient,
    monoid_to_localic,
    scott_localic_lattice,
    to_localic,
)
from pfspec.catalog import chain, diamond_m3, monoid_catalog, semiring_catalog
from pfspec.errors import LawViolation, NotDistributive, NotMonotone
from pfspec.iso import find_poset_iso
from pfspec.order import build_poset
from pfspec.suplattice import SupMap


def test_boolean_semiring_valid():
    b = build_discrete_semiring(["0", "1"], 0, 1, [[0, 1], [1, 1]], [[0, 0], [0, 1]])
    assert b.add(1, 1) == 1


def test_z4_valid():
    z4 = semiring_catalog()[1][1]
    assert z4.mul(2, 2) == 0


def test_distributivity_violation_witnessed():
    # corrupt Z/4 multiplication at 2*2: both monoid structures survive but
    # 2*(1+1) = 2 while 2*1 + 2*1 = 0
    add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    mul = [[(i * j) % 4 for j in range(4)] for i in range(4)]
    mul[2][2] = 2
    with pytest.raises(LawViolation) as exc:
        build_discrete_semiring(["0", "1", "2", "3"], 0, 1, add, mul)
    assert "distributivity" in str(exc.value)
    assert exc.value.witness == ("2", "1", "1")


def test_to_localic_discrete_roundtrip():
    for name, semiring in semiring_catalog():
        data = to_localic(semiring, name=name)
        mul, add = data.point_table()
        assert mul == semiring.mul_t and add == semiring.add_t
        assert data.is_discrete()


def test_to_localic_reversed_sierpinski():
    # multiplication is join, addition is meet, zero is the top point
    revs = build_discrete_semiring(["b", "t"], 1, 0, [[0, 0], [0, 1]], [[0, 1], [1, 1]])
    order = build_poset(["b", "t"], [("b", "t")])
    data = to_localic(revs, order=order)
    assert not data.is_discrete()
    assert data.zero_point == 1 and data.one_point == 0


def test_to_localic_non_monotone_rejected():
    # x*y = xor on the 2-chain is not monotone
    xor = build_discrete_semiring(
        ["0", "1"], 0, 1, [[0, 1], [1, 1]], [[0, 0], [0, 1]]
    )
    order = build_poset(["0", "1"], [("0", "1")])
    bad_mul = [[1, 1], [1, 0]]
    with pytest.raises((NotMonotone, LawViolation)):
        from pfspec.algebra import LocalicSemiringData
        from pfspec.locale import alexandrov

        LocalicSemiringData(alexandrov(order), bad_mul, 1)


def test_counit_laws_as_supmap_equalities():
    data = to_localic(semiring_catalog()[1][1])  # Z4
    ident = SupMap.identity(data.locale.opens)
    assert data._counit_composite(data.mul_t, data.one_point) == ident
    assert data._counit_composite(data.add_t, data.zero_point) == ident


def test_scott_localic_lattice_c2_is_sierpinski():
    data = scott_localic_lattice(chain(2))
    assert data.locale.opens.n == 3
    assert data.zero_point == 0 and data.one_point == 1


def test_scott_localic_lattice_c3():
    data = scott_localic_lattice(chain(3))
    assert data.locale.points.n == 3
    assert data.mul(1, 2) == 1  # meet
    assert data.add(1, 2) == 2  # join


def test_scott_localic_lattice_m3_rejected():
    with pytest.raises(NotDistributive):
        scott_localic_lattice(diamond_m3())


# ---------------------------------------------------------------------------
# holoid quotient


def test_holoid_z2_trivial():
    z2 = FiniteCommMonoid(["1", "a"], 0, [[0, 1], [1, 0]])
    q, surj, order = holoid_quotient(z2)
    assert q.n == 1


def test_holoid_nil2_three_chain():
    nil2 = FiniteCommMonoid(["1", "a", "0"], 0, [[0, 1, 2], [1, 2, 2], [2, 2, 2]])
    q, surj, order = holoid_quotient(nil2)
    assert q.n == 3
    # divisibility order: 0 <= a <= 1
    zero, a, one = order.index("0"), order.index("a"), order.index("1")
    assert order.leq(zero, a) and order.leq(a, one)


def test_holoid_meet_monoid_is_identity():
    meet_c3 = FiniteCommMonoid(["1", "m", "0"], 0, [[0, 1, 2], [1, 1, 2], [2, 2, 2]])
    q, surj, order = holoid_quotient(meet_c3)
    assert q.n == 3
    # g | f iff f <= g, so the divisibility order is the chain itself
    assert order.leq(order.index("0"), order.index("m"))
    assert order.leq(order.index("m"), order.index("1"))


@pytest.mark.parametrize("name,monoid", monoid_catalog())
def test_holoid_idempotent(name, monoid):
    q1, _, order1 = holoid_quotient(monoid)
    q2, _, order2 = holoid_quotient(q1)
    assert q1.n == q2.n
    assert find_poset_iso(order1, order2) is not None


@pytest.mark.parametrize("name,monoid", monoid_catalog())
def test_holoid_surjection_is_hom_and_order_reflecting(name, monoid):
    q, surj, order = holoid_quotient(monoid)
    for a in range(monoid.n):
        for b in range(monoid.n):
            assert surj[monoid.mul(a, b)] == q.mul(surj[a], surj[b])
    div = monoid.divisibility()
    for a in range(monoid.n):
        for b in range(monoid.n):
            # [a] <= [b] iff b | a
            assert order.leq(surj[a], surj[b]) == bool(div[b] >> a & 1)


def test_monoid_to_localic():
    for name, monoid in monoid_catalog():
        data = monoid_to_localic(monoid, name=name)
        assert not data.has_addition
        assert data.mul_t == monoid.mul_t
