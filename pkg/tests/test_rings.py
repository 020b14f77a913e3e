import pytest

from zdbench.errors import BoundExceeded
from zdbench.rings import (Zmod, all_ideals,
                           all_mult_closed_subsets, annihilator,
                           ideal_combine, ideal_generated, ideal_power,
                           multiplicative_closure, poly_quotient, product_ring,
                           ring_predicates, verify_ring_axioms,
                           zero_divisors_ring)


def test_zmod_basics():
    R = Zmod(6)
    assert R.size == 6
    assert R.add(4, 5) == 3
    assert R.mul(4, 5) == 2
    assert R.neg(2) == 4
    assert R.zero == 0 and R.one == 1


def test_zmod_rejects_small_modulus():
    for n in (-1, 0, 1):
        with pytest.raises(ValueError):
            Zmod(n)


def test_product_ring_componentwise():
    P = product_ring(Zmod(2), Zmod(2))
    assert P.size == 4
    assert P.add((1, 0), (1, 1)) == (0, 1)
    assert P.mul((1, 0), (0, 1)) == (0, 0)
    # carrier order is pinned: first component varies fastest
    assert P.elements == ((0, 0), (1, 0), (0, 1), (1, 1))


def test_poly_quotient_reduction_table():
    # Z2[x]/(x^2): carrier 0, 1, x, 1+x; verified against hand reduction
    R = poly_quotient(Zmod(2), (0, 0, 1))
    assert R.elements == ((0, 0), (1, 0), (0, 1), (1, 1))
    x = (0, 1)
    assert R.mul(x, x) == (0, 0)
    assert R.mul((1, 1), (1, 1)) == (1, 0)  # (1+x)^2 = 1 + x^2 = 1
    assert R.element_str((1, 1)) == "1+x"


def test_poly_quotient_galois_field():
    # Z2[x]/(x^2+x+1) = F4: every nonzero element is a unit
    F4 = poly_quotient(Zmod(2), (1, 1, 1))
    assert len(F4.units()) == 3
    assert ring_predicates(F4).is_field


def test_poly_quotient_rejects_bad_relations():
    with pytest.raises(ValueError):
        poly_quotient(Zmod(4), (0, 2))      # leading coefficient 2
    with pytest.raises(ValueError):
        poly_quotient(Zmod(2), (1,))        # degree 0
    with pytest.raises(ValueError):
        poly_quotient(product_ring(Zmod(2), Zmod(2)), (0, 0, 1))


def test_ideal_generated_examples():
    assert ideal_generated(Zmod(6), [2]).elements == frozenset({0, 2, 4})
    assert ideal_generated(Zmod(4), []).elements == frozenset({0})
    P = product_ring(Zmod(2), Zmod(2))
    assert ideal_generated(P, [(0, 1)]).elements == frozenset({(0, 0), (0, 1)})


def test_ideal_generated_rejects_foreign_elements():
    with pytest.raises(ValueError):
        ideal_generated(Zmod(4), [7])


def test_ideal_generated_idempotent():
    R = Zmod(12)
    I = ideal_generated(R, [8, 6])
    again = ideal_generated(R, sorted(I.elements))
    assert again.elements == I.elements
    assert again == I


def test_ideal_arithmetic():
    R4 = Zmod(4)
    two = ideal_generated(R4, [2])
    assert (two * two).elements == frozenset({0})  # 2*2 = 0 in Z/4
    R6 = Zmod(6)
    I2 = ideal_generated(R6, [2])
    I3 = ideal_generated(R6, [3])
    assert I2.intersect(I3).elements == frozenset({0})
    assert (I2 + I3).is_whole_ring  # 2 + 3 = 5 is a unit
    assert ideal_power(I2, 0).is_whole_ring
    assert ideal_combine(I2, I3, "sum") == I2 + I3
    with pytest.raises(ValueError):
        ideal_combine(I2, two, "sum")
    with pytest.raises(ValueError):
        ideal_power(I2, -1)
    with pytest.raises(ValueError):
        ideal_combine(I2, I3, "quotient")


def test_annihilator_examples():
    R4 = Zmod(4)
    assert annihilator(R4, ideal_generated(R4, [2])).elements == frozenset({0, 2})
    assert annihilator(R4, ideal_generated(R4, [])).is_whole_ring
    R6 = Zmod(6)
    assert annihilator(R6, ideal_generated(R6, [3])).elements == frozenset({0, 2, 4})


def test_all_ideals_counts():
    assert len(all_ideals(Zmod(4))) == 3
    assert len(all_ideals(Zmod(6))) == 4
    assert len(all_ideals(Zmod(5))) == 2  # any field
    assert len(all_ideals(poly_quotient(Zmod(2), (1, 1, 1)))) == 2


def test_lattice_closure_and_annihilator_law():
    for R in (Zmod(8), Zmod(12), product_ring(Zmod(2), Zmod(4))):
        lattice = {I.elements for I in all_ideals(R)}
        ideals = all_ideals(R)
        for I in ideals:
            for J in ideals:
                assert (I + J).elements in lattice
                assert (I * J).elements in lattice
                assert I.intersect(J).elements in lattice
                assert (I * J).elements <= I.intersect(J).elements
                lhs = annihilator(R, I + J)
                rhs = annihilator(R, I).intersect(annihilator(R, J))
                assert lhs == rhs


def test_lattice_bound_exceeded():
    with pytest.raises(BoundExceeded):
        Zmod(20).ideals(bound=10)


def test_zero_divisors_examples():
    assert zero_divisors_ring(Zmod(6)) == frozenset({0, 2, 3, 4})
    P = product_ring(Zmod(2), Zmod(2))
    assert zero_divisors_ring(P) == frozenset({(0, 0), (1, 0), (0, 1)})
    assert zero_divisors_ring(Zmod(7)) == frozenset({0})


def test_nonunits_are_zero_divisors():
    # finite commutative rings: Z(R) = R \ units(R)
    for R in (Zmod(6), Zmod(8), Zmod(9), Zmod(12),
              product_ring(Zmod(2), Zmod(4)), poly_quotient(Zmod(4), (0, 0, 1))):
        assert R.zero_divisors() == frozenset(R.elements) - R.units()


def test_ring_predicates():
    p5 = ring_predicates(Zmod(5))
    assert p5.is_field and p5.is_domain and p5.is_local
    p4 = ring_predicates(Zmod(4))
    assert not p4.is_domain and p4.is_local
    assert p4.maximal_ideals[0].elements == frozenset({0, 2})
    pp = ring_predicates(product_ring(Zmod(2), Zmod(2)))
    assert not pp.is_local and len(pp.maximal_ideals) == 2


def test_ring_axioms_pass_on_sample():
    for R in (Zmod(9), product_ring(Zmod(3), Zmod(4)),
              poly_quotient(Zmod(3), (0, 0, 0, 1))):
        verify_ring_axioms(R)


def test_ring_axiom_bound():
    with pytest.raises(BoundExceeded):
        verify_ring_axioms(Zmod(12), bound=4)


def test_multiplicative_closure_inserts_one():
    R = Zmod(6)
    S = multiplicative_closure(R, [5])
    assert S.elements == frozenset({1, 5})
    T = multiplicative_closure(R, [2])
    assert T.elements == frozenset({1, 2, 4})  # 2*2=4, 2*4=2


def test_all_mult_closed_subsets_of_units():
    R = Zmod(6)
    subsets = all_mult_closed_subsets(R, R.units())
    assert [sorted(S.elements) for S in subsets] == [[1], [1, 5]]
    # a field of prime order: closed subsets of units = subgroups of a cyclic group
    R11 = Zmod(11)
    groups = all_mult_closed_subsets(R11, R11.units())
    assert sorted(len(S.elements) for S in groups) == [1, 2, 5, 10]


def test_zero_in_zd_toggle_changes_sets_only():
    import zdbench.rings as rings
    R = Zmod(6)
    with_zero = R.zero_divisors()
    try:
        rings.INCLUDE_ZERO_IN_ZD_SETS = False
        without = R.zero_divisors()
    finally:
        rings.INCLUDE_ZERO_IN_ZD_SETS = True
    assert with_zero - without == {0}


def test_duplicate_encodings_rejected():
    from zdbench.rings import FiniteRing
    with pytest.raises(ValueError):
        FiniteRing("zmod", [0, 0], lambda a, b: 0, lambda a, b: 0,
                   lambda a: 0, 0, 1, "bad")


def test_trivial_ring_rejected_without_flag():
    from zdbench.rings import FiniteRing
    with pytest.raises(ValueError):
        FiniteRing("zmod", [0], lambda a, b: 0, lambda a, b: 0,
                   lambda a: 0, 0, 0, "zero-ring")
