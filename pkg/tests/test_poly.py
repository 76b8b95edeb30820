import pytest

from qspecies.field import field_make
from qspecies.poly import (Poly, irreducible_count, is_irreducible,
                           monic_irreducibles, poly_z, poly_z_minus)

F2 = field_make(2, 1)
F3 = field_make(3, 1)


def P2(*coeffs):
    return Poly.make(F2, coeffs)


def test_basic_arithmetic():
    # (z+1)^2 = z^2 + 1 in characteristic 2
    assert P2(1, 1) * P2(1, 1) == P2(1, 0, 1)
    assert P2(1, 1) + P2(1, 1) == P2()
    q, r = divmod(P2(1, 0, 1), P2(1, 1))
    assert q == P2(1, 1) and r.is_zero


def test_gcd():
    assert P2(1, 0, 1).gcd(P2(1, 1)) == P2(1, 1)
    # gcd of coprime polynomials is 1
    assert P2(1, 1, 1).gcd(P2(1, 1)) == P2(1)


def test_is_irreducible_examples():
    assert is_irreducible(P2(1, 1, 1))          # z^2+z+1
    assert not is_irreducible(P2(1, 0, 1))      # (z+1)^2
    assert is_irreducible(poly_z(F3))
    with pytest.raises(ValueError):
        is_irreducible(P2(1))                    # constant
    with pytest.raises(ValueError):
        is_irreducible(Poly.make(F3, (1, 2)))    # not monic


def brute_force_irreducible(f):
    """Trial division by every monic polynomial of lower positive degree."""
    from itertools import product
    field = f.field
    for d in range(1, f.degree):
        for lower in product(range(field.q), repeat=d):
            g = Poly(field, tuple(lower) + (1,))
            if (f % g).is_zero:
                return False
    return True


@pytest.mark.parametrize("field", [F2, F3], ids=["q2", "q3"])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_enumeration_vs_count_and_trial_division(field, d):
    polys = monic_irreducibles(field, d)
    assert len(polys) == irreducible_count(field, d)
    for f in polys:
        assert f.is_monic and f.degree == d
        assert brute_force_irreducible(f)
    # every monic irreducible of degree d is listed
    from itertools import product
    all_irr = [Poly(field, tuple(lo) + (1,))
               for lo in product(range(field.q), repeat=d)]
    assert len([f for f in all_irr if brute_force_irreducible(f)]) == len(polys)


@pytest.mark.parametrize("field", [F2, F3], ids=["q2", "q3"])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_minimal_polynomial_degree_sum(field, d):
    assert sum(e * irreducible_count(field, e)
               for e in range(1, d + 1) if d % e == 0) == field.q**d


def test_known_counts():
    assert irreducible_count(F2, 1) == 2
    assert irreducible_count(F2, 2) == 1
    assert irreducible_count(F3, 2) == 3
    assert monic_irreducibles(F2, 2) == [P2(1, 1, 1)]
    assert len(monic_irreducibles(F2, 3)) == 2


def test_exclude_z():
    assert monic_irreducibles(F2, 1, exclude_z=True) == [P2(1, 1)]
    # only affects degree 1
    assert monic_irreducibles(F2, 2, exclude_z=True) == monic_irreducibles(F2, 2)


def test_ordering_puts_z_minus_1_first():
    first = monic_irreducibles(F3, 1)[0]
    assert first == poly_z_minus(F3, 1)  # z - 1 = z + 2 over F_3


def test_rendering():
    assert str(P2(1, 1, 1)) == "z^2+z+1"
    assert str(Poly.make(F3, (0, 2))) == "2*z"
    assert str(P2()) == "0"
