"""Field labels, conductors, defining cubics, and the family enumeration."""

import math

import pytest

from cyclocubic._primes import factorize
from cyclocubic.eisenstein import EisensteinInteger
from cyclocubic.fields import (
    FieldLabel,
    Not3SplitError,
    NotCubeFreeError,
    canonicalize,
    conductor_discriminant,
    defining_polynomial,
    enumerate_family,
    labels_up_to_conductor,
    parse_label,
    partner,
    record_from_line,
    record_to_line,
    three_split_factorization,
)


def test_parse_label():
    assert parse_label(7) == FieldLabel(0, 7, 1)
    assert parse_label(441) == FieldLabel(2, 1, 7)  # 3^2 * 7^2
    assert parse_label(3 * 7 * 13**2) == FieldLabel(1, 7, 13)
    with pytest.raises(Not3SplitError):
        parse_label(10)  # 5 = 2 mod 3
    with pytest.raises(NotCubeFreeError):
        parse_label(27 * 7)
    with pytest.raises(ValueError):
        parse_label(1)


def test_three_split_factorization():
    fact = three_split_factorization(FieldLabel(0, 7, 1))
    assert fact.sign == 1
    assert fact.d1 * fact.d2 == EisensteinInteger(7)
    assert fact.d2 == fact.d1.conjugate()

    fact3 = three_split_factorization(FieldLabel(1, 1, 1))
    assert fact3.d1 == EisensteinInteger(1, -1)  # 1 - omega
    assert fact3.d1 * fact3.d2 == EisensteinInteger(3)

    # norm multiplicativity across a composite label: N(D1) = 7 * 13^2
    fact713 = three_split_factorization(FieldLabel(0, 7, 13))
    assert fact713.d1.norm() == 7 * 13**2 == 1183
    assert fact713.d1 * fact713.d2 == EisensteinInteger(FieldLabel(0, 7, 13).D)


def test_partner_and_canonicalize():
    assert partner(FieldLabel(0, 7, 1)) == FieldLabel(0, 1, 7)  # 7 <-> 49
    assert partner(FieldLabel(1, 7, 1)) == FieldLabel(2, 1, 7)  # 21 <-> 441
    assert canonicalize(parse_label(49)) == (FieldLabel(0, 7, 1), False)
    assert canonicalize(parse_label(21)) == (FieldLabel(1, 7, 1), True)
    # partner of 63 = (2,7,1) is (1,1,7) = 147, so 63 is canonical
    assert partner(parse_label(63)).D == 147
    assert canonicalize(parse_label(63))[1] is True


def test_partner_is_involution():
    for label in labels_up_to_conductor(1000):
        assert partner(partner(label)) == label
        assert partner(label) != label


def test_conductor_discriminant():
    assert conductor_discriminant(FieldLabel(0, 7, 1)) == (7, 49)
    assert conductor_discriminant(FieldLabel(1, 1, 1)) == (9, 81)
    assert conductor_discriminant(FieldLabel(0, 7, 13)) == (91, 8281)
    for label in labels_up_to_conductor(1000):
        assert conductor_discriminant(label) == conductor_discriminant(partner(label))


def test_defining_polynomial_examples():
    # registry generator above 7 is 2 + 3w with trace 1, so B = 7
    assert defining_polynomial(FieldLabel(0, 7, 1)) == (7, 7)
    # trace(1 - omega) = 3
    assert defining_polynomial(FieldLabel(1, 1, 1)) == (3, 9)


def test_defining_polynomial_generator_identity():
    # u + D/u is a root of x^3 - 3Dx - B for each complex cube root u of D1*D2^2
    for label in (FieldLabel(0, 7, 1), FieldLabel(1, 1, 1), FieldLabel(0, 13, 7),
                  FieldLabel(2, 7, 1)):
        a_coef, b_coef = defining_polynomial(label)
        fact = three_split_factorization(label)
        c = (fact.d1 * fact.d2 * fact.d2).complex_value()
        u = c ** (1.0 / 3.0)
        gamma = (u + label.D / u).real
        residual = abs(gamma**3 - 3 * a_coef * gamma - b_coef)
        assert residual < 1e-10 * max(1.0, abs(gamma) ** 3)


def test_defining_polynomial_trace_bound():
    # |trace| <= 2 sqrt(norm) gives B^2 <= 4 D^3
    for label in labels_up_to_conductor(1000):
        a_coef, b_coef = defining_polynomial(label)
        assert a_coef == label.D
        assert b_coef**2 <= 4 * label.D**3


def test_enumerate_family_2000():
    # independent brute-force conductor scan: valid conductors f with
    # f^2 in [2000, 4000] and the field count each carries
    records = enumerate_family(2000)
    assert [(r.D, r.discriminant) for r in records] == [
        (61, 3721), (21, 3969), (63, 3969)]
    assert all(r.canonical for r in records)

    found = {}
    for f in range(45, 64):
        fac = factorize(f)
        e3 = fac.pop(3, 0)
        if e3 not in (0, 2):
            continue
        if any(q % 3 != 1 or e != 1 for q, e in fac.items()):
            continue
        n_fields = 2 ** len(fac) if e3 == 2 else 2 ** len(fac) // 2
        if n_fields:
            found[f] = n_fields
    assert found == {61: 1, 63: 2}
    assert sum(found.values()) == len(records)


def test_enumerate_family_window_and_order():
    records = enumerate_family(50_000)
    assert records == sorted(records, key=lambda r: (r.conductor, r.D))
    assert len({r.D for r in records}) == len(records)
    for r in records:
        assert 50_000 <= r.discriminant <= 100_000
        assert r.conductor**2 == r.discriminant
        f, disc = conductor_discriminant(r.label)
        assert (f, disc) == (r.conductor, r.discriminant)
        assert r.label.D < partner(r.label).D


def test_two_to_one_correspondence():
    labels = labels_up_to_conductor(1000)
    # every canonical label has a non-canonical partner; together they pair
    # up the full label set two-to-one
    all_labels = set()
    for label in labels:
        all_labels.add(label)
        all_labels.add(partner(label))
    assert len(all_labels) == 2 * len(labels)
    for label in labels:
        inside, canonical = canonicalize(partner(label))
        assert inside == label and canonical is False


def test_family_growth_ratio():
    # |F(4X)| / |F(X)| near 2 under sqrt growth; measured ratios are
    # 2.000, 1.978, 1.951 on this grid
    for x in (10**6, 4 * 10**6, 16 * 10**6):
        ratio = len(enumerate_family(4 * x)) / len(enumerate_family(x))
        assert abs(ratio - 2.0) <= 0.2


def test_enumeration_is_stable():
    a = [record_to_line(r) for r in enumerate_family(10**5)]
    b = [record_to_line(r) for r in enumerate_family(10**5)]
    assert a == b


def test_record_round_trip():
    for rec in enumerate_family(3000):
        assert record_from_line(record_to_line(rec)) == rec
    with pytest.raises(ValueError):
        record_from_line("D=7 e3=0")
