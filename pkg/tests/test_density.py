"""Test-function pairs, kernels, digamma, and the explicit-formula statistics."""

import math

import numpy as np
import pytest

from cyclocubic._primes import primes_up_to
from cyclocubic.density import (
    KERNELS,
    classify_symmetry,
    combine_pairs,
    digamma,
    family_average,
    fejer_pair,
    gamma_term,
    kernel_integral,
    kernel_integral_quadrature,
    kernel_value,
    one_level_density,
    panel_gauss,
    prime_sum,
    reference_statistics,
)
from cyclocubic.fields import FieldLabel, conductor_discriminant, labels_up_to_conductor
from cyclocubic.lfunctions import KUMMER, lambda_coefficient

EULER_GAMMA = 0.5772156649015329


def test_fejer_pair_closed_forms():
    tf = fejer_pair(0.2)
    assert tf.fhat_at_0 == 5.0 and tf.f_at_0 == 1.0
    assert float(tf.fhat(0.0)) == 5.0
    assert float(tf.fhat(0.1)) == pytest.approx(2.5)
    assert float(tf.fhat(0.2)) == 0.0 and float(tf.fhat(0.5)) == 0.0
    assert float(tf.f(0.0)) == 1.0
    # integral of fhat over its support equals f(0) = 1 for every beta < 1
    for beta in (0.1, 0.2, 0.5, 0.9):
        tfb = fejer_pair(beta)
        val = panel_gauss(tfb.fhat, -beta, beta, 64)
        assert val == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        fejer_pair(1.0)


def test_fejer_transform_convention():
    # quadrature oracle: integral f(x) cos(2 pi x u) dx at u = 0.1, beta = 0.2
    # must reproduce fhat(0.1) = (1/0.2)(1 - 0.5) = 2.5
    tf = fejer_pair(0.2)

    def integrand(x):
        return tf.f(x) * np.cos(2.0 * math.pi * 0.1 * x)

    half_width = 2.0e4
    val = panel_gauss(integrand, -half_width, half_width, int(half_width * 4))
    assert val == pytest.approx(2.5, abs=1e-4)


def test_kernel_values():
    assert kernel_value("U", 0.37) == (1.0, 0.0)
    smooth, mass = kernel_value("Sp", 0.0)
    assert smooth == pytest.approx(0.0) and mass == 0.0
    smooth, mass = kernel_value("SOodd", 0.0)
    assert smooth == pytest.approx(0.0) and mass == 1.0
    smooth, mass = kernel_value("O", 1.25)
    assert smooth == 1.0 and mass == 0.5
    # removable singularity handled smoothly
    smooth, _ = kernel_value("SOeven", 1e-12)
    assert smooth == pytest.approx(2.0)
    with pytest.raises(ValueError):
        kernel_value("SU", 0.0)


def test_kernel_integrals_beta_02():
    tf = fejer_pair(0.2)
    assert kernel_integral("U", tf) == pytest.approx(5.0, abs=1e-12)
    assert kernel_integral("Sp", tf) == pytest.approx(4.5, abs=1e-12)
    for g in ("O", "SOeven", "SOodd"):
        assert kernel_integral(g, tf) == pytest.approx(5.5, abs=1e-12)


def test_kernel_integrals_match_quadrature():
    for beta in (0.2, 0.5, 0.9):
        tf = fejer_pair(beta)
        for g in KERNELS:
            fourier = kernel_integral(g, tf)
            quad = kernel_integral_quadrature(g, tf)
            assert abs(fourier - quad) < 1e-6, (g, beta)


def test_digamma_classical_values():
    assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-10)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0), abs=1e-10)
    for x in (0.3, 1.7, 9.1):
        assert digamma(x + 1.0) - digamma(x) == pytest.approx(1.0 / x, abs=1e-12)
    with pytest.raises(ValueError):
        digamma(0.0)
    with pytest.raises(ValueError):
        digamma(-3.0)


def test_digamma_recurrence_grid():
    xs = np.linspace(0.05, 990.0, 100)
    for x in xs:
        assert abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12 * max(1.0, 1.0 / x)


def test_digamma_against_scipy():
    sp = pytest.importorskip("scipy.special")
    from cyclocubic.density import _digamma_array

    zs = np.array([0.25 + 0.05j, 0.75 + 3.2j, 0.25 - 40.0j, 12.0 + 0.0j, 999.0 + 1.0j])
    assert np.max(np.abs(_digamma_array(zs) - sp.digamma(zs))) < 1e-12
    xs = np.linspace(0.01, 1000.0, 500)
    mine = np.array([digamma(float(x)) for x in xs])
    rel = np.abs(mine - sp.digamma(xs)) / np.maximum(1.0, np.abs(sp.digamma(xs)))
    assert rel.max() < 1e-10


def test_gamma_term_sign_and_scaling():
    tf = fejer_pair(0.2)
    for label in labels_up_to_conductor(100):
        assert gamma_term(label, tf) < 0.0
    # conductors 91 and 9841 = 13 * 757 have log-discriminant ratio near 2,
    # and the term scales like 1 / log(discriminant)
    small = gamma_term(FieldLabel(0, 91, 1), tf)
    large = gamma_term(FieldLabel(0, 9841, 1), tf)
    assert 1.5 <= small / large <= 2.5


def test_gamma_term_linearity():
    # equal support radii keep the integration window common to all three
    # evaluations, so additivity is exact up to quadrature tolerance
    f1 = fejer_pair(0.2)
    f2 = combine_pairs((1.0, 1.0), (fejer_pair(0.1), fejer_pair(0.2)))
    mix = combine_pairs((0.6, 1.7), (f1, f2))
    label = FieldLabel(0, 61, 1)
    direct = gamma_term(label, mix)
    split = 0.6 * gamma_term(label, f1) + 1.7 * gamma_term(label, f2)
    assert abs(direct - split) < 1e-8


def test_prime_sum_support():
    label = FieldLabel(0, 7, 1)
    assert prime_sum(label, fejer_pair(0.01), KUMMER) == 0.0  # 49^0.01 < 2
    # widening the support never drops terms: values move monotonically in
    # the count of included prime powers
    tf_small = fejer_pair(0.2)
    tf_large = fejer_pair(0.4)
    _, disc = conductor_discriminant(label)
    count = lambda beta: sum(1 for p in primes_up_to(100) for m in (1, 2)
                             if m * math.log(p) < beta * math.log(disc))
    assert count(0.4) >= count(0.2)
    assert prime_sum(label, tf_small, KUMMER) != prime_sum(label, tf_large, KUMMER)


def test_prime_sum_hand_oracle_d61():
    # only p^m <= 3721^0.2 ~ 5.2 contribute: the powers 2, 3, 4, 5
    label = FieldLabel(0, 61, 1)
    tf = fejer_pair(0.2)
    log_disc = math.log(3721)
    terms = []
    for p, m in ((2, 1), (3, 1), (2, 2), (5, 1)):
        lam = lambda_coefficient(p, m, label, KUMMER)
        u = m * math.log(p) / log_disc
        terms.append(lam * math.log(p) / math.sqrt(p**m) * float(tf.fhat(u)))
    expected = 2.0 / log_disc * math.fsum(sorted(terms, key=abs))
    assert prime_sum(label, tf, KUMMER) == pytest.approx(expected, abs=1e-14)


def test_one_level_density_identity():
    tf = fejer_pair(0.2)
    for label in (FieldLabel(0, 61, 1), FieldLabel(1, 7, 1), FieldLabel(0, 13, 7)):
        bd = one_level_density(label, tf, KUMMER)
        assert bd.archimedean == 5.0
        assert bd.total == pytest.approx(bd.archimedean - bd.prime_sum + bd.gamma_term,
                                         abs=1e-12)


def test_one_level_density_linear_in_f():
    label = FieldLabel(0, 61, 1)
    f1 = fejer_pair(0.2)
    f2 = combine_pairs((1.0, 0.5), (fejer_pair(0.1), fejer_pair(0.2)))
    mix = combine_pairs((0.5, 2.0), (f1, f2))
    lhs = one_level_density(label, mix, KUMMER).total
    rhs = (0.5 * one_level_density(label, f1, KUMMER).total
           + 2.0 * one_level_density(label, f2, KUMMER).total)
    assert abs(lhs - rhs) < 1e-8


def test_family_average_small():
    tf = fejer_pair(0.2)
    fam = family_average(2000, tf, KUMMER)
    assert fam.count == 3
    # bookkeeping identity: average - (fhat(0) + mean gamma) + T = 0
    assert fam.average - (5.0 + fam.mean_gamma) + fam.t_statistic == pytest.approx(
        0.0, abs=1e-12)
    # order-independence of the reduction
    from cyclocubic.fields import enumerate_family

    records = enumerate_family(2000)
    fam2 = family_average(2000, tf, KUMMER, records=list(reversed(records)))
    assert fam2.average == fam.average or abs(fam2.average - fam.average) < 1e-15


def test_family_average_empty():
    with pytest.raises(ValueError):
        family_average(2000, fejer_pair(0.2), KUMMER, records=[])


def test_reference_statistics_structure():
    tf = fejer_pair(0.2)
    refs = reference_statistics(10**6, tf)
    assert refs["U"] == 0.0
    assert refs["Sp"] > 0.0
    assert refs["Sp"] == -refs["SOeven"] == -refs["SOodd"] == -refs["O"]


def test_reference_statistics_trend_toward_half():
    # the square-prime sum creeps up toward integral(fhat)/2 = 0.5
    tf = fejer_pair(0.2)
    vals = [reference_statistics(x, tf)["Sp"] for x in (10**6, 10**8, 10**10)]
    assert vals[0] < vals[1] < vals[2] < 0.5


def test_classify_symmetry():
    refs = {"U": 0.0, "Sp": 0.22, "O": -0.22, "SOeven": -0.22, "SOodd": -0.22}
    c = classify_symmetry(0.01, refs)
    assert c.kernel == "U" and c.margin > 0 and not c.ambiguous
    assert classify_symmetry(0.21, refs).kernel == "Sp"
    tied = classify_symmetry(-0.22, refs)
    assert tied.ambiguous and tied.margin < 1e-12
    # exact midpoint between U and Sp is ambiguous and breaks toward U
    mid = classify_symmetry(0.11, refs)
    assert mid.ambiguous and mid.kernel == "U"
