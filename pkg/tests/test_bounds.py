from fractions import Fraction

import pytest

from oracles import brute_force_rays
from pseudocone import (
    ASYMPTOTICALLY_OPTIMAL,
    NOT_OPTIMAL,
    BinaryMatrix,
    bound_report,
    build,
    certify,
    certify_distance,
    enumerate_codewords,
    enumerate_rays,
    kv_bound,
    polynomial_vector,
    stopping_distance,
    tanner_bound_closed_form,
    tanner_bound_dL,
)
from pseudocone.cone import RayCatalog, catalog_from_vectors
from pseudocone.errors import GirthTooSmall, InconsistentInputs, InvalidGamma, TheoremFalsified


def special_forms(beta, g):
    return {
        6: beta + 2,
        8: 2 * (beta + 1),
        10: beta**2 + 2 * beta + 2,
        12: 2 * (beta**2 + beta + 1),
        14: beta**3 + 2 * beta**2 + 2 * beta + 2,
        16: 2 * (beta**3 + beta**2 + beta + 1),
    }[g]


def test_dl_examples():
    assert tanner_bound_dL(3, 6) == 4
    assert tanner_bound_closed_form(3, 10) == 10
    assert tanner_bound_closed_form(2, 12) == 6
    for q in (2, 3, 4, 5):
        assert tanner_bound_dL(q, 8) == 2 * q
        assert tanner_bound_dL(q + 1, 16) == 2 * (q**3 + q**2 + q + 1)
    for gamma in range(2, 9):
        assert tanner_bound_closed_form(gamma, 6) == gamma + 1
        for g in (6, 8, 10, 12, 14, 16):
            assert tanner_bound_dL(gamma, g) == tanner_bound_closed_form(gamma, g) == special_forms(gamma - 1, g)


def test_dl_argument_errors():
    with pytest.raises(GirthTooSmall):
        tanner_bound_dL(3, 4)
    with pytest.raises(InvalidGamma):
        tanner_bound_dL(1, 6)
    with pytest.raises(ValueError):
        tanner_bound_closed_form(3, 7)


def test_kv_bound():
    assert kv_bound(4, 2) == 3
    assert kv_bound(16, 4) == 5
    assert kv_bound(3, 2) is None
    assert isinstance(kv_bound(4, 2), Fraction)


def test_bound_report_hypotheses(ex1):
    rep = bound_report(build(ex1))
    assert rep.d_L == 4 and rep.kv_bound == 4 and rep.beta == 2 and rep.t == 0
    four_cycle = bound_report(build(BinaryMatrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])))
    assert four_cycle.d_L is None


def _certify(H, catalog=None):
    return certify(
        H,
        enumerate_codewords(H),
        stopping_distance(H),
        catalog if catalog is not None else enumerate_rays(H),
    )


def test_certificate_example_one(ex1):
    cert = _certify(ex1)
    assert cert.verdict == ASYMPTOTICALLY_OPTIMAL
    assert cert.d_P_equals_d and cert.B_P_equals_A_d and cert.T_s_equals_A_d
    tight = [t for t in cert.per_ray_tightness if t.attains_bound]
    assert len(tight) == 7 and all(t.is_codeword_multiple for t in tight)


def test_certificate_hamming(hamming):
    cert = _certify(hamming)
    assert cert.verdict == ASYMPTOTICALLY_OPTIMAL
    assert cert.bounds.kv_bound == 3 and cert.bounds.d_L is None


def test_certificate_not_optimal(not_optimal):
    # brute-force oracle gives the ray set independently
    assert enumerate_rays(not_optimal).representatives() == brute_force_rays(not_optimal.array)
    cert = _certify(not_optimal)
    assert cert.verdict == NOT_OPTIMAL
    assert cert.d_P_equals_d is False


def test_falsification_is_reported(ex1):
    true = enumerate_rays(ex1)
    # drop one weight-4 codeword edge
    missing = RayCatalog(true.rays[1:])
    with pytest.raises(TheoremFalsified):
        _certify(ex1, missing)
    # a fake ray below the girth bound
    fake = catalog_from_vectors(ex1, [r.representative for r in true.rays] + [(1, 1, 1, 0, 0, 0, 0)])
    with pytest.raises(TheoremFalsified) as info:
        _certify(ex1, fake)
    assert info.value.ray is not None


def test_inconsistent_inputs(ex1, hamming):
    with pytest.raises(InconsistentInputs):
        certify(ex1, [0b1], stopping_distance(ex1), enumerate_rays(ex1))
    with pytest.raises(InconsistentInputs):
        certify(ex1, enumerate_codewords(ex1), stopping_distance(ex1), enumerate_rays(BinaryMatrix([[1, 1]])))


def test_distance_from_bound_and_witness(ex1):
    p = certify_distance(ex1, [1, 0, 1, 1, 1, 0, 0])
    assert p.d == 4 and p.d_source == "bound-plus-witness"
    assert certify_distance(ex1, [0] * 7).d is None
    assert certify_distance(ex1, [1, 1, 0, 0, 0, 0, 0]).d is None


def test_eg_distance_certificate():
    from pseudocone import eg_point_hyperplane_H

    H = eg_point_hyperplane_H(3, 2, "cyclic")
    p = certify_distance(H, polynomial_vector(63, [0, 23, 33, 36, 37]))
    assert (p.n, p.k, p.d, p.d_source) == (63, 48, 5, "bound-plus-witness")
