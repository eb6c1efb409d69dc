import numpy as np
import pytest

import cuntzpos


def scalar(a0, alpha):
    return np.array([[a0]], dtype=complex), [np.array([[a]], dtype=complex) for a in alpha]


def test_boundary_instance_is_positive_with_zero_b():
    a0, a = scalar(1.0, [0.5, 0.0])
    r = cuntzpos.decide_positivity(a0, a)
    assert r["verdict"] == "positive"
    assert abs(r["B"][0, 0]) <= 1e-6
    assert cuntzpos.verify_primal(a0, a, r["B"])


def test_refuted_instance_carries_witnesses():
    a0, a = scalar(1.0, [0.6, 0.0])
    r = cuntzpos.decide_positivity(a0, a, d_max=6)
    assert r["verdict"] == "not_positive"
    assert cuntzpos.verify_dual(a0, a, r["Y"])
    w = r["fock_witness"]
    assert w["depth"] <= 6 and w["eigmin"] < 0
    assert np.isclose(np.linalg.norm(w["vector"]), 1.0)


def test_criterion_matrix_layout():
    a0, a = scalar(1.0, [0.3, 0.0])
    m = cuntzpos.criterion_matrix(a0, a)
    assert np.allclose(m, [[1, 0.6, 0], [0.6, 1, 0], [0, 0, 1]])


def test_scalar_law_matches_solver():
    rng = np.random.default_rng(3)
    for _ in range(10):
        a0 = rng.uniform(0.1, 2.0)
        alpha = rng.normal(size=2) + 1j * rng.normal(size=2)
        alpha *= rng.uniform(0, a0) / np.linalg.norm(alpha)
        if abs(np.linalg.norm(alpha) - a0 / 2) < 1e-6:
            continue
        A0, A = scalar(a0, alpha)
        expected = "positive" if cuntzpos.scalar_law(a0, list(alpha)) else "not_positive"
        assert cuntzpos.decide_positivity(A0, A)["verdict"] == expected


def test_fock_compression_and_min_eig():
    a0, a = scalar(1.0, [0.6, 0.0])
    c = cuntzpos.compress_element(a0, a, 4)
    assert c.shape == (31, 31)
    assert np.isclose(np.linalg.eigvalsh(c)[0], cuntzpos.fock_min_eig(a0, a, 4), atol=1e-9)
    l1 = cuntzpos.creation_matrix(1, 2, 2)
    l2 = cuntzpos.creation_matrix(2, 2, 2)
    assert np.allclose(l1.conj().T @ l2, 0)


def test_dilation_and_ucp():
    d = cuntzpos.dilate([np.array([[0.5]]), np.array([[0.5]])], depth=3)
    assert d["compression_residual"] <= 1e-10
    assert d["isometry_residual"] <= 1e-10
    assert np.isclose(d["V"][0][0, 0], 0.5)
    a0, a = scalar(1.0, [0.25, 0.0])
    out = cuntzpos.ucp_evaluate(a0, a, [np.array([[0.5]]), np.array([[0.5]])])
    assert np.isclose(out[0, 0], 1.25)
    with pytest.raises(ValueError):
        cuntzpos.dilate([np.array([[0.9]]), np.array([[0.9]])])


def test_choi_and_psi():
    e = lambda i, j: np.eye(2)[:, [i]] @ np.eye(2)[[j], :]
    identity = [[e(i, j) for j in range(2)] for i in range(2)]
    transpose = [[e(j, i) for j in range(2)] for i in range(2)]
    assert cuntzpos.choi_min_eig(identity) >= -1e-12
    assert np.isclose(cuntzpos.choi_min_eig(transpose), -1.0)
    assert cuntzpos.psi_choi_check(2, 3) >= -1e-10


def test_words_mul():
    assert cuntzpos.words_mul("S1.S2*", "S2.S3*", 3) == "(1,0)*S1.S3*"
    assert cuntzpos.words_mul("S1*", "S2", 2) == "0"


def test_shape_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        cuntzpos.decide_positivity(np.eye(2), [np.eye(3), np.eye(3)])
