import pytest

from bqalg.consistency3 import (
    RESIDUE_LABELS,
    Bq3,
    consistent_by_overlap,
    is_consistent3,
    residues,
)
from bqalg.field import GF, QQ
from bqalg.sampling import random_bq3


def test_zero_data_is_consistent():
    for q in ((1, 1, 1), (2, 3, 5), (QQ("1/2"), 7, -1)):
        A = Bq3.make(QQ, q1=q[0], q2=q[1], q3=q[2])
        assert residues(A).all_zero()


def test_quantum_always_consistent(rng):
    K = GF(11)
    for _ in range(100):
        q = K.random_nonzero(rng)
        kw = {name: K.random_element(rng) for name in ("c", "beta", "lam", "b1", "b2", "b3")}
        A = Bq3.make(K, q1=q, q2=1 / q, q3=q, **kw)
        assert is_consistent3(A)


def test_jacobi_counterexample_residue():
    # alpha = mu = lam = nu = 1: r_X1 = (b + gamma) lam - nu alpha = -1
    A = Bq3.make(QQ, alpha=1, mu=1, lam=1, nu=1)
    r = residues(A).as_dict()
    assert r["X1"] == -1
    assert all(v == 0 for k, v in r.items() if k != "X1")
    assert not consistent_by_overlap(A)


def test_solvable_example_with_zero_residues():
    A = Bq3.make(QQ, alpha=1, mu=1)
    assert is_consistent3(A) and consistent_by_overlap(A)


def test_usl2_consistent():
    # e, f, h = x1, x2, x3: [h, e] = 2e, [h, f] = -2f, [e, f] = h
    A = Bq3.make(QQ, c=-1, alpha=2, mu=-2)
    assert is_consistent3(A)


def test_aw3_matches_oracle():
    # w = 3 and B, C0, C1, D0, D1 = 2, 1, 5, -1, 4
    w, B, C0, C1, D0, D1 = QQ(3), 2, 1, 5, -1, 4
    A = Bq3.make(QQ, q1=w * w, q2=1 / (w * w), q3=w * w, c=-w,
                 alpha=B / w, beta=C1 / w, b2=D1 / w,
                 lam=-w * C0, mu=-w * B, b3=-w * D0)
    assert is_consistent3(A) == consistent_by_overlap(A) == True  # noqa: E712


def test_labels():
    assert tuple(residues(Bq3.make(QQ)).as_dict()) == RESIDUE_LABELS


def test_residues_after_killing_linear_terms(rng):
    # with q1 != 1 and a = b = 0: r_X1X3 = 0 iff nu = 0, r_X2X3 = 0 iff gamma = 0
    K = GF(7)
    for _ in range(200):
        A = random_bq3(K, rng, sparsity=0.5).with_(a=K.zero, b=K.zero)
        if A.q1 == 1:
            continue
        r = residues(A)
        assert (r.X1X3 == 0) == (A.nu == 0)
        assert (r.X2X3 == 0) == (A.gamma == 0)


def test_bq3_validation():
    with pytest.raises(ValueError):
        Bq3.make(QQ, q2=0)
    with pytest.raises(TypeError):
        Bq3.make(QQ, kappa=1)


def test_round_trip_through_presentation(rng):
    A = random_bq3(GF(5), rng)
    assert Bq3.from_presentation(A.to_presentation()) == A
