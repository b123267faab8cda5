import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from bqalg.classify import classify3, conformance_problems
from bqalg.consistency3 import Bq3, is_consistent3, residues
from bqalg.field import GF, QQ, same_class
from bqalg.freealg import NcPoly, Ordering, deglex_compare, parse_expr, render
from bqalg.rewrite import BqPresentation, overlap_check, reduce
from bqalg.sampling import SUBFAMILIES, disguised_instance, random_bq3, random_transform
from bqalg.transform import MonomialAffineTransform, apply, compose

FIELDS = (QQ, GF(5), GF(7), GF(13))
fields = st.sampled_from(FIELDS)
seeds = st.integers(0, 2**32 - 1)
small = st.integers(-6, 6)


def elements(K):
    if K.finite:
        return st.integers(0, K.characteristic - 1).map(K)
    return st.fractions(min_value=-5, max_value=5, max_denominator=4).map(
        lambda f: K.parse(f"{f.numerator}/{f.denominator}"))


@st.composite
def field_and_values(draw, count):
    K = draw(fields)
    return K, [draw(elements(K)) for _ in range(count)]


@st.composite
def polys(draw, K, n=3, max_terms=3, max_len=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        w = tuple(draw(st.lists(st.integers(1, n), max_size=max_len)))
        terms[w] = terms.get(w, K.zero) + draw(elements(K))
    return NcPoly(n, K, terms)


# field


@given(field_and_values(3))
def test_distributivity(data):
    K, (x, y, z) = data
    assert (x + y) * z == x * z + y * z
    assert x + (y - x) == y


@given(st.sampled_from([5, 7, 11, 13]), st.sampled_from([2, 3, 4]), st.data())
def test_power_class_absorbs_nth_powers(p, n, data):
    K = GF(p)
    x = K(data.draw(st.integers(1, p - 1)))
    for t in K.nonzero_elements():
        assert K.power_class(x * t ** n, n) == K.power_class(x, n)


@given(st.sampled_from([7, 13]), st.sampled_from([2, 3, 4]))
def test_same_class_matches_power_class(p, n):
    K = GF(p)
    for x, y in itertools.product(K.nonzero_elements(), repeat=2):
        assert same_class(x, y, n) == (K.power_class(x, n) == K.power_class(y, n))


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 30), st.sampled_from([2, 3]))
def test_rational_power_class_absorbs_powers(a, b, t, n):
    x = QQ(a) / QQ(b)
    assert QQ.power_class(x * QQ(t) ** n, n) == QQ.power_class(x, n)
    assert QQ.power_class(-x, 2) != QQ.power_class(x, 2)


# free algebra


def test_deglex_is_a_monomial_order():
    words = [w for k in range(4) for w in itertools.product((1, 2, 3), repeat=k)]
    for u, v in itertools.product(words, repeat=2):
        if deglex_compare(u, v) != Ordering.LT:
            continue
        assert deglex_compare(v, u) == Ordering.GT
        for w in ((1,), (3, 2)):
            assert deglex_compare(w + u, w + v) == Ordering.LT
            assert deglex_compare(u + w, v + w) == Ordering.LT


@given(fields.flatmap(lambda K: st.tuples(polys(K), polys(K), polys(K))))
def test_ring_laws(fgh):
    f, g, h = fgh
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(fields.flatmap(polys))
def test_render_parse_round_trip(f):
    assert parse_expr(render(f), 3, f.K) == f


# rewriting


@given(fields, seeds, st.sampled_from(SUBFAMILIES))
def test_two_strategies_agree_when_consistent(K, seed, family):
    rng = random.Random(seed)
    P = disguised_instance(family, K, rng).to_presentation()
    w = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 6)))
    f = NcPoly(3, K, {w: K.one})
    assert reduce(f, P, "leftmost") == reduce(f, P, "rightmost")


@given(st.sampled_from([QQ, GF(7)]), seeds, st.data())
def test_reduction_is_multiplicative(K, seed, data):
    P = disguised_instance("ThreeQ.Quantum", K, random.Random(seed)).to_presentation()
    f, g = data.draw(polys(K, max_len=2)), data.draw(polys(K, max_len=2))
    assert reduce(f * g, P) == reduce(reduce(f, P) * reduce(g, P), P)


@given(fields, seeds)
def test_overlap_differences_have_degree_at_most_two(K, seed):
    P = random_bq3(K, random.Random(seed)).to_presentation()
    for r in overlap_check(P):
        assert max(len(w) for w in r.difference.terms) <= 2


@given(fields, st.lists(small, min_size=4, max_size=4))
def test_two_generators_have_no_overlaps(K, vals):
    q, a, b, c = (K(v) for v in vals)
    if q == 0:
        q = K.one
    assert overlap_check(BqPresentation.build(2, K, [q], [[a, b]], [c])) == []


# consistency


@given(fields, seeds, st.floats(0, 0.8))
def test_explicit_criterion_matches_overlaps(K, seed, sparsity):
    A = random_bq3(K, random.Random(seed), sparsity=sparsity)
    assert is_consistent3(A) == (not overlap_check(A.to_presentation()))


@given(fields, seeds)
def test_residues_track_nu_and_gamma(K, seed):
    rng = random.Random(seed)
    A = random_bq3(K, rng, sparsity=0.3)
    if A.q1 == 1:
        return
    A = Bq3.make(K, **{**A.params(), "a": K.zero, "b": K.zero})
    r = residues(A).as_dict()
    assert (r["X1X3"] == 0) == (A.nu == 0)
    assert (r["X2X3"] == 0) == (A.gamma == 0)


# transforms


@given(fields, seeds)
def test_action_law(K, seed):
    rng = random.Random(seed)
    A = random_bq3(K, rng)
    g, h = random_transform(K, rng), random_transform(K, rng)
    assert apply(apply(A, g), h) == apply(A, compose(h, g))
    assert apply(A, MonomialAffineTransform.identity(K, 3)) == A


@given(fields, seeds)
def test_consistency_preserved(K, seed):
    rng = random.Random(seed)
    A = random_bq3(K, rng, sparsity=0.5)
    assert is_consistent3(A) == is_consistent3(apply(A, random_transform(K, rng)))


@given(fields, seeds)
def test_q_fixed_without_permutation(K, seed):
    rng = random.Random(seed)
    A = random_bq3(K, rng)
    B = apply(A, random_transform(K, rng, with_perm=False))
    assert (B.q1, B.q2, B.q3) == (A.q1, A.q2, A.q3)


# classification


@given(st.sampled_from([QQ, GF(11), GF(13)]), seeds, st.sampled_from(SUBFAMILIES))
def test_classifier_family_invariant(K, seed, family):
    rng = random.Random(seed)
    A = disguised_instance(family, K, rng)
    cf, _ = classify3(A)
    cf2, _ = classify3(apply(A, random_transform(K, rng, with_perm=False)))
    assert cf.family == cf2.family
    assert conformance_problems(cf2) == []
    assert is_consistent3(cf2.presentation) or cf2.top == "LieType"
