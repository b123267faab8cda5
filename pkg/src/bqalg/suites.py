"""Randomized and exhaustive property suites.

Each suite returns a :class:`SuiteResult`.  Called with ``trials=None`` a
suite runs at its full size; ``selftest`` passes a smaller count.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .classify import (
    CLOSURE_TABLE,
    classify3,
    closure_type,
    conformance_problems,
    pinned_params,
)
from .consistency3 import Bq3, consistent_by_overlap, is_consistent3
from .field import GF, QQ, Field
from .freealg import NcPoly
from .lie import LIE_INVARIANT_TABLE, LIE_MODELS, lie_invariants, lie_model
from .orbits import CASES, orbit_census
from .rewrite import reduce, reduce_in_order
from .sampling import (
    PERMUTATION_STABLE,
    SUBFAMILIES,
    canonical_instance,
    disguised_instance,
    random_bq3,
    random_transform,
)
from .structure import Affine, Linear, central_element, gwa_lift, structure_report, to_dpr
from .transform import all_permutations, apply


@dataclass
class SuiteResult:
    number: int
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        # keep reports readable when something goes badly wrong
        if len(self.failures) < 20:
            self.failures.append(msg)
        else:
            self.failures[-1] = "... more failures"

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = f"; {'; '.join(self.notes)}" if self.notes else ""
        return f"{verdict} [{self.number}] {self.name}: {self.checked} checks in {self.seconds:.1f}s{extra}"

    def as_dict(self) -> dict:
        return {
            "suite": self.number,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


DEFAULT_FIELDS = (QQ, GF(7), GF(11), GF(13))


def _finite(fields):
    return [K for K in fields if K.finite]


def _consistent_instance(K, rng):
    return disguised_instance(rng.choice(SUBFAMILIES), K, rng)


def _random_word(rng, n=3, max_len=6):
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


def oracle_equivalence(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(1, "explicit criterion agrees with the overlap check")
    count = 10_000 if trials is None else trials
    fields = _finite(fields or (GF(5), GF(7))) or [GF(5)]
    rng = random.Random(seed)
    consistent = 0
    uniform_seconds = 0.0
    for K in fields:
        # uniform data is almost never consistent, so sparse data and
        # one-entry perturbations of consistent data are mixed in as well
        uniform = [random_bq3(K, rng) for _ in range(count)]
        extra = [random_bq3(K, rng, sparsity=0.75) for _ in range(count // 2)]
        for _ in range(count // 4):
            A = _consistent_instance(K, rng)
            name = rng.choice([p for p in A.params() if not p.startswith("q")])
            extra.append(A.with_(**{name: getattr(A, name) + K.random_element(rng)}))
        for batch in (uniform, extra):
            start = time.perf_counter()
            for A in batch:
                fast, slow = is_consistent3(A), consistent_by_overlap(A)
                consistent += fast
                res.checked += 1
                if fast != slow:
                    res.fail(f"{K.spec}: disagreement on {A}")
            if batch is uniform:
                uniform_seconds += time.perf_counter() - start
    if uniform_seconds > 60:
        res.fail(f"uniform trials took {uniform_seconds:.1f}s (budget 60s)")
    res.notes.append(f"{consistent} consistent among {res.checked}; uniform part {uniform_seconds:.1f}s")
    return res


def confluence(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(2, "leftmost and rightmost rewriting agree on consistent input")
    count = 1_000 if trials is None else trials
    fields = fields or DEFAULT_FIELDS
    rng = random.Random(seed)
    for t in range(count):
        K = fields[t % len(fields)]
        P = _consistent_instance(K, rng).to_presentation()
        for _ in range(3):
            w = _random_word(rng)
            f = NcPoly(3, K, {w: 1})
            left = reduce(f, P, strategy="leftmost")
            right = reduce(f, P, strategy="rightmost")
            res.checked += 1
            if left != right:
                res.fail(f"{K.spec}: word {w} on\n{P}")
    return res


def reordered_bases(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(3, "normal forms in every generator order round-trip")
    count = 200 if trials is None else trials
    fields = fields or DEFAULT_FIELDS
    rng = random.Random(seed)
    for t in range(count):
        K = fields[t % len(fields)]
        P = _consistent_instance(K, rng).to_presentation()
        f = NcPoly(3, K, {_random_word(rng, max_len=4): 1, _random_word(rng, max_len=4): K.random_nonzero(rng, 3)})
        base = reduce(f, P)
        for order in all_permutations(3):
            res.checked += 1
            try:
                g = reduce_in_order(f, P, order)
            except Exception as e:  # noqa: BLE001
                res.fail(f"{K.spec}: order {order} raised {e!r}")
                continue
            if reduce(g, P) != base:
                res.fail(f"{K.spec}: order {order} does not round-trip on\n{P}")
    return res


def classification_invariance(trials=None, fields=None, seed=0, per_instance=20) -> SuiteResult:
    res = SuiteResult(4, "classification is invariant under the group action")
    count = 500 if trials is None else trials
    fields = fields or DEFAULT_FIELDS
    rng = random.Random(seed)
    for fam in SUBFAMILIES:
        with_perm = fam in PERMUTATION_STABLE
        for t in range(count):
            K = fields[t % len(fields)]
            A = disguised_instance(fam, K, rng)
            cf0, _ = classify3(A)
            res.checked += 1
            if not cf0.family.startswith(fam):
                res.fail(f"{K.spec}: {fam} instance classified as {cf0.family}")
                continue
            probs = conformance_problems(cf0)
            if probs:
                res.fail(f"{K.spec}: {cf0.family} not conformant: {probs}")
            for _ in range(per_instance):
                g = random_transform(K, rng, with_perm=with_perm)
                cf, _ = classify3(apply(A, g))
                res.checked += 1
                if cf.family != cf0.family:
                    res.fail(f"{K.spec}: {cf0.family} became {cf.family} under {g}")
                    continue
                probs = conformance_problems(cf)
                if probs:
                    res.fail(f"{K.spec}: {cf.family} not conformant after g: {probs}")
                if g.has_permutation():
                    continue
                if (pinned_params(cf) != pinned_params(cf0) or cf.invariant != cf0.invariant
                        or cf.case != cf0.case):
                    res.fail(f"{K.spec}: {cf.family} parameters moved under {g}: "
                             f"{cf0.params} vs {cf.params}")
    res.notes.append("permutations included for " + ", ".join(sorted(PERMUTATION_STABLE)))
    return res


def orbit_bijection(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(5, "torus orbits match invariant fibers")
    fields = _finite(fields or ()) or [GF(7), GF(11)]
    start = time.perf_counter()
    counts = []
    for K in fields:
        for dense in (True, False):
            for case in CASES:
                c = orbit_census(case, K, dense_only=dense)
                res.checked += 1
                where = f"GF({K.characteristic}) case {case} {'dense' if dense else 'all'}"
                if not c.fibers_match:
                    res.fail(f"{where}: orbits and invariant fibers differ")
                if c.orbits != c.invariant_values:
                    res.fail(f"{where}: {c.orbits} orbits but {c.invariant_values} invariant values")
                if not c.representatives_ok:
                    res.fail(f"{where}: representative list mismatch")
                counts.append(f"{K.characteristic}/{case}{'d' if dense else ''}={c.orbits}")
    elapsed = time.perf_counter() - start
    if elapsed > 30:
        res.fail(f"census took {elapsed:.1f}s (budget 30s)")
    res.notes.append(" ".join(counts))
    return res


# groups of the proof: dim Z -> tags
LIE_GROUPING = {1: {"Usl2", "UN_mod", "UM_mod"}, 2: {"UH3", "Un2xKz"}, 4: {"P3"}}


def lie_classification(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(6, "Lie-type models and their invariants")
    fields = fields or (QQ, GF(7))
    rng = random.Random(seed)
    count = 20 if trials is None else trials
    for K in fields:
        tags = set()
        for tag in LIE_MODELS:
            A = lie_model(tag, K)
            cf, _ = classify3(A)
            got = cf.family.split(".")[1]
            tags.add(got)
            res.checked += 1
            if got != tag:
                res.fail(f"{K.spec}: model {tag} classified as {got}")
            inv = lie_invariants(A)
            triple = (inv.center_dim, inv.nilpotent, inv.solvable)
            if triple != LIE_INVARIANT_TABLE[tag]:
                res.fail(f"{K.spec}: {tag} has invariants {triple}")
            if tag not in LIE_GROUPING.get(inv.center_dim, ()):
                res.fail(f"{K.spec}: {tag} has center dimension {inv.center_dim}")
        if len(tags) != 6:
            res.fail(f"{K.spec}: only {len(tags)} distinct tags")
        for _ in range(count):
            A = canonical_instance("LieType", K, rng)
            cf, _ = classify3(A)
            res.checked += 1
            probs = conformance_problems(cf)
            if probs:
                res.fail(f"{K.spec}: {cf.family}: {probs}")
    return res


GWA_FAMILIES = ("OneQ.MuAlphaNonzero", "OneQ.MuAlphaZero", "TwoQ.Q1Q2Unit")


def gwa_verification(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(7, "generalized Weyl relations hold symbolically")
    count = 30 if trials is None else trials
    fields = fields or DEFAULT_FIELDS
    rng = random.Random(seed)
    central = 0
    for fam in GWA_FAMILIES:
        for t in range(count):
            K = fields[t % len(fields)]
            cf, _ = classify3(disguised_instance(fam, K, rng))
            rep = structure_report(cf)
            res.checked += 1
            central += rep["central_element"] is not None
            if not rep["verified"]:
                bad = [k for k, ok in rep["checks"].items() if not ok]
                res.fail(f"{K.spec}: {cf.family} fails {bad}")
    # the printed instances
    for K in (f for f in fields if not f.finite or f.characteristic > 3):
        cf, _ = classify3(Bq3.make(K, q1=2, alpha=1))
        D = to_dpr(cf)
        res.checked += 1
        if (D.sigma, D.tau, D.rho, D.b) != (Affine(1, 0), Affine(1, -1), K(2), Linear(0, 0)):
            res.fail(f"{K.spec}: MuAlphaNonzero(1, 0) gives {D.as_dict()}")
        G = gwa_lift(D)
        if G.sigma_h != Linear(h=K(2)) or G.tau_h != Linear(h=1 / K(2)):
            res.fail(f"{K.spec}: lift of MuAlphaNonzero(1, 0) is {G.as_dict()}")
        cf, _ = classify3(Bq3.make(K, q1=2, q2=1 / K(2), lam=1))
        D = to_dpr(cf)
        alpha = central_element(D)
        res.checked += 1
        if D.sigma != Affine(1 / K(2), 0) or D.rho != 1 or D.b != Linear(1, 0):
            res.fail(f"{K.spec}: Q1Q2Unit(1, 0) gives {D.as_dict()}")
        if alpha != Linear(t=K(2), const=K.zero):
            res.fail(f"{K.spec}: central element {alpha}")
        central += alpha is not None
        rep = structure_report(cf)
        if not rep["verified"]:
            res.fail(f"{K.spec}: Q1Q2Unit(1, 0) central element checks {rep['checks']}")
    if central == 0:
        res.fail("no instance had a central element")
    res.notes.append(f"{central} instances with a central element")
    return res


def _crafted_quantum(K, q, item, bits):
    """A quantum presentation whose canonical form should be the closure item ``(item, bits)``."""
    one = K.one
    kw = {"q1": q, "q2": 1 / q, "q3": q}
    if item == 1:
        kw.update(c=one, beta=one, lam=one)
    elif item == 2:
        kw.update(c=one, beta=one, b3=bits[0])
    elif item == 3:
        kw.update(c=one, b2=bits[0], b3=bits[1])
    else:
        kw.update(b1=bits[0], b2=bits[1], b3=bits[2])
    return Bq3.make(K, **kw)


def quantum_classification(trials=None, fields=None, seed=0) -> SuiteResult:
    res = SuiteResult(8, "quantum algebras: the so3 example and the closure list")
    fields = fields or (QQ, GF(7), GF(13))
    rng = random.Random(seed)
    if any(not K.finite for K in fields):
        K = QQ
        A = Bq3.make(K, q1=4, q2=K(1) / 4, q3=4, c=-2, beta=K(1) / 2, lam=-2)
        cf, _ = classify3(A)
        reps = tuple(c.representative for c in cf.invariant.classes) if cf.invariant else ()
        res.checked += 1
        if cf.family != "ThreeQ.Quantum" or cf.case != 1 or reps != (K(-1), K(1)):
            res.fail(f"so3 at q=4 gave {cf.family} case {cf.case} classes {reps}")
    for K in _finite(fields):
        q = next(x for x in K.nonzero_elements() if x != 1 and x * x != 1)
        # crafted inputs behind random shifts and scalings; permutations are left
        # out because they multiply the coefficients by -q and so move the classes
        for entry in CLOSURE_TABLE:
            A = _crafted_quantum(K, q, *entry)
            for _ in range(5):
                g = random_transform(K, rng, with_perm=False)
                cf, _ = classify3(apply(A, g))
                res.checked += 1
                got = closure_type(cf)
                if got != entry:
                    res.fail(f"{K.spec}: crafted {entry} came back as {got}")
        # every shape with unit entries, and which of them survive with trivial classes
        seen = set()
        vals = (K.zero, K.one)
        for c in vals:
            for beta in vals:
                for lam in vals:
                    for b1 in vals:
                        for b2 in vals:
                            for b3 in vals:
                                A = Bq3.make(K, q1=q, q2=1 / q, q3=q, c=c, beta=beta, lam=lam,
                                             b1=b1, b2=b2, b3=b3)
                                if not is_consistent3(A):
                                    continue
                                cf, _ = classify3(A)
                                res.checked += 1
                                got = closure_type(cf)
                                if got is None:
                                    continue
                                if got not in CLOSURE_TABLE:
                                    res.fail(f"{K.spec}: unlisted closure type {got}")
                                seen.add(got)
        if seen != set(CLOSURE_TABLE):
            res.fail(f"{K.spec}: closure types reached {sorted(seen)}")
    res.notes.append(f"{len(CLOSURE_TABLE)} closure types")
    return res


SUITES = {
    1: oracle_equivalence,
    2: confluence,
    3: reordered_bases,
    4: classification_invariance,
    5: orbit_bijection,
    6: lie_classification,
    7: gwa_verification,
    8: quantum_classification,
}

# trial counts used by ``bqalg selftest`` unless --trials is given
SELFTEST_TRIALS = {1: 500, 2: 100, 3: 20, 4: 10, 5: None, 6: 10, 7: 10, 8: None}


def run_suite(number: int, trials=None, fields=None, seed=0) -> SuiteResult:
    start = time.perf_counter()
    res = SUITES[number](trials=trials, fields=fields, seed=seed)
    res.seconds = time.perf_counter() - start
    return res


def selftest(trials: int | None = None, field: Field | None = None, seed=0):
    """All suites at reduced size, or ``trials`` per random suite; restricted to ``field`` if given."""
    fields = (field,) if field is not None else None
    out = []
    for number in SUITES:
        if field is not None and not field.finite and number == 5:
            continue
        count = trials if trials is not None else SELFTEST_TRIALS[number]
        out.append(run_suite(number, trials=count, fields=fields, seed=seed))
    return out
