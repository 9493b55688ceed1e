"""Exhaustive and seeded-random checks of the Gray-map structure theorems.

Each claim compares two sides that are computed along different routes from
the primitive operators.  Point claims (isometry and the three commutation
identities) range over words or pairs of words; code claims range over
families of codes built from generators, shift orbits, or explicit subsets.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .chain_ring import ChainRing, all_words, make_ring, ring_label
from .codes import (
    Code,
    FieldCode,
    gray_image,
    is_constacyclic,
    is_distance_invariant,
    is_ideal,
    is_linear,
    is_quasicyclic,
    min_hamming,
    min_hom_distance,
    span,
)
from .gray_map import gray, hom_word_weight
from .shifts import (
    ONE,
    ONE_MINUS,
    ONE_PLUS,
    UnitSpec,
    _permute_blocks,
    beta,
    constacyclic_shift,
    inverse_of_n,
    mu_bar,
    mu_bar_sq,
    nechaev_perm,
    pi_block,
    quasi_shift,
)

POINT_CLAIMS = ("isometry", "phi_nu", "phi_mu", "phi_mu2")
CODE_CLAIMS = (
    "constacyclic_iff_qc",
    "cyclic_correspondence",
    "plus_correspondence_literal",
    "plus_correspondence_corrected",
    "distance_invariance",
)
CLAIMS = POINT_CLAIMS + CODE_CLAIMS

# verdicts of these claims are reported but do not fail a suite
INFORMATIONAL = frozenset({"plus_correspondence_literal"})

MUTATIONS = ("wrong_n_prime", "left_rotation")

EXHAUSTIVE_LIMIT = 1 << 20
# exhaustive code families enumerate one code per word of R^n
EXHAUSTIVE_CODE_LIMIT = 1 << 10
CODE_CAP = 1 << 16
MAX_SHOWN = 10
_CHUNK = 1 << 14

_FAMILIES = {
    "constacyclic_iff_qc": ("orbit:" + ONE_MINUS, "span", "subset", "orbit-subset"),
    "cyclic_correspondence": ("orbit:" + ONE, "span", "orbit:" + ONE_MINUS),
    "plus_correspondence_literal": ("orbit:" + ONE_PLUS, "span", "orbit:" + ONE_MINUS),
    "plus_correspondence_corrected": ("orbit:" + ONE_PLUS, "span", "orbit:" + ONE_MINUS),
    "distance_invariance": ("orbit:" + ONE_MINUS,),
}
_EXHAUSTIVE_FAMILIES = {
    "constacyclic_iff_qc": ("orbit:" + ONE_MINUS, "span"),
    "cyclic_correspondence": ("orbit:" + ONE, "span"),
    "plus_correspondence_literal": ("orbit:" + ONE_PLUS, "span"),
    "plus_correspondence_corrected": ("orbit:" + ONE_PLUS, "span"),
    "distance_invariance": ("orbit:" + ONE_MINUS,),
}


@dataclass(frozen=True)
class CheckPlan:
    claim: str
    ring: object
    n: int
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 64
    code: dict | None = None
    mutation: str | None = None

    def __post_init__(self):
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}; expected one of {CLAIMS}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.mutation is not None and self.mutation not in MUTATIONS:
            raise ValueError(f"unknown mutation {self.mutation!r}")


@dataclass
class CheckReport:
    claim: str
    ring: str
    n: int
    mode: str
    examined: int
    failures: list = field(default_factory=list)
    seed: int | None = None
    informational: bool = False
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def ok(self) -> bool:
        return self.informational or not self.failures

    def to_dict(self, max_failures: int = MAX_SHOWN) -> dict:
        return {
            "claim": self.claim,
            "ring": self.ring,
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "examined": self.examined,
            "failure_count": len(self.failures),
            "failures": self.failures[:max_failures],
            "verdict": self.verdict,
            "informational": self.informational,
            "stats": self.stats,
        }


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


def _failure(**kw):
    return {k: _jsonable(v) for k, v in kw.items()}


# -- point claims ---------------------------------------------------------------


def _word_domain(ring: ChainRing, n: int, plan: CheckPlan, rng):
    total = ring.order**n
    if plan.mode == "exhaustive":
        if total > EXHAUSTIVE_LIMIT:
            raise ValueError(f"{total} words exceed the exhaustive limit {EXHAUSTIVE_LIMIT}; use random mode")
        return all_words(ring, n)
    return rng.integers(0, ring.order, size=(plan.count, n), dtype=np.int64)


def _check_isometry(ring, n, plan, rng, report):
    if plan.mode == "exhaustive":
        total = ring.order ** (2 * n)
        if total > EXHAUSTIVE_LIMIT:
            raise ValueError(f"{total} pairs exceed the exhaustive limit {EXHAUSTIVE_LIMIT}; use random mode")
        words = all_words(ring, n)
        images = gray(ring, words)
        step = max(1, (1 << 22) // (words.shape[0] * images.shape[1]))
        for start in range(0, words.shape[0], step):
            xs = words[start : start + step]
            hom = hom_word_weight(ring, ring.sub(xs[:, None, :], words[None, :, :]))
            ham = np.count_nonzero(images[start : start + step, None, :] != images[None, :, :], axis=-1)
            for i, j in zip(*np.nonzero(hom != ham)):
                report.failures.append(
                    _failure(x=xs[i], y=words[j], hom_distance=hom[i, j], hamming_distance=ham[i, j])
                )
        report.examined = int(total)
        return
    xs = rng.integers(0, ring.order, size=(plan.count, n), dtype=np.int64)
    ys = rng.integers(0, ring.order, size=(plan.count, n), dtype=np.int64)
    hom = hom_word_weight(ring, ring.sub(xs, ys))
    ham = np.count_nonzero(gray(ring, xs) != gray(ring, ys), axis=-1)
    for i in np.nonzero(hom != ham)[0]:
        report.failures.append(_failure(x=xs[i], y=ys[i], hom_distance=hom[i], hamming_distance=ham[i]))
    report.examined = plan.count


def _pi(ring, n, plan, w):
    p, k, e = ring.p, ring.k, ring.e
    if plan.mutation == "wrong_n_prime":
        wrong = (inverse_of_n(n, p) + 1) % p
        return _permute_blocks(w, p, k, e, n, nechaev_perm(n, p, wrong))
    return pi_block(w, p, k, e, n)


def _point_sides(claim, ring, n, plan, xs):
    p, k, e = ring.p, ring.k, ring.e
    if claim == "phi_nu":
        lhs = gray(ring, constacyclic_shift(ring, xs, ONE_MINUS))
        img = gray(ring, xs)
        if plan.mutation == "left_rotation":
            blocks = img.reshape(img.shape[0], p ** (k * e - 1), p * n)
            rhs = np.roll(blocks, -1, axis=-1).reshape(img.shape)
        else:
            rhs = quasi_shift(img, p, k, e, n)
    elif claim == "phi_mu":
        lhs = gray(ring, mu_bar(ring, xs))
        rhs = _pi(ring, n, plan, gray(ring, xs))
    else:
        lhs = gray(ring, mu_bar_sq(ring, xs))
        rhs = _pi(ring, n, plan, _pi(ring, n, plan, gray(ring, xs)))
    return lhs, rhs


def _check_commutation(ring, n, plan, rng, report):
    if plan.claim in ("phi_mu", "phi_mu2"):
        inverse_of_n(n, ring.p)
    words = _word_domain(ring, n, plan, rng)
    for start in range(0, words.shape[0], _CHUNK):
        xs = words[start : start + _CHUNK]
        lhs, rhs = _point_sides(plan.claim, ring, n, plan, xs)
        for i in np.nonzero((lhs != rhs).any(axis=1))[0]:
            report.failures.append(_failure(x=xs[i], lhs=lhs[i], rhs=rhs[i]))
    report.examined = int(words.shape[0])


# -- code families ---------------------------------------------------------------


def random_generators(ring: ChainRing, n: int, rng, count: int) -> np.ndarray:
    """Random words, each scaled by a random power gamma^v (0 <= v <= e)."""
    words = rng.integers(0, ring.order, size=(count, n), dtype=np.int64)
    scale = np.array([ring.gamma_power(int(v)) for v in rng.integers(0, ring.e + 1, size=count)])
    return ring.mul(words, scale[:, None])


def shift_orbit(ring: ChainRing, words, unit) -> np.ndarray:
    """All images of the given words under repeated constacyclic shifts."""
    out = [np.atleast_2d(np.asarray(words, dtype=np.int64))]
    cur = out[0]
    n = cur.shape[1]
    lam = UnitSpec.parse(unit).resolve(ring)
    # nu^n is scaling by lam, whose order divides |R|
    for _ in range(n * ring.order):
        cur = constacyclic_shift(ring, cur, lam)
        if np.array_equal(cur, out[0]):
            break
        out.append(cur)
    return np.concatenate(out)


def build_code(ring: ChainRing, n: int, kind: str, gens) -> Code:
    if kind.startswith("orbit:"):
        unit = kind.split(":", 1)[1]
        words = span(ring, shift_orbit(ring, gens, unit), n, CODE_CAP)
        return Code(ring, n, unit, words=words)
    if kind == "span":
        return Code(ring, n, ONE, words=span(ring, gens, n, CODE_CAP))
    if kind == "subset":
        return Code(ring, n, ONE_MINUS, words=np.concatenate([np.zeros((1, n), dtype=np.int64), gens]))
    if kind == "orbit-subset":
        orbit = shift_orbit(ring, gens, ONE_MINUS)
        return Code(ring, n, ONE_MINUS, words=np.concatenate([np.zeros((1, n), dtype=np.int64), orbit]))
    raise ValueError(f"unknown code family {kind!r}")


def _code_samples(ring, n, plan, rng):
    """Yield (label, Code) pairs for a code-level plan."""
    if plan.code is not None:
        code = Code.from_spec({**plan.code, "ring": plan.code.get("ring", ring.to_spec())})
        yield "given", code
        return
    if plan.mode == "exhaustive":
        total = ring.order**n
        if total > EXHAUSTIVE_CODE_LIMIT:
            raise ValueError(f"{total} generators exceed the exhaustive code limit; use random mode")
        seen = set()
        for kind in _EXHAUSTIVE_FAMILIES[plan.claim]:
            for g in all_words(ring, n):
                code = build_code(ring, n, kind, g[None, :])
                key = (kind, code.codewords().tobytes())
                if key in seen:
                    continue
                seen.add(key)
                yield kind, code
        return
    kinds = _FAMILIES[plan.claim]
    for i in range(plan.count):
        kind = kinds[i % len(kinds)]
        gens = random_generators(ring, n, rng, int(rng.integers(1, 3)))
        yield kind, build_code(ring, n, kind, gens)


def _ideal_consistency(code: Code, unit, failures, stats, tag):
    lam = UnitSpec.parse(unit)
    via_poly = is_ideal(code, lam)
    via_sets = is_linear(code) and is_constacyclic(code, lam)
    stats["ideal_consistency_checks"] = stats.get("ideal_consistency_checks", 0) + 1
    if via_poly != via_sets:
        failures.append(
            _failure(kind="ideal_consistency", code=tag, unit=str(lam), is_ideal=via_poly, linear_and_constacyclic=via_sets)
        )
    return via_sets


def _count(stats, key):
    stats[key] = stats.get(key, 0) + 1


def _check_code(ring: ChainRing, n: int, plan: CheckPlan, label: str, code: Code, report: CheckReport):
    claim = plan.claim
    stats = report.stats
    fails = report.failures
    p, k, e = ring.p, ring.k, ring.e
    tag = {"family": label, "size": int(len(code)), "words": code.codewords()[:8].tolist()}

    if claim == "constacyclic_iff_qc":
        lhs = is_constacyclic(code, ONE_MINUS)
        rhs = is_quasicyclic(gray_image(code))
        _count(stats, "constacyclic" if lhs else "not_constacyclic")
        if lhs != rhs:
            fails.append(_failure(code=tag, constacyclic=lhs, gray_quasicyclic=rhs))
        _ideal_consistency(code, ONE_MINUS, fails, stats, tag)
        return

    if claim == "distance_invariance":
        fc = gray_image(code)
        if not (is_linear(code) and is_constacyclic(code, ONE_MINUS)):
            fails.append(_failure(code=tag, reason="sampled code is not linear (1-g^e)-constacyclic"))
            return
        checks = {
            "injective": fc.unique().shape[0] == len(code),
            "quasicyclic": is_quasicyclic(fc),
            "distance_invariant": is_distance_invariant(fc),
        }
        if len(code) >= 2:
            checks["min_distance_match"] = min_hom_distance(code) == min_hamming(fc)
        if not all(checks.values()):
            fails.append(_failure(code=tag, **checks))
        _ideal_consistency(code, ONE_MINUS, fails, stats, tag)
        return

    if claim == "cyclic_correspondence":
        source_unit, target_unit, transform, squares = ONE, ONE_MINUS, mu_bar, False
    elif claim == "plus_correspondence_literal":
        source_unit, target_unit, transform, squares = ONE_PLUS, ONE_PLUS, mu_bar_sq, True
    else:
        source_unit, target_unit, transform, squares = ONE_PLUS, ONE_MINUS, mu_bar_sq, True

    lhs = _ideal_consistency(code, source_unit, fails, stats, tag)
    image = code.mapped(lambda w: transform(ring, w), unit=target_unit)
    rhs = _ideal_consistency(image, target_unit, fails, stats, tag)
    _count(stats, "source_true" if lhs else "source_false")
    if lhs != rhs:
        fails.append(_failure(kind="correspondence", code=tag, source=lhs, image=rhs))
    if lhs and claim != "plus_correspondence_literal":
        img = gray(ring, code.codewords())
        img = pi_block(img, p, k, e, n)
        if squares:
            img = pi_block(img, p, k, e, n)
        if not is_quasicyclic(FieldCode(p, k, img, e, n)):
            fails.append(_failure(kind="permuted_gray_image_not_quasicyclic", code=tag))


def run_check(plan: CheckPlan) -> CheckReport:
    ring = make_ring(plan.ring)
    rng = np.random.default_rng(plan.seed)
    report = CheckReport(
        claim=plan.claim,
        ring=ring_label(ring),
        n=plan.n,
        mode=plan.mode if plan.code is None else "given",
        examined=0,
        seed=plan.seed if plan.mode == "random" else None,
        informational=plan.claim in INFORMATIONAL,
    )
    if ring.outside_hypothesis:
        report.stats["outside_hypothesis"] = True
    if plan.claim in ("phi_mu", "phi_mu2", "cyclic_correspondence") or plan.claim.startswith("plus"):
        n_prime, b = beta(ring, plan.n)
        report.stats.update(n_prime=n_prime, beta=b)
    t0 = time.perf_counter()
    if plan.claim == "isometry":
        _check_isometry(ring, plan.n, plan, rng, report)
    elif plan.claim in POINT_CLAIMS:
        _check_commutation(ring, plan.n, plan, rng, report)
    else:
        for label, code in _code_samples(ring, plan.n, plan, rng):
            _check_code(ring, plan.n, plan, label, code, report)
            report.examined += 1
    report.seconds = time.perf_counter() - t0
    return report


def run_suite(plans) -> list[CheckReport]:
    return [run_check(plan) for plan in plans]


def suite_passed(reports) -> bool:
    return all(r.ok for r in reports)


def desk_suite(seed: int = 2024, count: int = 40) -> list[CheckPlan]:
    """The default desk-scale suite."""
    plans = [
        CheckPlan("isometry", "z8", 2),
        CheckPlan("isometry", "z27", 1),
        CheckPlan("isometry", "f4u3", 1),
        CheckPlan("isometry", "z4", 3),
        CheckPlan("isometry", "z27", 3, mode="random", seed=seed, count=20000),
        CheckPlan("phi_nu", "z8", 3),
        CheckPlan("phi_nu", "z27", 2),
        CheckPlan("phi_nu", "f4u3", 2),
        CheckPlan("phi_nu", "z4", 4),
        CheckPlan("phi_nu", "f9u3", 2, mode="random", seed=seed, count=2000),
    ]
    for claim in ("phi_mu", "phi_mu2"):
        plans += [
            CheckPlan(claim, "z8", 3),
            CheckPlan(claim, "z27", 2),
            CheckPlan(claim, "f4u3", 3),
            CheckPlan(claim, "f9u3", 2, mode="random", seed=seed, count=2000),
        ]
    plans += [
        CheckPlan("constacyclic_iff_qc", "z8", 3),
        CheckPlan("constacyclic_iff_qc", "z27", 2),
        CheckPlan("constacyclic_iff_qc", "z27", 2, mode="random", seed=seed, count=count),
        CheckPlan("constacyclic_iff_qc", "f4u3", 2, mode="random", seed=seed, count=count // 2),
    ]
    for claim in ("cyclic_correspondence", "plus_correspondence_corrected", "plus_correspondence_literal"):
        plans += [
            CheckPlan(claim, "z8", 3),
            CheckPlan(claim, "z27", 2),
            CheckPlan(claim, "z8", 3, mode="random", seed=seed, count=count),
            CheckPlan(claim, "z27", 2, mode="random", seed=seed, count=count),
        ]
    plans += [
        CheckPlan("distance_invariance", "z8", 3),
        CheckPlan("distance_invariance", "z27", 2),
        CheckPlan("distance_invariance", "f4u3", 2, mode="random", seed=seed, count=count // 4),
    ]
    return plans


def summary_table(reports) -> str:
    header = f"{'claim':32s} {'ring':6s} {'n':>2s} {'mode':10s} {'examined':>9s} {'fails':>6s}  verdict"
    lines = [header, "-" * len(header)]
    for r in reports:
        verdict = r.verdict.upper()
        if r.informational:
            verdict += " (informational)"
        lines.append(
            f"{r.claim:32s} {r.ring:6s} {r.n:2d} {r.mode:10s} {r.examined:9d} {len(r.failures):6d}  {verdict}"
        )
    lines.append(f"suite: {'PASS' if suite_passed(reports) else 'FAIL'}")
    return "\n".join(lines)


def write_reports(reports, out_dir) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i, r in enumerate(reports):
        name = f"{i:02d}_{r.claim}_{r.ring}_n{r.n}.json"
        (out / name).write_text(json.dumps(r.to_dict(), indent=2, sort_keys=True))
    summary = {"passed": suite_passed(reports), "reports": [r.to_dict(max_failures=0) for r in reports]}
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True))
    return out
