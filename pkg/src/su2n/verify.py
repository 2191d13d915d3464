"""Verification suites over the identities the package implements.

Each suite draws seeded random data, checks one family of identities
exactly, and reports the first counterexample if any.  The CLI runs them in
a fixed order and prints one line per suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraSpec, QuadElement
from .commutators import (
    expand_bruteforce,
    expand_closed,
    n11_preimage,
    verify_compatibility_identities,
    weyl_twist,
)
from .decompose import congruence_level, decompose, filtration_commutator_check
from .group import (
    GroupElement,
    character,
    is_member,
    root_element,
    split_torus_element,
)
from .roots import Root, chain, roots
from .sampling import (
    random_coordinate,
    random_member,
    random_symbols,
    random_unit,
)
from .words import (
    SteinbergWord,
    Symbol,
    commutator_word,
    evaluate,
    express_as_commutator,
    join_words,
    split_word,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        out = f"{status} {self.name}{extra}"
        if self.failures:
            out += f"\n  first counterexample: {self.failures[0]}"
        return out


@dataclass(frozen=True)
class VerifyConfig:
    n: int = 2
    d: Fraction = Fraction(5)
    ring_factors: tuple[int, ...] = (1,)
    seed: int = 20240001
    trials: int = 25

    @property
    def spec(self) -> AlgebraSpec:
        return AlgebraSpec(self.ring_factors, self.d)


def _member_check(result: SuiteResult, x: GroupElement, context: str) -> bool:
    if not is_member(x):
        result.failures.append(f"non-member produced: {context}")
        return False
    return True


def suite_additivity(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-additivity")
    spec = cfg.spec
    res = SuiteResult("additivity", True, f"{cfg.trials} trials/root")
    for alpha in roots(cfg.n):
        if not _member_check(
            res, root_element(alpha, random_coordinate(alpha, spec, rng)), str(alpha)
        ):
            break
        for _ in range(cfg.trials):
            v = random_coordinate(alpha, spec, rng)
            w = random_coordinate(alpha, spec, rng)
            lhs = root_element(alpha, v) @ root_element(alpha, w)
            rhs = root_element(alpha, v + w)
            if lhs != rhs:
                res.failures.append(f"alpha = {alpha}, v = {v}, w = {w}")
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_torus_action(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-torus")
    spec = cfg.spec
    res = SuiteResult("torus-action", True, f"{cfg.trials} trials/root")
    for alpha in roots(cfg.n):
        done = False
        for _ in range(cfg.trials):
            ts = [random_unit(spec, rng) for _ in range(cfg.n)]
            s = split_torus_element(cfg.n, spec, ts)
            if not _member_check(res, s, "split torus element"):
                done = True
                break
            v = random_coordinate(alpha, spec, rng)
            lhs = (s @ root_element(alpha, v)) @ s.inverse_member()
            rhs = root_element(alpha, character(alpha, ts) * v)
            if lhs != rhs:
                res.failures.append(f"alpha = {alpha}, ts = {[str(t) for t in ts]}")
                done = True
                break
        if done:
            break
    res.passed = not res.failures
    return res


def suite_constants_oracle(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-constants")
    spec = cfg.spec
    res = SuiteResult("constants-oracle", True, f"{cfg.trials} coordinate pairs/pair")
    universe = roots(cfg.n)
    for alpha in universe:
        for beta in universe:
            if alpha == beta or alpha == -beta:
                continue
            for _ in range(cfg.trials):
                u = random_coordinate(alpha, spec, rng)
                v = random_coordinate(beta, spec, rng)
                bf = expand_bruteforce(alpha, beta, u, v)
                cf = expand_closed(alpha, beta, u, v)
                if bf != cf:
                    res.failures.append(
                        f"({alpha}, {beta}) with u = {u}, v = {v}"
                    )
                    break
            if res.failures:
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_homogeneity(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-homogeneity")
    spec = cfg.spec
    res = SuiteResult("homogeneity", True, "lambda in {-1, 2, 1/3}")
    lams = [Fraction(-1), Fraction(2), Fraction(1, 3)]
    universe = roots(cfg.n)
    for alpha in universe:
        for beta in universe:
            if alpha == beta or alpha == -beta or not chain(alpha, beta):
                continue
            u = random_coordinate(alpha, spec, rng)
            v = random_coordinate(beta, spec, rng)
            base = expand_closed(alpha, beta, u, v)
            for lam in lams:
                left = expand_closed(alpha, beta, lam * u, v)
                right = expand_closed(alpha, beta, u, lam * v)
                for (term, coord), (_, lcoord), (_, rcoord) in zip(
                    base.terms, left.terms, right.terms
                ):
                    if lcoord != lam**term.i * coord or rcoord != lam**term.j * coord:
                        res.failures.append(
                            f"({alpha}, {beta}) term ({term.i},{term.j}) lambda = {lam}"
                        )
                        break
                if res.failures:
                    break
            if res.failures:
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_twist_table(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-twist")
    spec = cfg.spec
    res = SuiteResult("weyl-twist-table", True, "10 probes/pair; involution")
    for alpha in roots(cfg.n):
        for beta in roots(cfg.n):
            try:
                t = weyl_twist(alpha, beta, spec, checks=10, rng=rng)
            except ArithmeticError as exc:
                res.failures.append(f"({alpha}, {beta}): {exc}")
                break
            v = random_coordinate(beta, spec, rng)
            if t.apply(t.apply(v)) != v:
                res.failures.append(f"({alpha}, {beta}): twist is not involutive")
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_compatibility(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-compat")
    res = SuiteResult("compatibility-identities", True, f"{cfg.trials} samples")
    reports = verify_compatibility_identities(cfg.n, cfg.d, cfg.trials, rng)
    for r in reports:
        if not r.passed:
            res.failures.append(f"{r.name}: {r.witness}")
    res.passed = not res.failures
    return res


def suite_perfectness(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-perfect")
    spec = cfg.spec
    res = SuiteResult("perfectness-witnesses", True, "10 coordinates/root")
    for alpha in roots(cfg.n):
        for _ in range(10):
            v = random_coordinate(alpha, spec, rng)
            word = express_as_commutator(alpha, v, spec)
            if alpha in word.roots_used():
                res.failures.append(f"alpha = {alpha}: witness uses alpha")
                break
            got = evaluate(word, spec, cfg.n)
            if got != root_element(alpha, v):
                res.failures.append(f"alpha = {alpha}, v = {v}: wrong evaluation")
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_product_splitting(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-split")
    # always exercise a genuine product: config ring x Q[t]/(t^2)
    spec = AlgebraSpec(cfg.ring_factors + (2,), cfg.d)
    k = len(cfg.ring_factors)
    spec_a = AlgebraSpec(cfg.ring_factors, cfg.d)
    spec_b = AlgebraSpec((2,), cfg.d)
    res = SuiteResult("product-splitting", True, f"{cfg.trials} words over {spec}")
    for _ in range(cfg.trials):
        word = SteinbergWord(
            tuple(Symbol(*s) for s in random_symbols(cfg.n, spec, rng, 6))
        )
        wa, wb = split_word(word, k)
        full = evaluate(word, spec, cfg.n)
        ea = evaluate(wa, spec_a, cfg.n)
        eb = evaluate(wb, spec_b, cfg.n)
        fa, fb = _split_matrix(full, k)
        if ea != fa or eb != fb:
            res.failures.append(f"factor evaluation mismatch for {word}")
            break
        rejoined = evaluate(join_words(wa, wb), spec, cfg.n)
        if rejoined != full:
            res.failures.append(f"join changed the evaluation of {word}")
            break
    res.passed = not res.failures
    return res


def _split_matrix(x: GroupElement, k: int) -> tuple[GroupElement, GroupElement]:
    from .algebra import split_quad

    sa, sb = x.spec.split(k)
    rows_a, rows_b = [], []
    for row in x.rows:
        ra, rb = [], []
        for e in row:
            ea, eb = split_quad(e, k)
            ra.append(ea)
            rb.append(eb)
        rows_a.append(ra)
        rows_b.append(rb)
    return GroupElement(x.n, sa, rows_a), GroupElement(x.n, sb, rows_b)


def suite_filtration(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-filtration")
    spec = AlgebraSpec((4,), cfg.d)
    res = SuiteResult("congruence-filtration", True, "Q[t]/(t^4), (a,b) in {1,2,3}^2")
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            report = filtration_commutator_check(a, b, cfg.trials, spec, cfg.n, rng)
            if not report.passed:
                res.failures.append(report.violations[0])
                break
        if res.failures:
            break
    res.passed = not res.failures
    return res


def suite_decomposition(cfg: VerifyConfig) -> SuiteResult:
    rng = random.Random(f"{cfg.seed}-decompose")
    spec = cfg.spec
    res = SuiteResult("decomposition-roundtrip", True, f"{cfg.trials} products of 30")
    for t in range(cfg.trials):
        x = random_member(cfg.n, spec, rng, count=30)
        if not _member_check(res, x, f"random product {t}"):
            break
        word = decompose(x)
        if evaluate(word, spec, cfg.n) != x:
            res.failures.append(f"round trip failed on trial {t}")
            break
    res.passed = not res.failures
    return res


ALL_SUITES = (
    suite_additivity,
    suite_torus_action,
    suite_constants_oracle,
    suite_homogeneity,
    suite_twist_table,
    suite_compatibility,
    suite_perfectness,
    suite_product_splitting,
    suite_filtration,
    suite_decomposition,
)


def run_all(cfg: VerifyConfig) -> list[SuiteResult]:
    return [suite(cfg) for suite in ALL_SUITES]
