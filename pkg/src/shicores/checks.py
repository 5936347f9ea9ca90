"""Randomised and exhaustive consistency checks shared by the CLI and the tests.

Each check returns a list of failure messages; an empty list means it passed.
Randomness comes from a seeded ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable

from .affine import (
    AffineRoot,
    AffinePermutation,
    act_point,
    act_vector,
    compose,
    from_word,
    generator,
    inverse,
    inversion_bound,
    inversion_set,
    length,
    min_length_in_translation_coset,
    word_for,
)
from .bijection import enumerate_catalog, phi, phi_inverse
from .cores import (
    EMPTY,
    Partition,
    anderson_is_t_core,
    apply_generator_core,
    apply_word_core,
    box_counts,
    core_from_vector,
    enumerate_cores,
    is_n_core,
    is_t_core_hooks,
    n_vector,
    partitions,
    residue_counts,
    satisfies_mn1_inequalities,
)
from .rootsys import (
    RationalPoint,
    Side,
    all_roots,
    compare_level,
    highest_root,
    int_pairing,
    rho_point,
    simple_root,
)
from .shi import bruteforce_dominant_regions, default_radius


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def random_word(rng: random.Random, n: int, max_len: int) -> list[int]:
    return [rng.randrange(n) for _ in range(rng.randint(0, max_len))]


def random_element(rng: random.Random, n: int, max_len: int = 12) -> AffinePermutation:
    return from_word(random_word(rng, n, max_len), n)


def random_point(rng: random.Random, n: int, spread: int = 6) -> RationalPoint:
    den = rng.randint(1, 12)
    nums = [rng.randint(-spread * den, spread * den) for _ in range(n - 1)]
    nums.append(-sum(nums))
    return RationalPoint(tuple(nums), den)


def random_qvector(rng: random.Random, n: int, spread: int = 4) -> tuple[int, ...]:
    v = [rng.randint(-spread, spread) for _ in range(n - 1)]
    return tuple(v + [-sum(v)])


def check_presentation(rng: random.Random, cases: int) -> CheckResult:
    """s_i^2 = 1, commuting and braid relations, compared as point maps."""
    fails = []
    for c in range(cases):
        n = rng.randint(2, 6)
        i, j = rng.randrange(n), rng.randrange(n)
        si, sj = generator(i, n), generator(j, n)
        pts = [random_point(rng, n) for _ in range(3)]
        if n == 2:
            lhs, rhs = compose(si, si), AffinePermutation.identity(n)
        elif i == j:
            lhs, rhs = compose(si, si), AffinePermutation.identity(n)
        elif (i - j) % n in (1, n - 1):
            lhs = compose(compose(si, sj), si)
            rhs = compose(compose(sj, si), sj)
        else:
            lhs, rhs = compose(si, sj), compose(sj, si)
        for p in pts:
            if act_point(lhs, p) != act_point(rhs, p):
                fails.append(f"relation for s{i}, s{j} (n={n}) fails at {p}")
                break
    return CheckResult("presentation relations", cases, fails)


def check_inversion_separation(rng: random.Random, cases: int) -> CheckResult:
    """alpha + k delta in Inv(w) iff w^{-1} A_0 lies in {<v, -alpha> >= k}."""
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 5)
        w = random_element(rng, n)
        p = act_point(inverse(w), rho_point(n))
        inv = inversion_set(w)
        top = inversion_bound(w)
        if len(inv) != length(w):
            fails.append(f"|Inv({w})| = {len(inv)} but length = {length(w)}")
        for a in all_roots(n):
            for k in range(0 if a.is_positive else 1, top + 3):
                r = AffineRoot(a, k)
                separated = compare_level(p, -a, k) is Side.POSITIVE
                if (r in inv) != separated:
                    fails.append(f"{r} for {w}: inversion={r in inv}, separated={separated}")
    return CheckResult("inversion set vs separating hyperplanes", cases, fails)


def check_coset_shape(rng: random.Random, cases: int) -> CheckResult:
    """Minimal coset representatives only invert -alpha + k delta, closed downward in k."""
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 5)
        w = min_length_in_translation_coset(random_qvector(rng, n))
        inv = inversion_set(w)
        for r in inv:
            neg = -r.root
            if not (neg.is_positive and r.level > 0):
                fails.append(f"{r} in Inv({w}) has the wrong shape")
            elif r.level > 1 and AffineRoot(r.root, r.level - 1) not in inv:
                fails.append(f"{r} in Inv({w}) but level {r.level - 1} missing")
    return CheckResult("minimal coset inversion shape", cases, fails)


def _random_core(rng: random.Random, n: int, spread: int = 3) -> Partition:
    return core_from_vector(random_qvector(rng, n, spread))


def check_exclusivity(rng: random.Random, cases: int) -> CheckResult:
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 6)
        lam = _random_core(rng, n)
        rem, add = box_counts(lam, n)
        for i in range(n):
            if rem[i] and add[i]:
                fails.append(f"{lam} (n={n}) has addable and removable {i}-boxes")
    return CheckResult("addable/removable exclusivity", cases, fails)


def check_flush_iff_core(max_size: int = 14) -> CheckResult:
    fails = []
    cases = 0
    for size in range(max_size + 1):
        for parts in partitions(size):
            lam = Partition(parts)
            for n in range(2, 7):
                cases += 1
                if is_n_core(lam, n) != is_t_core_hooks(lam, n):
                    fails.append(f"{lam}, n={n}: flush={is_n_core(lam, n)}")
    return CheckResult("abacus flush iff n-core", cases, fails)


def check_equivariance(rng: random.Random, cases: int) -> CheckResult:
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 6)
        lam = _random_core(rng, n)
        i = rng.randrange(n)
        mu = apply_generator_core(lam, i, n)
        if n_vector(mu, n) != act_vector(generator(i, n), n_vector(lam, n)):
            fails.append(f"s{i} on {lam} (n={n}) breaks equivariance")
    return CheckResult("n-vector equivariance", cases, fails)


def check_t_core_criteria(max_size: int = 40, max_n: int = 5, max_t: int = 13) -> CheckResult:
    """Hook oracle, Anderson's grid and (for t = mn+1) the inequalities agree."""
    fails = []
    cases = 0
    for n in range(2, max_n + 1):
        for lam in enumerate_cores(n, max_size):
            v = n_vector(lam, n)
            for t in range(1, max_t + 1):
                if gcd(n, t) != 1:
                    continue
                cases += 1
                hooks = is_t_core_hooks(lam, t)
                grid = anderson_is_t_core(lam, n, t)
                if hooks != grid:
                    fails.append(f"{lam} n={n} t={t}: hooks={hooks} grid={grid}")
                if (t - 1) % n == 0 and t > 1:
                    ineq = satisfies_mn1_inequalities(v, (t - 1) // n)
                    if ineq != hooks:
                        fails.append(f"{lam} n={n} t={t}: hooks={hooks} inequalities={ineq}")
    return CheckResult("t-core criteria agreement", cases, fails)


def check_removable_pairing(rng: random.Random, cases: int) -> CheckResult:
    """s_i removes k > 0 boxes iff <n(lam), alpha_i> = -k (i > 0) or <n(lam), theta> = k + 1."""
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 6)
        lam = _random_core(rng, n)
        v = n_vector(lam, n)
        for i in range(n):
            mu = apply_generator_core(lam, i, n)
            removed = lam.size - mu.size
            if i == 0:
                pair_says = int_pairing(v, highest_root(n)) - 1
            else:
                pair_says = -int_pairing(v, simple_root(i, n))
            if removed > 0 and pair_says != removed:
                fails.append(f"s{i} removes {removed} boxes from {lam} but pairing gives {pair_says}")
            if removed <= 0 and pair_says > 0:
                fails.append(f"pairing predicts removal of {pair_says} from {lam} by s{i}")
            before = residue_counts(lam, n)
            after = residue_counts(mu, n)
            diff = [b - a for b, a in zip(before, after)]
            if diff != [removed if j == i else 0 for j in range(n)]:
                fails.append(f"residue counts of {lam} under s{i} change by {diff}")
    return CheckResult("removable boxes vs pairings", cases, fails)


def check_vector_roundtrip(rng: random.Random, cases: int) -> CheckResult:
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 6)
        v = random_qvector(rng, n)
        lam = core_from_vector(v)
        if n_vector(lam, n) != v:
            fails.append(f"n_vector(core_from_vector({v})) = {n_vector(lam, n)}")
        if core_from_vector(n_vector(lam, n)) != lam:
            fails.append(f"core_from_vector(n_vector({lam})) differs")
    return CheckResult("core/vector roundtrip", cases, fails)


def check_word_roundtrip(rng: random.Random, cases: int) -> CheckResult:
    fails = []
    for _ in range(cases):
        n = rng.randint(2, 5)
        w = random_element(rng, n)
        word = word_for(w)
        if from_word(word, n) != w or len(word) != length(w):
            fails.append(f"word_for({w}) = {word} is not a reduced word for it")
    return CheckResult("reduced word roundtrip", cases, fails)


def check_catalog(n: int, m: int) -> CheckResult:
    """phi_inverse . phi = id and the reduced word rebuilds each catalog core."""
    fails = []
    cat = enumerate_catalog(n, m)
    for e in cat:
        a = phi(e.core, n)
        if a != e.alcove:
            fails.append(f"phi({e.core}) disagrees with the catalog")
        if phi_inverse(a) != e.core:
            fails.append(f"phi_inverse(phi({e.core})) = {phi_inverse(a)}")
        if apply_word_core(e.word, EMPTY, n) != e.core:
            fails.append(f"word {e.word} does not rebuild {e.core}")
    return CheckResult(f"catalog roundtrips n={n} m={m}", len(cat), fails)


def check_oracle(n: int, m: int, radius: int | None = None) -> CheckResult:
    """Brute-force dominant regions agree with the catalog alcoves."""
    fails = []
    regions = bruteforce_dominant_regions(n, m, radius or default_radius(n, m))
    brute = {r.minimal_alcove for r in regions}
    cat = {e.alcove for e in enumerate_catalog(n, m)}
    if brute != cat:
        fails.append(f"oracle found {len(brute)} regions, catalog has {len(cat)} alcoves; sets differ")
    return CheckResult(f"region oracle n={n} m={m}", len(regions), fails)


def property_suite(seed: int = 0, cases: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    randomised: list[Callable[[random.Random, int], CheckResult]] = [
        check_presentation,
        check_inversion_separation,
        check_coset_shape,
        check_exclusivity,
        check_equivariance,
        check_removable_pairing,
        check_vector_roundtrip,
        check_word_roundtrip,
    ]
    results = [f(rng, cases) for f in randomised]
    results.append(check_flush_iff_core())
    results.append(check_t_core_criteria())
    return results
