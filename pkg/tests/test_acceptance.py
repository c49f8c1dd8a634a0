"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPT <k> PASS|FAIL`` line (also collected in
the terminal summary) and asserts the criterion at its stated tolerance,
runtime bound included.
"""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from conftest import from_oracle, random_ext, to_oracle
from oracles import brute_singular, cell_samples, small_instances
from plucker_corpus import random_basis, random_combination
from tropdual import (
    INF,
    Budget,
    CountableFamilySpec,
    GeneratorSet,
    decide_variety,
    dimension,
    double_orthogonal_generators,
    example_a0,
    example_countable_family,
    hull_eval,
    hull_member,
    is_tropically_orthogonal,
    is_tropically_singular,
    orthogonal_generators,
    point_pj,
    prevariety_equal,
    prevariety_member,
    puiseux_dot,
    trop_generators_from_plucker,
    trop_space_member,
    tropicalize_vector,
)
from tropdual.variety import INCONCLUSIVE, NOT_VARIETY, VARIETY

RESULTS = []


def report(k, ok, detail, elapsed):
    line = f"ACCEPT {k} {'PASS' if ok else 'FAIL'}: {detail} [{elapsed:.2f}s]"
    RESULTS.append(line)
    print(line)
    return ok


def b_pattern(n):
    rows = []
    for i in range(n - 2):
        rows.append(tuple(Fraction(0) if j in (i, n - 2, n - 1) else INF for j in range(n)))
    rows.append(tuple(Fraction(0) if j >= n - 2 else INF for j in range(n)))
    return GeneratorSet.from_vectors(rows, n)


def test_acceptance_1_a0_fixture():
    start = time.perf_counter()
    problems = []
    for n in range(3, 7):
        a0 = example_a0(n)
        orth = orthogonal_generators(a0)
        dorth = double_orthogonal_generators(a0)
        if not prevariety_equal(orth, b_pattern(n)):
            problems.append(f"n={n}: orth differs from b-pattern")
        if not prevariety_equal(dorth, orth):
            problems.append(f"n={n}: dorth differs from orth")
        dec = decide_variety(a0)
        ob = dec.obstruction
        if dec.status != NOT_VARIETY or (ob.dim_perp, ob.dim_perp_perp) != (n - 1, n - 1) or not dec.verify():
            problems.append(f"n={n}: decide gave {dec.status}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 5
    report(1, ok, "A0 n=3..6 orth/dorth/decide " + ("; ".join(problems) or "all match"), elapsed)
    assert ok, problems


def random_corpus(seed=2024, count=200):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 5)
        k = rng.randint(0, 3)
        yield n, [tuple(random_ext(rng) for _ in range(n)) for _ in range(k)]


def test_acceptance_2_inclusion_and_triple_perp():
    start = time.perf_counter()
    rng = random.Random(99)
    bad_hull = bad_triple = samples = 0
    for n, rows in random_corpus():
        g1 = orthogonal_generators(rows, n)
        if rows:
            for _ in range(100):
                x = hull_eval(rows, [random_ext(rng) for _ in rows])
                samples += 1
                if not all(is_tropically_orthogonal(x, b) for b in g1):
                    bad_hull += 1
        g2 = orthogonal_generators(g1.rows(), n)
        g3 = orthogonal_generators(g2.rows(), n)
        if not prevariety_equal(g1, g3):
            bad_triple += 1
    elapsed = time.perf_counter() - start
    ok = bad_hull == 0 and bad_triple == 0 and elapsed < 120
    report(2, ok, f"200 instances, {samples} hull samples: {bad_hull} orthogonality failures, "
                  f"{bad_triple} triple-perp mismatches", elapsed)
    assert ok


def test_acceptance_3_dimension_inequality():
    start = time.perf_counter()
    bad = 0
    for n, rows in random_corpus():
        g1 = orthogonal_generators(rows, n)
        g2 = orthogonal_generators(g1.rows(), n)
        if dimension(g1) + dimension(g2) < n:
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0
    report(3, ok, f"dim(A-perp) + dim(A-perp-perp) >= n violated on {bad} of 200", elapsed)
    assert ok


@pytest.mark.slow
def test_acceptance_4_generator_completeness():
    start = time.perf_counter()
    instances = samples = failures = 0
    for n, A in small_instances(max_n=4, max_k=2):
        instances += 1
        rows = [from_oracle(r) for r in A]
        g = orthogonal_generators(rows, n)
        for pts, _dim in cell_samples(A, n):
            for p in pts:
                samples += 1
                if not hull_member(g, from_oracle(p))[0]:
                    failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and samples > 0 and elapsed < 600
    report(4, ok, f"{instances} instance classes, {samples} cell samples, {failures} not in the hull", elapsed)
    assert ok


@pytest.mark.slow
def test_acceptance_5_plucker_round_trip():
    start = time.perf_counter()
    rng = random.Random(5)
    rejected = 0
    statuses = {VARIETY: 0, NOT_VARIETY: 0, INCONCLUSIVE: 0}
    bad_cert = 0
    for k in range(50):
        basis, pv = random_basis(rng, max_d=3, max_n=6)
        for _ in range(20):
            if not trop_space_member(pv, tropicalize_vector(random_combination(rng, basis))):
                rejected += 1
        dec = decide_variety(trop_generators_from_plucker(pv), Budget(rounds=20, terms=6), seed=k, n=pv.n)
        statuses[dec.status] += 1
        if dec.status == VARIETY:
            exact = all(not puiseux_dot(v, w) for v in dec.V for w in dec.W)
            match = [tropicalize_vector(v) for v in dec.V] == dec.xs.rows() and [
                tropicalize_vector(w) for w in dec.W
            ] == dec.ys.rows()
            if not (exact and match and dec.verify()):
                bad_cert += 1
        elif dec.status == INCONCLUSIVE:
            print(f"inconclusive instance k={k} seed={k}")
    elapsed = time.perf_counter() - start
    ok = rejected == 0 and statuses[VARIETY] == 50 and bad_cert == 0 and elapsed < 600
    report(5, ok, f"1000 combinations, {rejected} rejected; decide {statuses}, {bad_cert} bad certificates", elapsed)
    assert ok


def test_acceptance_6_singularity_oracle():
    start = time.perf_counter()
    disagreements = singular = 0
    vals = [Fraction(0), Fraction(1), INF]
    for entries in product(vals, repeat=9):
        m = [entries[0:3], entries[3:6], entries[6:9]]
        s = is_tropically_singular(m)
        singular += s
        if s != brute_singular([to_oracle(r) for r in m]):
            disagreements += 1
    rng = random.Random(6)
    rand_singular = 0
    for _ in range(1000):
        m = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(5)) for _ in range(5)]
        s = is_tropically_singular(m)
        rand_singular += s
        if s != brute_singular([to_oracle(r) for r in m]):
            disagreements += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0
    report(6, ok, f"19683 3x3 ({singular} singular) + 1000 5x5 ({rand_singular} singular): "
                  f"{disagreements} disagreements", elapsed)
    assert ok


def test_acceptance_7_countable_family():
    start = time.perf_counter()
    spec = CountableFamilySpec(8)
    rows = example_countable_family(spec)
    d = Fraction(1, 100)
    problems = []
    perturbed = {}
    for j in range(2, 8):
        p = point_pj(j, spec)
        if not prevariety_member(rows, p):
            problems.append(f"p_{j} not a member")
        for a, b, c in product((d, -d), repeat=3):
            q = tuple(x + y for x, y in zip(p, (a, a, b, b, c, c)))
            if not prevariety_member(rows, q):
                problems.append(f"p_{j} paired perturbation {(a, b, c)} left")
            perturbed.setdefault(j, []).append(q)
        if prevariety_member(rows, tuple(x + y for x, y in zip(p, (0, 0, 0, 0, d, 0)))):
            problems.append(f"p_{j} unpaired z1 perturbation stayed")
    for i in perturbed:
        for j in perturbed:
            if i < j and set(perturbed[i]) & set(perturbed[j]):
                problems.append(f"perturbations of p_{i} and p_{j} collide")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1
    report(7, ok, "m=8, j=2..7 " + ("; ".join(problems) or "memberships, perturbations and distinctness hold"),
           elapsed)
    assert ok, problems
