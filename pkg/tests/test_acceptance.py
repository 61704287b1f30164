"""Exit criteria. Each test reports one PASS/FAIL line in the session summary."""

import json
import os
import random
import time
from itertools import permutations, product
from math import comb, factorial

import pytest

from bajinv.codes import (
    RCode, VCode, r_decode, r_encode, v_decode, v_decode_stages, v_encode, weight,
)
from bajinv.perm import baj, baj_minus_inv, descent_set, inv
from bajinv.qpoly import eval_at_one, is_palindromic, rhs_product
from bajinv.verify import (
    distribution, distribution_all, parallel_distribution, verify_theorem2,
)


def pair_inversions(s):
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


def indicator_baj(s):
    n = len(s)
    return sum(i * (n - i) for i in range(1, n) if s[i] < s[i - 1])


def prefix_counts(s):
    return tuple(sum(1 for j in range(i + 1) if s[j] <= s[i]) for i in range(len(s)))


def check_identities(s):
    n = len(s)
    v = v_encode(s).v
    vdesc = tuple(i for i in range(1, n) if v[i] <= v[i - 1])
    return (inv(s) == comb(n + 1, 2) - sum(v)
            and descent_set(s) == vdesc
            and sum(i * (n - i) for i in vdesc) == baj(s)
            and sum(i * (n - i) for i in descent_set(s)) == baj(s))


def test_ac1_theorem2_coefficient_exact(criterion):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 10):
        rhs = rhs_product(n)
        for k in range(1, n + 1):
            if distribution(n, k).to_qpoly() != rhs:
                bad.append((n, k))
    elapsed = time.perf_counter() - t0
    criterion.check(not bad and elapsed < 10,
                    f"n<=9 all k, mismatches={bad}, {elapsed:.2f}s (limit 10s)")


def test_ac2_theorem1_coefficient_exact(criterion):
    bad = [n for n in range(1, 10)
           if distribution_all(n).to_qpoly() != n * rhs_product(n)]
    criterion.check(not bad, f"n<=9, mismatches={bad}")


def test_ac3_paper_golden_chain(criterion):
    v = (1, 1, 3, 1, 2, 5, 1)
    stages = ["".join(map(str, s)) for s in v_decode_stages(v)]
    sigma = v_decode(v).elements
    rc = r_encode(VCode(v))
    ok = (stages == ["1", "21", "213", "3241", "43512", "436125", "5472361"]
          and sigma == (5, 4, 7, 2, 3, 6, 1)
          and v_encode(sigma).v == v == prefix_counts(sigma)
          and rc.k == 1 and rc.r == (0, 1, 0, 0, 2, 1)
          and r_decode(rc).v == v
          and weight(rc) == 10
          and baj(sigma) == indicator_baj(sigma) == 24
          and inv(sigma) == pair_inversions(sigma) == 14
          and baj_minus_inv(sigma) == 10)
    criterion.check(ok, f"stages={stages[:-1]} sigma={stages[-1]} r={rc.r} "
                        f"weight={weight(rc)}")


def test_ac4_bijection_sweep(criterion):
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 9):
        for k in range(1, n + 1):
            seen = set()
            for digits in product(*(range(i) for i in range(1, n))):
                rc = RCode(n, k, digits)
                p = v_decode(r_decode(rc)).elements
                wt = sum((n - i) * r for i, r in enumerate(digits, 1))
                if (p[-1] != k or p in seen
                        or indicator_baj(p) - pair_inversions(p) != wt
                        or r_encode(v_encode(p)) != rc):
                    failures.append((n, k, digits))
                seen.add(p)
            if len(seen) != factorial(n - 1):
                failures.append((n, k, "count"))
    elapsed = time.perf_counter() - t0
    criterion.check(not failures and elapsed < 30,
                    f"n<=8 all k, failures={failures[:3]}, {elapsed:.2f}s (limit 30s)")


def test_ac5_identity_suite(criterion):
    bad = [s for n in range(1, 9) for s in permutations(range(1, n + 1))
           if not check_identities(s)]
    rng = random.Random(20261018)
    sampled = 0
    for n in (20, 50, 200):
        for _ in range(500):
            s = list(range(1, n + 1))
            rng.shuffle(s)
            s = tuple(s)
            sampled += 1
            if not check_identities(s):
                bad.append(s)
    criterion.check(not bad, f"exhaustive n<=8 + {sampled} random, failures={len(bad)}")


def test_ac6_rhs_sanity(criterion):
    bad = []
    for n in range(1, 13):
        p = rhs_product(n)
        deg = sum((i - 1) * (n - i) for i in range(1, n))
        if not (eval_at_one(p) == factorial(n - 1) and p.degree == deg
                and is_palindromic(p)):
            bad.append(n)
    criterion.check(not bad, f"n<=12, failures={bad}")


def test_ac7_parallel_determinism(criterion):
    bad = []
    for k in range(1, 10):
        ref = json.dumps(distribution(9, k).counts)
        for parts in (1, 2, 3, 7):
            if json.dumps(parallel_distribution(9, k, parts).counts) != ref:
                bad.append((k, parts))
    criterion.check(not bad, f"n=9 all k, parts 1/2/3/7, mismatches={bad}")


@pytest.mark.slow
def test_ac8_scale_headroom(criterion):
    workers = os.cpu_count() or 1
    t0 = time.perf_counter()
    report = verify_theorem2(11, 1, parts=workers)
    elapsed = time.perf_counter() - t0
    criterion.check(report.passed and report.permutations_checked == 3628800
                    and elapsed < 120,
                    f"n=11 k=1 parts={workers}: {report.status}, "
                    f"{report.permutations_checked} perms, {elapsed:.1f}s (limit 120s)")
