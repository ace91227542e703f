"""Acceptance gate: one block per criterion, summarised by conftest."""

import itertools
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest
from corpus import corpus
from reference_trees import TREES, glyph_levels

from padictrees.analytic import build_analytic_tree, build_partial_tree, infinite_branch_count
from padictrees.core import valuation_rat
from padictrees.empirical import build_empirical_tree
from padictrees.expansion import congruence_order, digits_from_zero, expand
from padictrees.parser import parse, parse_polynomial
from padictrees.polynomial import Polynomial
from padictrees.roots import extend_certified, roots_mod_pk, zp_root_prefixes
from padictrees.tree import diff_trees

F = Fraction
TREE_SECONDS = 1.0
ORACLE_SECONDS = 60.0
CORPUS = corpus(200)


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# 1 ------------------------------------------------------------------------


@criterion(1, "reference trees")
@pytest.mark.parametrize("name", sorted(TREES))
def test_reference_trees(name):
    text, p, depth, expected = TREES[name]
    f = parse(text)
    build = build_analytic_tree if f.is_completely_factored() else build_partial_tree
    start = time.perf_counter()
    tree = build(f, p, depth)
    elapsed = time.perf_counter() - start
    assert glyph_levels(tree) == expected
    assert elapsed < TREE_SECONDS


# 2 ------------------------------------------------------------------------

EXPANSIONS = [
    # (rational, prime, digits from exponent 0)
    (F(5, 2), 3, (1, 2, 1, 1, 1)),
    (F(-6), 3, (0, 1, 2, 2, 2)),
    (F(-23), 5, (2, 0, 4)),
    (F(16), 2, (0, 0, 0, 0, 1, 0)),
    (F(2, 5), 2, (0, 1, 0, 1, 1, 0)),
    (F(9), 2, (1, 0, 0, 1)),
    (F(-1, 3), 2, (1, 0, 1, 0)),
    (F(2), 2, (0, 1, 0, 0)),
    (F(-6), 2, (0, 1, 0, 1)),
    (F(12), 2, (0, 0, 1, 1)),
]

NON_INTEGRAL = [
    # (rational, prime, start exponent, digits)
    (F(4, 5), 5, -1, (4, 0, 0)),
    (F(4, 3), 3, -1, (1, 1, 0, 0, 0, 0)),
]


@criterion(2, "expansion fidelity")
@pytest.mark.parametrize("r, p, digits", EXPANSIONS)
def test_reference_expansions(r, p, digits):
    assert digits_from_zero(r, p, len(digits)) == digits


@criterion(2, "expansion fidelity")
@pytest.mark.parametrize("r, p, start, digits", NON_INTEGRAL)
def test_negative_exponent_expansions(r, p, start, digits):
    e = expand(r, p, len(digits))
    assert (e.start_exponent, e.digits) == (start, digits)


@criterion(2, "expansion fidelity")
def test_square_root_expansions():
    got = [r.digits for r in zp_root_prefixes(parse_polynomial("n^2+7"), 2, 4) if r.certified]
    assert got == [(1, 0, 1, 0), (1, 1, 0, 1)]


# 3 ------------------------------------------------------------------------


@criterion(3, "analytic/empirical oracle equivalence")
def test_oracle_equivalence():
    start = time.perf_counter()
    for f, p in CORPUS:
        analytic = build_analytic_tree(f, p, 6)
        empirical = build_empirical_tree(f, p, 6, 4)
        result = diff_trees(analytic, empirical)
        assert result.disagreements == [] and result.incomparable == [], (str(f), p)
        assert not any(s.is_unresolved for _, s in empirical.walk()), (str(f), p)
        assert set(analytic.nodes) == set(empirical.nodes), (str(f), p)
    assert time.perf_counter() - start <= ORACLE_SECONDS


# 4 ------------------------------------------------------------------------


def _hensel_cases(count=100, seed=4):
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        cs = [rng.randint(-20, 20) for _ in range(rng.randint(1, 5))]
        if not any(cs):
            continue
        p = rng.choice([2, 3, 5])
        kmax = max(k for k in range(1, 7) if p**k <= 10**5)
        cases.append((cs, p, rng.randint(1, kmax)))
    return cases


@criterion(4, "Hensel soundness")
def test_hensel_soundness():
    certified = 0
    for cs, p, k in _hensel_cases():
        F_ = Polynomial.from_ints(cs)
        m = p**k
        brute = [x for x in range(m) if F_(x) % m == 0]
        assert roots_mod_pk(F_, p, k) == brute, (cs, p, k)
        for pref in zp_root_prefixes(F_, p, k):
            assert pref.value in brute
            if pref.certified:
                certified += 1
                longer = extend_certified(F_, pref, 3)
                assert F_(longer.value) % p ** (k + 3) == 0, (cs, p, k, pref)
    assert certified > 0


# 5 ------------------------------------------------------------------------


@criterion(5, "infinite branch count")
def test_branch_count():
    for f, p in CORPUS:
        roots = sorted({lf.root() for lf in f.linear_factors if lf.a % p})
        r = max((congruence_order(x, y, p) for x, y in itertools.combinations(roots, 2)), default=0)
        tree = build_analytic_tree(f, p, r + 2)
        assert tree.open_paths() == infinite_branch_count(f, p) == len(roots), (str(f), p)


# 6 ------------------------------------------------------------------------


def _random_rational(rng):
    if rng.random() < 0.01:
        return F(0)
    num = rng.choice([-1, 1]) * rng.randint(1, 10**12)
    den = rng.randint(1, 10**12)
    # bias towards high prime powers so valuations are not all zero
    p = rng.choice([2, 3, 5, 7, 11])
    return F(num * p ** rng.randint(0, 8), den * p ** rng.randint(0, 8))


@criterion(6, "valuation laws")
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_valuation_laws(p):
    rng = random.Random(1000 + p)
    for _ in range(10**4):
        a, b = _random_rational(rng), _random_rational(rng)
        va, vb = valuation_rat(a, p), valuation_rat(b, p)
        assert valuation_rat(a * b, p) == va + vb
        vs = valuation_rat(a + b, p)
        assert vs >= min(va, vb)
        if va != vb:
            assert vs == min(va, vb)


# 7 ------------------------------------------------------------------------

COMMANDS = [
    ["val", "n^2+4", "--at", "2", "-p", "2"],
    ["val", "(n-2)*(n+6)", "--at", "2", "-p", "2"],
    ["expand", "4/5", "-p", "5", "--digits", "3"],
    ["tree", "3/5*(n+6)*(2n-5)*(3n-4)", "-p", "3", "--format", "json"],
    ["tree", "(n^2+4)*(n^2+7)", "-p", "2", "--depth", "4", "--format", "dot"],
    ["tree", "(n-2)*(n+6)*(n-12)", "-p", "2", "--engine", "empirical", "--format", "latex"],
    ["tree", "n^4+11n^2+28", "-p", "5", "--engine", "empirical", "--extra-depth", "0"],
    ["diff", "(n-16)*(5n-2)", "-p", "2"],
    ["roots", "(n-1)^2*(n^2+7)*(5n-4)", "-p", "2", "--depth", "6"],
]


def _run(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run([sys.executable, "-m", "padictrees", *argv], capture_output=True, env=env, check=False)
    return proc.returncode, proc.stdout, proc.stderr


@criterion(7, "CLI determinism")
@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
def test_determinism(argv):
    first = _run(argv, 1)
    assert first[0] == 0 and first[1]
    assert _run(argv, 2) == first
