import itertools
import random

import numpy as np
import pytest

from edgeorder import constructions as C
from edgeorder.complex import from_facets


def brute_force_counts(K):
    """Face counts by testing every vertex subset of size <= 4 against the facets."""
    facets = [set(f) for f in K.facets]
    counts = []
    for k in range(1, K.dim + 2):
        counts.append(
            sum(
                1
                for sub in itertools.combinations(K.vertices, k)
                if any(set(sub) <= f for f in facets)
            )
        )
    return tuple(counts + [0] * (4 - len(counts)))


def brute_force_isomorphic(K1, K2):
    """Try every vertex permutation (small complexes only)."""
    if K1.num_vertices != K2.num_vertices or len(K1) != len(K2):
        return False
    target = set(K2.facets)
    for perm in itertools.permutations(K2.vertices):
        if {tuple(sorted(perm[x] for x in f)) for f in K1.facets} == target:
            return True
    return False


def rational_h2_rank(L):
    """dim H_2(L; Q) from the rank of the triangle boundary matrix."""
    edges = {e: i for i, e in enumerate(L.skeleton(1))}
    d2 = np.zeros((len(edges), len(L.facets)))
    for j, (a, b, c) in enumerate(L.facets):
        d2[edges[(b, c)], j] += 1
        d2[edges[(a, c)], j] -= 1
        d2[edges[(a, b)], j] += 1
    return len(L.facets) - np.linalg.matrix_rank(d2)


def relabel(K, rng):
    perm = list(K.labels)
    rng.shuffle(perm)
    mapping = dict(zip(K.labels, (f"x{p}" for p in perm)))
    return from_facets([[mapping[x] for x in K.labels_of(f)] for f in K.facets])


@pytest.fixture
def boundary():
    return C.boundary_4_simplex()


@pytest.fixture
def rp2():
    return C.rp2_6()


@pytest.fixture
def torus():
    return C.torus_7()


@pytest.fixture
def ovs():
    return C.one_vertex_suspended_rp2()


@pytest.fixture
def tetrahedron_boundary():
    return from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])


def random_stacked(n, seed):
    return C.stacked_sphere(n, random.Random(seed))


def run_cli(args, stdin=""):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    import contextlib
    import io
    import sys

    from edgeorder.cli import main

    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(args)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


ACCEPTANCE_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, text in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
