"""Shared fixtures: jit warmup and a few expansions reused across tests."""

from __future__ import annotations

import pytest

import bandquad as bq


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load from cache) every jitted kernel before any test runs.

    Keeps timing-sensitive tests honest: compilation cost is a one-time
    artifact, not part of rule construction.
    """
    bq.build_rule(20.0, 30)
    bq.min_nodes_for_accuracy(30.0, 1e-6)
    bq.gauss_legendre_rule(8)


@pytest.fixture(scope="session")
def exp_c20_n30():
    return bq.compute_expansion(20.0, 30)


@pytest.fixture(scope="session")
def parts_c20_n30(exp_c20_n30):
    roots = bq.find_roots(exp_c20_n30)
    w = bq.compute_weights(exp_c20_n30, roots)
    return exp_c20_n30, roots, w


@pytest.fixture(scope="session")
def exp_c100_n86():
    return bq.compute_expansion(100.0, 86)


@pytest.fixture(scope="session")
def rule_c100_n86():
    return bq.build_rule(100.0, 86)
