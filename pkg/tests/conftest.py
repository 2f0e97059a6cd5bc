from __future__ import annotations

import pytest

from skoo import bundle as bundle_mod
from skoo import default_ruleset, merge, subsumption_closure
from skoo.rules import apply_rules


@pytest.fixture(scope="session")
def bundle():
    return bundle_mod.load_bundle()


@pytest.fixture(scope="session")
def merged_all(bundle):
    return bundle.merged()


@pytest.fixture(scope="session")
def wille_graph(bundle):
    return bundle.fixtures["wille-ch3"]


@pytest.fixture(scope="session")
def wille_merged(bundle, wille_graph):
    return merge(bundle.skoo, wille_graph)


@pytest.fixture(scope="session")
def wille_closure(wille_merged):
    return subsumption_closure(wille_merged)


@pytest.fixture(scope="session")
def wille_model(wille_merged, wille_closure):
    return apply_rules(wille_merged, wille_closure, default_ruleset())


def kernel_backends():
    """Every closure kernel importable in this environment, labelled."""
    from skoo import _closure_py

    backends = [("python", _closure_py.closure_kernel)]
    try:
        from skoo import _closure  # type: ignore[attr-defined]

        backends.append(("cython", _closure.closure_kernel))
    except ImportError:
        pass
    return backends
