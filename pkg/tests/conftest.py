from __future__ import annotations

import pytest

from contribscope.fixtures import make_annotated_papers


@pytest.fixture(scope="session")
def annotated_corpus():
    """A mid-size generated corpus shared across read-only tests."""
    return make_annotated_papers(n_papers=120, seed=11)
