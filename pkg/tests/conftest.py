import pytest

from gradext.algebra import AlgebraSpec, build
from gradext.counterexample import PaperConfig, build_complex_C, build_paper_ring


@pytest.fixture(scope="session")
def ring():
    return build_paper_ring(PaperConfig())


@pytest.fixture(scope="session")
def complex_c(ring):
    return build_complex_C(ring, PaperConfig())


@pytest.fixture(scope="session")
def dual_numbers():
    return build(AlgebraSpec.from_strings(["x"], ["x*x"], 2, degree_bound=3))
