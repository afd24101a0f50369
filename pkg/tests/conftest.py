import pytest

from dybe.ratfield import FractionField


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden",
        action="store_true",
        default=False,
        help="rewrite the golden CLI outputs under tests/golden instead of comparing against them",
    )


@pytest.fixture
def regen_golden(request):
    return request.config.getoption("--regen-golden")


@pytest.fixture
def L():
    return FractionField("lambda").gen()
