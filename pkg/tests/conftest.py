import json
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from acyclic_coloring.utils.get_log import GetLog  # noqa: E402

MOCKS_DIR = pathlib.Path(__file__).parent / 'mocks'


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        '--trials',
        action='store',
        type=int,
        default=5,
        help='Number of seeded runs per graph in the randomized tests',
    )


@pytest.fixture
def trials(request: pytest.FixtureRequest) -> int:
    return request.config.getoption('--trials')


@pytest.fixture(scope='session')
def corpus() -> dict:
    with open(MOCKS_DIR / 'corpus.json', 'r', encoding='utf-8') as f:
        return {entry['name']: entry for entry in json.load(f)['graphs']}


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    GetLog.reset()
