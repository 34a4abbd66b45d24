import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from intcyc import fixtures as F  # noqa: E402


@pytest.fixture
def path4():
    return F.path(4)


@pytest.fixture
def star3():
    return F.star(3)


@pytest.fixture
def spider():
    return F.spider(3, 2)


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    F.write_fixtures(d)
    return d
