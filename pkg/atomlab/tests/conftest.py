import os.path

import pytest

import atomlab.constructions
import atomlab.log_event
import atomlab.settings

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run the exhaustive oracle battery"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def clean_settings():
    '''
    Each test starts from registered defaults with logging off.
    '''
    atomlab.settings.reset()
    atomlab.log_event.DEBUG_LOG_LEVEL = atomlab.log_event.LogLevel.NONE
    yield
    atomlab.settings.reset()
    atomlab.log_event.DEBUG_LOG_LEVEL = atomlab.log_event.LogLevel.NONE


@pytest.fixture(scope='session')
def data_path():
    def path(name):
        return os.path.join(DATA_DIR, name)
    return path


@pytest.fixture(scope='session')
def eight_atoms():
    return atomlab.constructions.eight_atoms()


@pytest.fixture(scope='session')
def two_step_table():
    '''
    The atoms-in-M^2 ring for q = 2, 3, 4, 5 with its expected
    (layer 1, in M^2, total) counts.
    '''
    expected = {2: (6, 2, 8), 3: (12, 9, 21), 4: (20, 24, 44), 5: (30, 50, 80)}
    rings = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}
    return {
        q: (atomlab.constructions.atoms_in_m2(*rings[q]), expected[q])
        for q in expected
    }


@pytest.fixture(scope='session')
def gf2_gf4():
    return atomlab.constructions.corrected(2, 1, 2, 1)


@pytest.fixture(scope='session')
def gf2_conductor2():
    return atomlab.constructions.corrected(2, 1, 1, 2)
