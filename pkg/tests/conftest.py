import sys
from pathlib import Path

import pytest

from bkmtensor import validate_matrix

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "bkmtensor" / "fixtures"

MATRICES = {
    "A1": [[2]],
    "A1xA1": [[2, 0], [0, 2]],
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -2], [-1, 2]],
    "G2": [[2, -1], [-3, 2]],
    "heis": [[0]],
    "neg": [[-2]],
    "re_im": [[2, -1], [-1, 0]],
    "im_im": [[0, 0], [0, 0]],
    "im_pair": [[0, -1], [-1, 0]],
    "ex1": [[2, -1, 0], [-1, 0, -1], [0, -1, 2]],
    "hyp": [[2, -3], [-3, 2]],
    "A3_im": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 0, -1], [0, 0, -1, -2]],
    "tri_im": [[2, -1, -1, 0], [-1, 2, -1, 0], [-1, -1, -2, -1], [0, 0, -2, 0]],
    "frac_im": [[-1, "-1/2"], ["-1/2", 0]],
}

# the algebras the decision sweep runs over
SWEEP = ["A1", "A1xA1", "A2", "heis", "re_im", "ex1"]
# the curated set for factorization and log-law checks (rank <= 4)
CURATED = ["A1", "A1xA1", "A2", "B2", "G2", "heis", "neg", "re_im", "im_im",
           "im_pair", "ex1", "hyp", "A3_im", "tri_im"]
FINITE = ["A1", "A1xA1", "A2", "B2", "G2"]


def algebra(name):
    return validate_matrix(MATRICES[name])


@pytest.fixture
def ex1():
    return algebra("ex1")


@pytest.fixture
def a2():
    return algebra("A2")


@pytest.fixture
def a1():
    return algebra("A1")


@pytest.fixture
def heis():
    return algebra("heis")
