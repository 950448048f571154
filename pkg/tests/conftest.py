import pytest

from sarrus import Matrix

# the running 4x4 example used throughout the worked tests
WORKED_ROWS = [[2, 3, 4, -1], [1, -2, 0, 5], [5, 2, 2, -3], [8, 1, 1, 1]]
WORKED_DET = 140
WORKED_SUMS = (551, 411)


@pytest.fixture
def worked_matrix() -> Matrix:
    return Matrix.from_rows(WORKED_ROWS)
