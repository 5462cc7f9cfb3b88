import pytest

from translab.generators import rename_labels
from translab.poset import extend_with_label, minimal_condition


@pytest.fixture
def worked_condition():
    """The u = {5, 9} condition: n = 3, m_star = 3, rho = 001."""
    return extend_with_label(minimal_condition(5), 9)


@pytest.fixture
def worked_amalgam(worked_condition):
    """(p, q, r): the u = {5, 9} condition, its 9 -> 13 copy, their amalgam."""
    from translab.poset import amalgamate

    q = rename_labels(worked_condition, {9: 13})
    return worked_condition, q, amalgamate(worked_condition, q)
