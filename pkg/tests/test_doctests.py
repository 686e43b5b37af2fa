"""Every docstring example in the package must execute as written."""

import doctest

import moduli_brauer.brauer
import moduli_brauer.cli
import moduli_brauer.finab
import moduli_brauer.rootdata
import pytest

MODULES = [
    moduli_brauer.finab,
    moduli_brauer.rootdata,
    moduli_brauer.brauer,
    moduli_brauer.cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
