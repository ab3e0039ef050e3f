import pytest

from impartial import closed_forms


@pytest.fixture(scope="session")
def dn_grid_64():
    return closed_forms.delete_nim_grundy_grid(64)


@pytest.fixture(scope="session")
def vdn_grid_64():
    return closed_forms.vdn_grundy_grid(64)
