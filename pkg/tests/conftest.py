from __future__ import annotations

import pytest

from storewb import fixtures


@pytest.fixture(scope="session")
def erp_project():
    """Full fixture project, all ten steps complete."""
    return fixtures.build_erp_project()


@pytest.fixture(scope="session")
def erp_project_step8():
    """Fixture through elicitation: requirements attached, no validations yet."""
    return fixtures.build_erp_project(through_step=8)


@pytest.fixture(scope="session")
def erp_catalog():
    return fixtures.erp_catalog()
