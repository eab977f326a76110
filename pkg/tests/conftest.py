import pytest

import fellowtravel as ft


@pytest.fixture(scope="session")
def z2_provider():
    return ft.grid_lex_provider()


@pytest.fixture(scope="session")
def z_provider():
    return ft.z_power_provider()


@pytest.fixture(scope="session")
def z_toy_provider(z_provider):
    """The integer line with the form of 2 rewritten to a non-prefix-closed word."""
    model = z_provider.model
    return ft.patched(z_provider, {(2,): model.parse("aaaA")}, name="z-toy")


@pytest.fixture(scope="session")
def bs12_provider():
    return ft.bs_provider(1, 2)


@pytest.fixture(scope="session")
def bs23_provider():
    return ft.bs_provider(2, 3)


@pytest.fixture(scope="session")
def lamp_provider_fixture():
    return ft.lamp_provider()


@pytest.fixture(scope="session")
def bs12_ball8(bs12_provider):
    return ft.bfs_ball(bs12_provider.model, 8)


@pytest.fixture(scope="session")
def bs23_ball8(bs23_provider):
    return ft.bfs_ball(bs23_provider.model, 8)


@pytest.fixture(scope="session")
def lamp_ball6(lamp_provider_fixture):
    return ft.bfs_ball(lamp_provider_fixture.model, 6)


@pytest.fixture(scope="session")
def bs12_curve8(bs12_provider):
    return ft.divergence_curve(bs12_provider, 8)


@pytest.fixture(scope="session")
def bs12_curve7(bs12_provider):
    return ft.divergence_curve(bs12_provider, 7)


@pytest.fixture(scope="session")
def lamp_curve6(lamp_provider_fixture):
    return ft.divergence_curve(lamp_provider_fixture, 6)


@pytest.fixture(scope="session")
def z2_curve6(z2_provider):
    return ft.divergence_curve(z2_provider, 6)
