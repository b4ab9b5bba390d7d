import pytest

from stefan_thaw.model import PhysicalParams, reduce_params

# physically plausible water/ice/soil set in CGS-calorie units; gamma_cc and
# the specific-heat ordering are the knobs that pick the (M, N) sign quadrant
BASE_PARAMS = dict(
    epsilon=0.4,
    rho_w=1.0,
    rho_i=0.917,
    c_w=1.0,
    c_i=0.5,
    c_u=0.8,
    c_f=0.6,
    k_u=0.0014,
    k_f=0.0053,
    rho_u=1.2,
    rho_f=1.4,
    latent_l=80.0,
    gamma_cc=0.115,
    mu=0.0179,
    perm_k=1e-7,
    a_init=4.0,
    b_ext=10.0,
    h0=0.05,
)


def make_phys(**overrides) -> PhysicalParams:
    params = dict(BASE_PARAMS)
    params.update(overrides)
    return PhysicalParams(**params)


@pytest.fixture
def phys_pp():
    """M > 0, N > 0, p <= 1, h0 above critical."""
    return make_phys()


@pytest.fixture
def dl_pp(phys_pp):
    return reduce_params(phys_pp)


@pytest.fixture
def phys_pm():
    """M > 0, N < 0 (frozen-zone specific heat above the unfrozen one)."""
    return make_phys(c_i=1.5)


@pytest.fixture
def phys_mp():
    """M < 0, N > 0."""
    return make_phys(gamma_cc=-0.115, c_i=1.5)


@pytest.fixture
def phys_mm():
    """M < 0, N < 0; two roots of the front equation."""
    return make_phys(gamma_cc=-0.115)


@pytest.fixture
def phys_classical():
    """rho_w = rho_i: zero density jump, classical Stefan reduction."""
    return make_phys(rho_i=1.0, b0_wall=3.0)
