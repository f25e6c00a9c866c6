"""Barnes multiple zeta and gamma functions with zeta-regularized products."""

from .barnes import (
    ReductionCoeffs,
    alt_barnes_zeta,
    alt_barnes_zeta_ds0,
    barnes_zeta,
    barnes_zeta_ds0,
    reduction_coeffs,
)
from .errors import (
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    LerchForgeError,
    PoleError,
    ValidationError,
)
from .gamma import euler_gamma, gamma_multiple, gamma_multiple_star
from .hurwitz import (
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_ds,
    bernoulli_numbers,
    hurwitz_zeta,
    hurwitz_zeta_ds,
)
from .params import EMParams, GammaValue, QuadParams, ValueWithError
from .regularization import (
    IDENTITIES,
    IdentityReport,
    ProductTrace,
    WeightSpec,
    identity_report,
    lerch_partials,
    reg_product,
    wallis_partials,
)

__version__ = "0.1.0"
