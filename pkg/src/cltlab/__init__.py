"""cltlab: computational probability on the real line.

Quadrature for improper and oscillatory integrals, discrete/density/empirical
distributions with exact convolution, characteristic functions with Levy
inversion, weak-convergence diagnostics (CDF grids, Levy metric, test-function
dictionaries), finite probability spaces, and a CLT convergence harness with a
CSV-emitting CLI.

Note: `variance` here is the distribution-level moment; the finite-space
random-variable version lives at `cltlab.finite_space.variance`.
"""

from .charfuns import (
    char_fn,
    charfun,
    charfun_distance,
    charfun_of_sum,
    levy_invert,
    normal_charfun,
    second_order_bound,
    second_order_check,
)
from .clt import (
    CltExperiment,
    ConvergenceReport,
    Row,
    center,
    charfun_convergence_curve,
    emit_csv,
    run_clt,
)
from .distributions import (
    Density,
    Discrete,
    Dist,
    Empirical,
    atom_mass,
    cdf,
    convolve,
    discontinuity_points,
    fair_die,
    iid_sum_normalized,
    load_discrete,
    mean,
    normal,
    normal_density,
    point_mass,
    quantile,
    rademacher,
    sample,
    save_discrete,
    shift_scale,
    standard_normal,
    variance,
)
from .errors import (
    AtomOnGridError,
    NonConvergenceError,
    NotOscillatoryError,
    SizeLimitError,
)
from .finite_space import (
    EventFamily,
    FiniteProbSpace,
    MeasureCheck,
    are_independent,
    expectation,
    fair_die_space,
    generate_sigma_algebra,
    is_probability_measure,
    product_space,
    pushforward,
)
from .numerics import (
    DEFAULT_TOL,
    exp_taylor_remainder,
    gaussian_moment,
    integrate,
    integrate_complex,
    integrate_oscillatory,
    sinc,
)
from .weak_convergence import (
    BoundaryCheck,
    ConvergenceProbe,
    TestFn,
    boundary_null_check,
    cdf_distance,
    default_grid,
    default_probe,
    default_test_fns,
    integral_against,
    levy_metric,
    portmanteau_testfn,
)

__version__ = "0.1.0"

__all__ = [
    "AtomOnGridError",
    "BoundaryCheck",
    "CltExperiment",
    "ConvergenceProbe",
    "ConvergenceReport",
    "DEFAULT_TOL",
    "Density",
    "Discrete",
    "Dist",
    "Empirical",
    "EventFamily",
    "FiniteProbSpace",
    "MeasureCheck",
    "NonConvergenceError",
    "NotOscillatoryError",
    "Row",
    "SizeLimitError",
    "TestFn",
    "are_independent",
    "atom_mass",
    "boundary_null_check",
    "cdf",
    "cdf_distance",
    "center",
    "char_fn",
    "charfun",
    "charfun_convergence_curve",
    "charfun_distance",
    "charfun_of_sum",
    "convolve",
    "default_grid",
    "default_probe",
    "default_test_fns",
    "discontinuity_points",
    "emit_csv",
    "exp_taylor_remainder",
    "expectation",
    "fair_die",
    "fair_die_space",
    "gaussian_moment",
    "generate_sigma_algebra",
    "iid_sum_normalized",
    "integral_against",
    "integrate",
    "integrate_complex",
    "integrate_oscillatory",
    "is_probability_measure",
    "levy_invert",
    "levy_metric",
    "load_discrete",
    "mean",
    "normal",
    "normal_charfun",
    "normal_density",
    "point_mass",
    "portmanteau_testfn",
    "product_space",
    "pushforward",
    "quantile",
    "rademacher",
    "run_clt",
    "sample",
    "save_discrete",
    "second_order_bound",
    "second_order_check",
    "shift_scale",
    "sinc",
    "standard_normal",
    "variance",
]
