"""
Equality of log-normal means: Computational Approach Test, likelihood
ratio test and Monte Carlo size/power studies.
"""
__version__ = "1.0.0"

from lognormal_cat.estimation.groups import (  # noqa: E402
    estimate_group,
    make_group_sample,
    summarize,
    theta_statistic,
)
from lognormal_cat.estimation.restricted import (  # noqa: E402
    fit_restricted,
    full_loglik,
    profile_negloglik,
    profile_sigma2,
)
from lognormal_cat.inference.cat import generate_replicates, run_cat, simulate_replicate  # noqa: E402
from lognormal_cat.inference.lrt import chi2_upper_tail, run_lrt  # noqa: E402
from lognormal_cat.models.results import Method, StudyResult, TestResult  # noqa: E402
from lognormal_cat.models.scenario import Scenario  # noqa: E402
from lognormal_cat.simulation.study import draw_experiment, run_study  # noqa: E402
