from hitchfib.config import LazyCall
from hitchfib.evaluation import (
    AdmissibilityEvaluator,
    AgreementEvaluator,
    SymmetricIdentityEvaluator,
)

# fmt: off
run = dict(
    command="classify",

    # Inputs: JSON files or inline JSON strings
    case=None,  # restrict verify/sweep to one pole configuration, e.g. "d22-ss"
    params=None,
    weights=None,  # generic weights (all 1/4) when unset

    # Numerical oracle
    tol=1e-9,  # root-clustering tolerance
    cluster_tol=1e-7,  # relative tolerance for grouping singular points by t

    # Sampling
    samples=1000,  # random parameter sets per case
    stratum_samples=20,  # on-stratum samples per branch (sweep only)
    seed=7,
    bound=20,  # numerators in [-bound, bound], denominators in [1, bound]
    branch=None,  # sweep: keep only this branch, e.g. "d31-ss/2"
    symmetric_checks=True,  # exact pair-product identity on semisimple samples

    # Extended weight walk (wallcross)
    alpha_start="-1/2",
    alpha_stop="5/2",
    alpha_step="1/10",

    num_workers=1,
    progress=False,
    output=None,  # report path; stdout when unset
    output_dir=None,  # log file and config.yaml backup
    log_level="INFO",
)
# fmt: on

evaluation = dict(
    evaluators=[
        LazyCall(AgreementEvaluator)(max_details=50),
        LazyCall(AdmissibilityEvaluator)(),
        LazyCall(SymmetricIdentityEvaluator)(),
    ],
)
