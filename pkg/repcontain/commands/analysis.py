from .. import config, decision
from ..models import AnalysisParams
from ..models.representation import RepDescription
from ..models.verdict import (
    AsymptoticModel,
    AsymptoticOutput,
    CatalystOutput,
    ConverseReportModel,
    VerdictModel,
)
from ..repn import is_generic
from ..storage import load_representation
from . import RHO, SIGMA, CommandGroup, arg

group = CommandGroup("analysis")

NMAX = arg("--nmax", dest="n_max", type=int, help=f"largest tensor power tried (default {config.DEFAULT_NMAX})")
CATALYST_FLAGS = [
    arg("--catalyst-boxes", type=int, help=f"largest irrep size in catalyst candidates (default {config.DEFAULT_CATALYST_BOXES})"),
    arg("--catalyst-terms", type=int, help=f"most irreps summed in a candidate (default {config.DEFAULT_CATALYST_TERMS})"),
    arg("--catalyst-powers", type=int, help=f"highest power of sigma tried first (default {config.DEFAULT_CATALYST_POWERS})"),
]
CONVERSE_FLAGS = [
    arg("--converse-samples", type=int, help=f"sampled torus points in converse checks (default {config.DEFAULT_CONVERSE_SAMPLES})"),
]
SEARCH_FLAGS = [
    arg("--grid-depth", type=int, help=f"grid points per log axis (default {config.DEFAULT_GRID_DEPTH})"),
    arg("--descent-iters", type=int, help=f"coordinate descent rounds (default {config.DEFAULT_DESCENT_ITERS})"),
    arg("--log-box", type=float, help=f"half width of the log-coordinate box (default {config.DEFAULT_LOG_BOX})"),
]

_PARAM_FIELDS = (
    "n_max", "grid_depth", "descent_iters", "log_box", "catalyst_boxes",
    "catalyst_terms", "catalyst_powers", "converse_samples",
)


def params_from_args(args) -> AnalysisParams:
    flags = {name: getattr(args, name, None) for name in _PARAM_FIELDS}
    return AnalysisParams.from_flags(threads=args.threads, **flags)


def _converse(rho, sigma, params, **witness):
    report = decision.verify_converse(
        rho,
        sigma,
        samples=params.converse_samples,
        seed=params.seed,
        threads=params.threads,
        **witness,
    )
    return ConverseReportModel.from_report(report)


@group.command(
    "check",
    help="Check both strict conditions, then search for witnesses and verify the converse",
    arguments=[RHO, SIGMA, NMAX] + SEARCH_FLAGS + CATALYST_FLAGS + CONVERSE_FLAGS,
)
def cmd_check(args) -> VerdictModel:
    params = params_from_args(args)
    rho, sigma = load_representation(args.rho), load_representation(args.sigma)
    verdict = decision.analyze(rho, sigma, params)
    return VerdictModel.from_verdict(rho.n, verdict)


@group.command(
    "asymptotic",
    help="Least k with rho^k contained in sigma^k, by brute force",
    arguments=[RHO, SIGMA, NMAX] + CONVERSE_FLAGS,
)
def cmd_asymptotic(args) -> AsymptoticOutput:
    params = params_from_args(args)
    rho, sigma = load_representation(args.rho), load_representation(args.sigma)
    found = decision.find_asymptotic_exponent(rho, sigma, params.n_max, params.threads)
    output = AsymptoticOutput(n_max=params.n_max, sigma_generic=is_generic(sigma))
    if found is not None:
        output.result = AsymptoticModel(
            minimal_n=found.minimal_n,
            all_good_up_to_n_max=found.all_good_up_to_n_max,
            checked_up_to=found.checked_up_to,
        )
        output.converse_report = _converse(rho, sigma, params, exponent=found.minimal_n)
    return output


@group.command(
    "catalyst",
    help="First catalyst eta with rho*eta contained in sigma*eta, in a fixed enumeration order",
    arguments=[
        RHO,
        SIGMA,
        arg("--exponent", type=int, help="known k with rho^k <= sigma^k; adds the telescoping candidate"),
    ] + CATALYST_FLAGS + CONVERSE_FLAGS,
)
def cmd_catalyst(args) -> CatalystOutput:
    params = params_from_args(args)
    rho, sigma = load_representation(args.rho), load_representation(args.sigma)
    eta = decision.find_catalyst(
        rho,
        sigma,
        params.catalyst_boxes,
        params.catalyst_terms,
        exponent=args.exponent,
        max_powers=params.catalyst_powers,
        threads=params.threads,
    )
    output = CatalystOutput(max_boxes=params.catalyst_boxes, max_terms=params.catalyst_terms)
    if eta is not None:
        output.catalyst = RepDescription.from_representation(eta)
        output.converse_report = _converse(rho, sigma, params, catalyst=eta)
    return output
