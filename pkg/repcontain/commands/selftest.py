from .. import config
from ..models.verdict import SelftestCheckModel, SelftestOutput
from ..selftest import run_selftest
from . import CommandGroup, arg
from .analysis import params_from_args

group = CommandGroup("selftest")


@group.command(
    "selftest",
    help="Run every oracle cross-check and the corpus; exits 2 on any failure",
    arguments=[
        arg("--quick", action="store_true", help="reduced sizes, n = 2 corpus pairs only"),
        arg("--corpus", metavar="DIR", help=f"corpus directory (default {config.CORPUS_DIR})"),
    ],
)
def cmd_selftest(args) -> SelftestOutput:
    results = run_selftest(args.quick, args.corpus, params_from_args(args))
    return SelftestOutput(
        passed=all(r.passed for r in results),
        checks=[
            SelftestCheckModel(name=r.name, passed=r.passed, skipped=r.skipped, detail=r.detail)
            for r in results
        ],
    )
