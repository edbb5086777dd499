from .. import config, polytope, repn, tropical
from ..characters import TorusPoint, eval_char
from ..errors import InvalidInputError
from ..models.representation import RepDescription
from ..models.verdict import CharOutput, MembershipModel, TensorOutput, TropOutput, WpOutput
from ..storage import load_element, load_representation
from ..utils.rational import parse_rational_list
from . import RHO, CommandGroup, arg

group = CommandGroup("evaluation")

REP = arg("--rep", required=True, metavar="PATH", help="JSON file with the representation")


@group.command(
    "char",
    help="Exact character value at a rational point of the SL torus",
    arguments=[REP, arg("--point", required=True, help="comma-separated positive rationals with product 1, e.g. 2,1/2")],
)
def cmd_char(args) -> CharOutput:
    rho = load_representation(args.rep)
    point = TorusPoint.parse(args.point)
    if point.n != rho.n:
        raise InvalidInputError(f"Point has {point.n} coordinates, representation has n = {rho.n}")
    return CharOutput(n=rho.n, point=list(point.x), value=eval_char(rho, point))


@group.command(
    "trop",
    help="Tropical evaluation: the maximum of <alpha, y> over the weights",
    arguments=[
        REP,
        arg("--direction", required=True, help="comma-separated rationals, e.g. 2,-2"),
        arg("--gl", action="store_true", help="read a Schur-positive element (n >= 1); the direction need not sum to zero"),
    ],
)
def cmd_trop(args) -> TropOutput:
    if args.gl:
        f = load_element(args.rep)
        y = tropical.Direction.parse(args.direction)
    else:
        f = load_representation(args.rep)
        y = tropical.Direction.parse(args.direction, sl_constraint=True)
    return TropOutput(n=f.n, direction=list(y.y), value=tropical.trop_eval(f, y))


@group.command(
    "tensor",
    help="Decompose rho^K (tensored with sigma when given) into irreducibles",
    arguments=[
        RHO,
        arg("--sigma", metavar="PATH", help="JSON file with a second factor"),
        arg("--power", type=int, default=1, help="tensor power K of rho (default 1)"),
    ],
)
def cmd_tensor(args) -> TensorOutput:
    rho = load_representation(args.rho)
    result = repn.tensor_power(rho, args.power)
    if args.sigma:
        result = repn.tensor(result, load_representation(args.sigma))
    return TensorOutput(result=RepDescription.from_representation(result), dimension=repn.dimension(result))


@group.command(
    "wp",
    help="Weight polytope of rho, optionally compared with sigma or tested at a point",
    arguments=[
        RHO,
        arg("--sigma", metavar="PATH", help="check WP(rho) inside WP(sigma) and inside its interior"),
        arg("--point", help="sum-zero point to test against WP(rho), e.g. 1/3,-1/3"),
    ],
)
def cmd_wp(args) -> WpOutput:
    rho = load_representation(args.rho)
    wp = polytope.weight_polytope(rho)
    output = WpOutput(
        n=rho.n,
        generators=[list(g) for g in wp.generators],
        vertex_count=len(wp.vertices),
        affine_dimension=polytope.affine_dimension(wp),
    )
    if args.sigma:
        sigma = load_representation(args.sigma)
        threads = config.effective_threads(args.threads)
        output.contained = polytope.wp_containment(rho, sigma, threads)
        output.strictly_contained = polytope.wp_strict_containment(rho, sigma, threads)
    if args.point:
        try:
            p = parse_rational_list(args.point)
        except ValueError as e:
            raise InvalidInputError(str(e))
        found = polytope.lp_relint_membership(p, wp)
        output.membership = MembershipModel(
            point=p,
            inside_relint=found.inside_relint,
            inside_closed=found.inside_closed,
            epsilon=found.epsilon,
        )
    return output
