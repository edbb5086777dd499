from .. import su2
from ..models.verdict import CertificateModel, Su2Output
from ..storage import load_representation
from . import RHO, SIGMA, CommandGroup

group = CommandGroup("su2")


@group.command(
    "su2-certify",
    help="n = 2: decide chi_rho < chi_sigma on the whole torus with a Sturm certificate",
    arguments=[RHO, SIGMA],
)
def cmd_su2_certify(args) -> Su2Output:
    m_rho = su2.from_representation(load_representation(args.rho))
    m_sigma = su2.from_representation(load_representation(args.sigma))
    g = su2.char_diff_polynomial(m_rho, m_sigma)
    cert = su2.certify_strict_positive_on_ray(g)
    tropical = bool(m_rho) and bool(m_sigma) and su2.su2_tropical_check(m_rho, m_sigma)
    return Su2Output(
        mult_rho=dict(m_rho.mult),
        mult_sigma=dict(m_sigma.mult),
        certificate=CertificateModel.from_certificate(cert, g),
        tropical=tropical,
    )
