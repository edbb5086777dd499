from typing import Dict, List, Optional

from pydantic import BaseModel

from ..su2 import CertificateStatus
from ..utils.rational import PyRational
from . import RealStatus, WitnessKind
from .representation import ElementDescription, RepDescription


class CertificateModel(BaseModel):
    status: CertificateStatus
    polynomial: List[int]  # low to high degree
    value_at_one: int
    witness: Optional[PyRational] = None
    root_count: Optional[int] = None
    cauchy_bound: Optional[PyRational] = None
    root_interval: Optional[List[PyRational]] = None

    @classmethod
    def from_certificate(cls, cert, g) -> "CertificateModel":
        return cls(
            status=cert.status,
            polynomial=list(g.coeffs),
            value_at_one=cert.value_at_one,
            witness=cert.witness,
            root_count=cert.root_count,
            cauchy_bound=cert.bound,
            root_interval=list(cert.root_interval) if cert.root_interval else None,
        )


class RealConditionModel(BaseModel):
    status: RealStatus
    point: Optional[List[PyRational]] = None
    certificate: Optional[CertificateModel] = None


class DimensionModel(BaseModel):
    dim_rho: int
    dim_sigma: int
    strict: bool


class AsymptoticModel(BaseModel):
    minimal_n: int
    all_good_up_to_n_max: bool
    checked_up_to: int


class ConverseCheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class ConverseReportModel(BaseModel):
    witness: WitnessKind
    passed: bool
    checks: List[ConverseCheckModel] = []

    @classmethod
    def from_report(cls, report) -> "ConverseReportModel":
        return cls(
            witness=report.witness,
            passed=report.passed,
            checks=[ConverseCheckModel(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
        )


class VerdictModel(BaseModel):
    n: int
    condition_real: RealConditionModel
    condition_tropical: bool
    dimension: DimensionModel
    sigma_generic: bool
    theorem_applicable: bool
    asymptotic: Optional[AsymptoticModel] = None
    catalyst: Optional[RepDescription] = None
    converse_report: List[ConverseReportModel] = []

    @classmethod
    def from_conditions(cls, n: int, conditions, **extra) -> "VerdictModel":
        real = conditions.real
        certificate = None
        if real.certificate is not None:
            certificate = CertificateModel.from_certificate(real.certificate, real.polynomial)
        return cls(
            n=n,
            condition_real=RealConditionModel(
                status=real.status,
                point=list(real.point.x) if real.point else None,
                certificate=certificate,
            ),
            condition_tropical=conditions.tropical,
            dimension=DimensionModel(
                dim_rho=conditions.dimension.dim_rho,
                dim_sigma=conditions.dimension.dim_sigma,
                strict=conditions.dimension.strict,
            ),
            sigma_generic=conditions.sigma_generic,
            theorem_applicable=conditions.sigma_generic,
            **extra,
        )

    @classmethod
    def from_verdict(cls, n: int, verdict) -> "VerdictModel":
        asymptotic = None
        if verdict.asymptotic is not None:
            asymptotic = AsymptoticModel(
                minimal_n=verdict.asymptotic.minimal_n,
                all_good_up_to_n_max=verdict.asymptotic.all_good_up_to_n_max,
                checked_up_to=verdict.asymptotic.checked_up_to,
            )
        return cls.from_conditions(
            n,
            verdict.conditions,
            asymptotic=asymptotic,
            catalyst=RepDescription.from_representation(verdict.catalyst) if verdict.catalyst else None,
            converse_report=[ConverseReportModel.from_report(r) for r in verdict.converse],
        )


class AsymptoticOutput(BaseModel):
    n_max: int
    sigma_generic: bool
    result: Optional[AsymptoticModel] = None
    converse_report: Optional[ConverseReportModel] = None


class CatalystOutput(BaseModel):
    max_boxes: int
    max_terms: int
    catalyst: Optional[RepDescription] = None
    converse_report: Optional[ConverseReportModel] = None


class CharOutput(BaseModel):
    n: int
    point: List[PyRational]
    value: PyRational


class TropOutput(BaseModel):
    n: int
    direction: List[PyRational]
    value: Optional[PyRational] = None  # null is -infinity


class TensorOutput(BaseModel):
    result: ElementDescription
    dimension: Optional[int] = None


class MembershipModel(BaseModel):
    point: List[PyRational]
    inside_relint: bool
    inside_closed: bool
    epsilon: Optional[PyRational] = None


class WpOutput(BaseModel):
    n: int
    generators: List[List[PyRational]]
    vertex_count: int
    affine_dimension: int
    contained: Optional[bool] = None
    strictly_contained: Optional[bool] = None
    membership: Optional[MembershipModel] = None


class Su2Output(BaseModel):
    mult_rho: Dict[int, int]
    mult_sigma: Dict[int, int]
    certificate: CertificateModel
    tropical: bool


class SelftestCheckModel(BaseModel):
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


class SelftestOutput(BaseModel):
    passed: bool
    checks: List[SelftestCheckModel] = []
