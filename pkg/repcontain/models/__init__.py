from enum import Enum


class RealStatus(str, Enum):
    CERTIFIED_STRICT = "certified_strict"
    NO_VIOLATION_FOUND = "no_violation_found"
    VIOLATED_AT = "violated_at"
    # n = 2 only: chi_sigma - chi_rho touches zero at an irrational point
    BOUNDARY_CONTACT = "boundary_contact"


class WitnessKind(str, Enum):
    CATALYST = "catalyst"
    EXPONENT = "exponent"


# Export all models
from .params import AnalysisParams
from .representation import ElementDescription, RepDescription, TermModel
from .verdict import (
    AsymptoticModel,
    AsymptoticOutput,
    CatalystOutput,
    CertificateModel,
    CharOutput,
    ConverseCheckModel,
    ConverseReportModel,
    DimensionModel,
    MembershipModel,
    RealConditionModel,
    SelftestCheckModel,
    SelftestOutput,
    Su2Output,
    TensorOutput,
    TropOutput,
    VerdictModel,
    WpOutput,
)
