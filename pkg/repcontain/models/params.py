from typing import Optional

from pydantic import BaseModel, Field

from .. import config


class AnalysisParams(BaseModel):
    """Search bounds for the decision pipeline; every field has a config default."""

    n_max: int = Field(default=config.DEFAULT_NMAX, ge=1)
    grid_depth: int = Field(default=config.DEFAULT_GRID_DEPTH, ge=2)
    descent_iters: int = Field(default=config.DEFAULT_DESCENT_ITERS, ge=0)
    log_box: float = Field(default=config.DEFAULT_LOG_BOX, gt=0)
    catalyst_boxes: int = Field(default=config.DEFAULT_CATALYST_BOXES, ge=0)
    catalyst_terms: int = Field(default=config.DEFAULT_CATALYST_TERMS, ge=1)
    catalyst_powers: int = Field(default=config.DEFAULT_CATALYST_POWERS, ge=0)
    converse_samples: int = Field(default=config.DEFAULT_CONVERSE_SAMPLES, ge=0)
    seed: int = config.SAMPLE_SEED
    threads: int = Field(default=1, ge=1)

    @classmethod
    def from_flags(cls, threads: Optional[int] = None, **flags) -> "AnalysisParams":
        """Build from CLI flags, dropping the ones left unset."""
        values = {k: v for k, v in flags.items() if v is not None}
        return cls(threads=config.effective_threads(threads), **values)
