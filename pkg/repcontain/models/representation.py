import logging
from collections import Counter
from typing import List

from pydantic import BaseModel, Field, field_validator

from .. import repn
from ..partition import is_partition
from ..repn import Representation
from ..schur import SchurElement

logger = logging.getLogger(__name__)


class TermModel(BaseModel):
    partition: List[int] = []
    mult: int = Field(default=1, ge=1)

    @field_validator("partition")
    @classmethod
    def check_partition(cls, value):
        if not is_partition(tuple(value)):
            raise ValueError(f"{value} is not a weakly decreasing list of positive integers")
        return value


class ElementDescription(BaseModel):
    n: int = Field(ge=1)
    terms: List[TermModel] = []

    @field_validator("terms")
    @classmethod
    def sort_terms(cls, value):
        return sorted(value, key=lambda t: t.partition)

    def merged_terms(self) -> Counter:
        merged = Counter()
        for term in self.terms:
            merged[tuple(term.partition)] += term.mult
        return merged

    def to_element(self) -> SchurElement:
        return SchurElement(self.n, self.merged_terms())

    @classmethod
    def from_element(cls, f: SchurElement) -> "ElementDescription":
        return cls(
            n=f.n,
            terms=[TermModel(partition=list(lam), mult=m) for lam, m in sorted(f.coeffs.items())],
        )


class RepDescription(ElementDescription):
    n: int = Field(ge=2)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 2,
                "terms": [
                    {"partition": [], "mult": 1},
                    {"partition": [1], "mult": 1},
                    {"partition": [2], "mult": 1},
                ],
            }
        }

    def to_representation(self) -> Representation:
        merged = self.merged_terms()
        if len(merged) != len(self.terms):
            logger.warning("Merged duplicate terms in n = %d input", self.n)
        element = SchurElement(self.n, merged)
        if not repn.is_canonical(element):
            logger.warning("Reduced input modulo the determinant (e_%d ~ 1)", self.n)
        return repn.canonicalize(element)

    @classmethod
    def from_representation(cls, rho: Representation) -> "RepDescription":
        return cls(
            n=rho.n,
            terms=[TermModel(partition=list(lam), mult=m) for lam, m in sorted(rho.coeffs.items())],
        )
