"""
Job and payload schemas for the command-line runner.

A job is {"command": ..., "input": {...}, "options": {...}}. The envelope is
validated first, then the input against the schema of its command; pydantic
errors are reported as JSON-pointer paths into the submitted document.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from exterior.multivector import MultiVector
from exterior.symplectic import SymplecticMatrix
from fn_tqft.cobordism import CobordismWord
from rings.laurent import LaurentPolynomial
from utils.errors import SchemaViolation

DEFAULT_PRIME = 5
DEFAULT_GMAX = 3
DEFAULT_SEED = 0
DEFAULT_WORKERS = 1

Command = Literal["alexander", "weights", "lescop", "casson", "cocycle", "pmod", "specht", "resolution",
                  "cut", "check"]
Suite = Literal["all", "rings", "exterior", "lefschetz", "fn_tqft", "lescop", "casson", "jm_ext", "pmod", "cut"]
Matrix = List[List[int]]


class _Schema(BaseModel):
    model_config = ConfigDict(extra="forbid")


class JobOptions(_Schema):
    p: Optional[int] = Field(default=None, ge=2)
    gmax: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    out: Optional[str] = None
    format: Optional[Literal["json", "csv"]] = None

    def merged_over(self, lower: JobOptions) -> JobOptions:
        """Fields set here win over ``lower``."""
        return JobOptions(**{**lower.model_dump(exclude_none=True), **self.model_dump(exclude_none=True)})

    def resolved(self) -> ResolvedOptions:
        return ResolvedOptions(p=self.p if self.p is not None else DEFAULT_PRIME,
                               gmax=self.gmax if self.gmax is not None else DEFAULT_GMAX,
                               seed=self.seed if self.seed is not None else DEFAULT_SEED,
                               out=self.out, format=self.format or "json")


@dataclasses.dataclass(frozen=True)
class ResolvedOptions:
    p: int
    gmax: int
    seed: int
    out: Optional[str] = None
    format: str = "json"


class McgOp(_Schema):
    mcg: Matrix


class WordPayload(_Schema):
    """{"start_g": g, "ops": [...]} as accepted by CobordismWord.from_json."""

    start_g: int = Field(ge=0)
    ops: List[Union[Literal["add_handle", "remove_handle"], McgOp]] = []

    def to_word(self) -> CobordismWord:
        return CobordismWord.from_json(self.model_dump())


class PolyPayload(_Schema):
    coeffs: Dict[int, int]

    def to_poly(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.coeffs)


class PresentationPayload(_Schema):
    g: int = Field(ge=0)
    a_plus: Matrix
    a_minus: Matrix
    tors_order: int = Field(default=1, ge=1)


class FormPayload(_Schema):
    g: int = Field(ge=1)
    terms: Dict[int, int]

    def to_form(self) -> MultiVector:
        return MultiVector.from_json(self.model_dump())


def _exactly_one(payload: BaseModel, names: List[str]):
    given = [name for name in names if getattr(payload, name) is not None]
    if len(given) != 1:
        raise ValueError(f"exactly one of {names} is required, got {given or 'none'}")


class AlexanderPayload(_Schema):
    start_g: Optional[int] = Field(default=None, ge=0)
    ops: List[Union[Literal["add_handle", "remove_handle"], McgOp]] = []
    presentation: Optional[PresentationPayload] = None

    @model_validator(mode="after")
    def _one_source(self):
        _exactly_one(self, ["start_g", "presentation"])
        return self

    def to_word(self) -> CobordismWord:
        return WordPayload(start_g=self.start_g, ops=self.ops).to_word()


class LescopPayload(_Schema):
    poly: Optional[PolyPayload] = None
    weights: Optional[Dict[int, int]] = None
    start_g: Optional[int] = Field(default=None, ge=0)
    ops: List[Union[Literal["add_handle", "remove_handle"], McgOp]] = []

    @model_validator(mode="after")
    def _one_source(self):
        _exactly_one(self, ["poly", "weights", "start_g"])
        return self

    def to_word(self) -> CobordismWord:
        return WordPayload(start_g=self.start_g, ops=self.ops).to_word()


class CurvePayload(_Schema):
    g: int = Field(ge=1)
    h: Optional[int] = None
    u: Matrix
    v: Matrix


class CassonPayload(_Schema):
    curve: CurvePayload
    conjugator: Optional[Matrix] = None


class CocyclePayload(_Schema):
    u1: Optional[FormPayload] = None
    u2: Optional[FormPayload] = None
    dictionary_g: Optional[int] = Field(default=None, ge=3)
    limit: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _pair_or_dictionary(self):
        pair = self.u1 is not None and self.u2 is not None
        if pair == (self.dictionary_g is not None) or (self.u1 is None) != (self.u2 is None):
            raise ValueError("give either u1 and u2, or dictionary_g")
        return self


class SpechtPayload(_Schema):
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    permutations: List[List[int]] = []
    samples: int = Field(default=0, ge=0)


class ResolutionPayload(_Schema):
    k: int = Field(ge=1)
    g: int = Field(ge=1)


class CutPayload(_Schema):
    monodromy: Optional[Matrix] = None
    alexander: Optional[PolyPayload] = None
    b1: Optional[int] = None
    known_lower: Optional[int] = Field(default=None, ge=0)

    def to_monodromy(self) -> Optional[SymplecticMatrix]:
        return SymplecticMatrix.from_rows(self.monodromy) if self.monodromy is not None else None


class CheckPayload(_Schema):
    suite: Suite = "all"
    gmax: Optional[int] = Field(default=None, ge=1)
    p: Optional[int] = Field(default=None, ge=2)
    seed: Optional[int] = None


PAYLOADS = {
    "alexander": AlexanderPayload,
    "weights": WordPayload,
    "lescop": LescopPayload,
    "casson": CassonPayload,
    "cocycle": CocyclePayload,
    "pmod": WordPayload,
    "specht": SpechtPayload,
    "resolution": ResolutionPayload,
    "cut": CutPayload,
    "check": CheckPayload,
}


class JobSpec(_Schema):
    command: Command
    input: Dict[str, Any] = {}
    options: JobOptions = JobOptions()


@dataclasses.dataclass(frozen=True)
class Job:
    """A validated job: its position in the batch, envelope and typed payload."""

    index: int
    spec: JobSpec
    payload: BaseModel
    options: ResolvedOptions

    @property
    def command(self) -> str:
        return self.spec.command


def error_pointers(error: ValidationError, prefix: str = "") -> List[str]:
    """JSON pointers for every location in a pydantic error."""
    pointers = []
    for detail in error.errors():
        parts = [str(part).replace("~", "~0").replace("/", "~1") for part in detail["loc"]]
        pointers.append(prefix + "".join(f"/{part}" for part in parts) + f": {detail['msg']}")
    return pointers


def parse_job(raw: Any, index: int = 0, overrides: Optional[JobOptions] = None, prefix: str = "") -> Job:
    """
    Validate one job document.

    ``overrides`` holds command-line options; they win over the job's own
    options, which win over the defaults. A check payload's gmax/p/seed sit
    between the two.

    Raises:
        SchemaViolation: With one JSON pointer per offending location
    """
    try:
        spec = JobSpec.model_validate(raw)
    except ValidationError as e:
        raise SchemaViolation(f"job {index} does not match the job schema", error_pointers(e, prefix))
    try:
        payload = PAYLOADS[spec.command].model_validate(spec.input)
    except ValidationError as e:
        raise SchemaViolation(f"job {index}: invalid {spec.command} input", error_pointers(e, prefix + "/input"))

    options = spec.options
    if isinstance(payload, CheckPayload):
        options = JobOptions(p=payload.p, gmax=payload.gmax, seed=payload.seed).merged_over(options)
    if overrides is not None:
        options = overrides.merged_over(options)
    return Job(index, spec, payload, options.resolved())


def parse_batch(document: Any, overrides: Optional[JobOptions] = None) -> List[Job]:
    """A single job object or an array of them."""
    if isinstance(document, list):
        return [parse_job(raw, i, overrides, f"/{i}") for i, raw in enumerate(document)]
    return [parse_job(document, 0, overrides)]
