"""
Command dispatch for validated jobs.

Each command turns its typed payload into domain objects, runs the
computation and returns a JSON-ready dict. Outcomes are mapped to a
JobStatus so that one failing job never stops the batch.
"""

import dataclasses
import logging
import random
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

from casson.cocycle import UClass, casson_cocycle, cocycle_s_dictionary
from casson.curves import BoundingCurveSpec, casson_twist, casson_twist_spectral
from casson.theta import LinkingForm, theta0, twist_tensor
from cut.certificates import cut_report
from exterior.symplectic import SymplecticMatrix
from fn_tqft.weights import WeightVector, alexander_from_presentation, alexander_trace, fundamental_weights
from lescop.invariants import lescop_from_alexander, lescop_from_weights, normalize_weights
from models.jobs import Job
from models.reports import Report
from pmod.resolution import resolution_check
from pmod.specht import specht_check
from pmod.weights import lescop_mod_p, pmod_alexander, pmod_weights
from processing.suites import run_suite
from rings.rational import format_rational
from utils.errors import (DimensionMismatch, ExactnessFailure, GenusMismatch, InvalidCurveSpec,
                          InvalidSymplecticMatrix, InvalidWord, MismatchError, WedgeworksError)

logger = logging.getLogger(__name__)


class JobStatus(Enum):
    """Outcome of a job."""
    SUCCESS = "success"
    FAILED = "failed"
    MISMATCH = "mismatch"
    INVALID = "invalid"


INVALID_INPUT = (InvalidWord, InvalidSymplecticMatrix, InvalidCurveSpec, GenusMismatch)
MISMATCHES = (MismatchError, ExactnessFailure, DimensionMismatch)


@dataclasses.dataclass
class JobResult:
    index: int
    command: str
    status: JobStatus
    result: Optional[Dict[str, Any]] = None
    error: Optional[str] = None

    @property
    def success(self) -> bool:
        return self.status == JobStatus.SUCCESS

    def to_json(self) -> dict:
        data = {"index": self.index, "command": self.command, "status": self.status.value}
        if self.result is not None:
            data["result"] = self.result
        if self.error is not None:
            data["error"] = self.error
        return data


def _number(value) -> Any:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else format_rational(value)


class JobProcessor:
    """
    Runs jobs one at a time.

    Each worker thread owns one processor; the handlers share nothing but
    the module-level basis caches, which are locked.
    """

    def __init__(self):
        self._handlers: Dict[str, Callable[[Job, random.Random], Any]] = {
            "alexander": self._alexander,
            "weights": self._weights,
            "lescop": self._lescop,
            "casson": self._casson,
            "cocycle": self._cocycle,
            "pmod": self._pmod,
            "specht": self._specht,
            "resolution": self._resolution,
            "cut": self._cut,
            "check": self._check,
        }

    def process_job(self, job: Job) -> JobResult:
        """
        Run one job and classify the outcome.

        A report whose checks fail gives MISMATCH with the report as result.
        """
        logger.info(f"job {job.index} ({job.command}) started with seed {job.options.seed}")
        rng = random.Random(job.options.seed)
        try:
            output = self._handlers[job.command](job, rng)
        except INVALID_INPUT as e:
            logger.error(f"job {job.index} ({job.command}) has invalid input: {e}")
            return JobResult(job.index, job.command, JobStatus.INVALID, error=str(e))
        except MISMATCHES as e:
            logger.error(f"job {job.index} ({job.command}) mismatch: {e}")
            return JobResult(job.index, job.command, JobStatus.MISMATCH, error=str(e))
        except (WedgeworksError, ValueError, ZeroDivisionError) as e:
            logger.error(f"job {job.index} ({job.command}) failed: {type(e).__name__}: {e}")
            return JobResult(job.index, job.command, JobStatus.FAILED, error=f"{type(e).__name__}: {e}")

        if isinstance(output, Report):
            status = JobStatus.SUCCESS if output.passed else JobStatus.MISMATCH
            if not output.passed:
                logger.warning(f"job {job.index}: {output}")
            return JobResult(job.index, job.command, status, output.to_json())
        logger.info(f"job {job.index} ({job.command}) succeeded")
        return JobResult(job.index, job.command, JobStatus.SUCCESS, output)

    def _alexander(self, job: Job, rng: random.Random) -> dict:
        payload = job.payload
        if payload.presentation is not None:
            pres = payload.presentation
            poly = alexander_from_presentation(pres.a_plus, pres.a_minus, pres.tors_order, pres.g)
            return {"poly": poly.to_json()}
        word = payload.to_word()
        result = {"poly": alexander_trace(word).to_json()}
        if word.sign_ambiguous:
            logger.warning(f"{word} contains handle moves; the polynomial is defined up to sign")
            result["sign_ambiguous"] = True
        return result

    def _weights(self, job: Job, rng: random.Random) -> dict:
        weights = fundamental_weights(job.payload.to_word())
        return {**weights.to_json(), "alexander": weights.alexander().to_json()}

    def _lescop(self, job: Job, rng: random.Random) -> dict:
        payload = job.payload
        if payload.poly is not None:
            value = lescop_from_alexander(payload.poly.to_poly())
        elif payload.weights is not None:
            value = lescop_from_weights(normalize_weights(WeightVector.from_json({"weights": payload.weights})))
        else:
            value = lescop_from_weights(normalize_weights(fundamental_weights(payload.to_word())))
        return value.to_json()

    def _casson(self, job: Job, rng: random.Random) -> dict:
        curve = BoundingCurveSpec.from_json(job.payload.curve.model_dump(exclude_none=True))
        if job.payload.conjugator is not None:
            curve = curve.transform(SymplecticMatrix.from_rows(job.payload.conjugator))
        twist = casson_twist(curve)
        spectral = casson_twist_spectral(curve)
        if spectral != twist:
            raise MismatchError(f"spectral form {spectral} vs matrix element {twist}", "casson")
        tensor = theta0(twist_tensor(curve), LinkingForm.standard(curve.genus))
        if tensor != twist:
            raise MismatchError(f"theta_0 of the twist tensor {tensor} vs matrix element {twist}", "casson")
        return {"curve": curve.to_json(), "twist": _number(twist), "spectral": _number(spectral),
                "theta0": _number(tensor)}

    def _cocycle(self, job: Job, rng: random.Random) -> dict:
        payload = job.payload
        if payload.dictionary_g is not None:
            return cocycle_s_dictionary(payload.dictionary_g, payload.limit).to_json()
        u1 = UClass.from_form(payload.u1.to_form())
        u2 = UClass.from_form(payload.u2.to_form())
        return {"value": _number(casson_cocycle(u1, u2))}

    def _pmod(self, job: Job, rng: random.Random) -> dict:
        p = job.options.p
        word = job.payload.to_word()
        weights = pmod_weights(word, p)
        result = {"p": p, "weights": weights.to_json(), "alexander": pmod_alexander(word, p).to_json()}
        if p >= 5:
            sign = 1 if normalize_weights(weights.integral) == weights.integral else -1
            result["lescop_mod_p"] = sign * lescop_mod_p(weights.residues, p) % p
        return result

    def _specht(self, job: Job, rng: random.Random) -> Report:
        payload = job.payload
        permutations = [list(perm) for perm in payload.permutations]
        for _ in range(payload.samples):
            permutations.append(rng.sample(range(payload.n), payload.n))
        return specht_check(payload.n, payload.k, job.options.p, permutations, strict=False)

    def _resolution(self, job: Job, rng: random.Random) -> Report:
        return resolution_check(job.payload.k, job.options.p, job.payload.g, strict=False)

    def _cut(self, job: Job, rng: random.Random) -> dict:
        payload = job.payload
        alexander = payload.alexander.to_poly() if payload.alexander is not None else None
        return cut_report(monodromy=payload.to_monodromy(), alexander=alexander, b1=payload.b1,
                          known_lower=payload.known_lower).to_json()

    def _check(self, job: Job, rng: random.Random) -> Report:
        options = job.options
        return run_suite(job.payload.suite, options.seed, options.gmax, options.p)
