"""Tissue safety envelopes and peak classification."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional

from kiricap.analysis.forces import Peak
from kiricap.core.contracts import SafetyEnvelope, Tissue
from kiricap.core.errors import InvalidParamsError

DEFAULT_ENVELOPES: Dict[Tissue, SafetyEnvelope] = {
    Tissue.GASTRIC: SafetyEnvelope(tissue=Tissue.GASTRIC, f_min=0.5, f_max=2.0),
    Tissue.INTESTINAL: SafetyEnvelope(tissue=Tissue.INTESTINAL, f_min=0.3, f_max=1.0),
}


class Verdict(str, Enum):
    BELOW_ENGAGEMENT = "below-engagement"
    WITHIN_SAFE_RANGE = "within-safe-range"
    EXCEEDS_SAFE_RANGE = "exceeds-safe-range"


@dataclass(frozen=True)
class Classification:
    peak: Peak
    verdict: Verdict

    def as_dict(self) -> Dict[str, Any]:
        return {**self.peak.as_dict(), "verdict": self.verdict.value}


def envelopes_from_config(data: Optional[Mapping[str, Any]]) -> Dict[Tissue, SafetyEnvelope]:
    """Envelope table from the ``envelopes`` section of envelopes.yaml"""
    table = dict(DEFAULT_ENVELOPES)
    if not data:
        return table
    for name, bounds in data.get("envelopes", data).items():
        tissue = Tissue(name)
        table[tissue] = SafetyEnvelope(tissue=tissue, f_min=bounds["f_min"], f_max=bounds["f_max"])
    return table


def envelope_for(tissue: str, table: Optional[Mapping[Tissue, SafetyEnvelope]] = None) -> SafetyEnvelope:
    try:
        key = Tissue(tissue)
    except ValueError as e:
        raise InvalidParamsError(f"unknown tissue '{tissue}'") from e
    return (table or DEFAULT_ENVELOPES)[key]


def verdict_for(magnitude: float, envelope: SafetyEnvelope) -> Verdict:
    if magnitude < envelope.f_min:
        return Verdict.BELOW_ENGAGEMENT
    if magnitude > envelope.f_max:
        return Verdict.EXCEEDS_SAFE_RANGE
    return Verdict.WITHIN_SAFE_RANGE


def classify_safety(peaks: Iterable[Peak], envelope: SafetyEnvelope) -> List[Classification]:
    """One verdict per peak; the envelope bounds count as safe"""
    return [Classification(peak=p, verdict=verdict_for(p.magnitude, envelope)) for p in peaks]
