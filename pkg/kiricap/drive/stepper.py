"""Four-phase step sequences for the actuation abstraction."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Tuple

from kiricap.core.errors import InvalidParamsError


class Direction(str, Enum):
    # forward deploys the flaps, reverse retracts them
    FORWARD = "forward"
    REVERSE = "reverse"


class StepMode(str, Enum):
    FULL = "full"
    HALF = "half"


MODES: Dict[StepMode, Tuple[str, ...]] = {
    StepMode.FULL: ("A", "B", "C", "D"),
    StepMode.HALF: ("A", "AB", "B", "BC", "C", "CD", "D", "DA"),
}


@dataclass(frozen=True)
class StepSequence:
    """Energised coil groups, one entry per pulse"""

    phases: Tuple[str, ...]
    direction: Direction
    mode: StepMode

    def __iter__(self) -> Iterator[str]:
        return iter(self.phases)

    def __len__(self) -> int:
        return len(self.phases)

    def __getitem__(self, i):
        return self.phases[i]

    @property
    def signed_pulses(self) -> int:
        return len(self.phases) if self.direction == Direction.FORWARD else -len(self.phases)


def step_sequence(
    n_pulses: int,
    direction: Direction = Direction.FORWARD,
    mode: StepMode = StepMode.FULL,
) -> StepSequence:
    """``n_pulses`` states of the cyclic pattern; reverse is the forward list read backwards.

    Reading backwards undoes the forward sequence state by state, so a
    forward run followed by an equal reverse run nets zero pulses.
    """
    if n_pulses < 0:
        raise InvalidParamsError(f"pulse count must be >= 0, got {n_pulses}")
    direction, mode = Direction(direction), StepMode(mode)
    pattern = MODES[mode]
    forward = tuple(pattern[i % len(pattern)] for i in range(n_pulses))
    phases = forward if direction == Direction.FORWARD else forward[::-1]
    return StepSequence(phases=phases, direction=direction, mode=mode)


def net_pulses(*sequences: StepSequence) -> int:
    return sum(s.signed_pulses for s in sequences)
