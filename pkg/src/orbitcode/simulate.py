"""Seeded channel simulation: encode random messages, plant an error of
bounded degree-weight, decode, and tally outcomes.

Randomness comes from ``numpy.random.default_rng(seed)``.  Every drawn
message, error support and error value is written to the transcript, so
fixtures can be compared without relying on the generator itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exceptions import CodeSpecError, DecodeFailure
from .formats import format_symbols

MAX_SUPPORTS = 10**6


@dataclass
class SimulationSummary:
    trials: int = 0
    successes: int = 0
    failures: int = 0
    miscorrections: int = 0
    transcript: list[str] = dc_field(default_factory=list)

    def to_text(self) -> str:
        lines = list(self.transcript)
        lines.append(
            f"trials={self.trials} successes={self.successes} "
            f"failures={self.failures} miscorrections={self.miscorrections}"
        )
        return "\n".join(lines) + "\n"


def error_supports(sizes, max_degree: int) -> list[tuple[int, ...]]:
    """Nonempty orbit subsets whose sizes add up to at most ``max_degree``."""
    sizes = list(sizes)
    out: list[tuple[int, ...]] = []

    def walk(start, budget, chosen):
        for i in range(start, len(sizes)):
            if sizes[i] <= budget:
                out.append(chosen + (i,))
                if len(out) > MAX_SUPPORTS:
                    raise CodeSpecError("too many error patterns to sample from")
                walk(i + 1, budget - sizes[i], chosen + (i,))

    walk(0, max_degree, ())
    return out


def simulate(code, trials: int, max_degree: int, seed: int, stress: bool = False) -> SimulationSummary:
    """Run ``trials`` encode/corrupt/decode rounds on a fitted OrbitCode.

    Errors are drawn uniformly among nonempty supports of degree-weight at
    most ``max_degree``, with uniform nonzero values.  Without ``stress``,
    ``max_degree`` may not exceed ``t // 2``.
    """
    if trials < 0:
        raise CodeSpecError("trials must be non-negative")
    radius = code.t // 2
    if max_degree < 1:
        raise CodeSpecError("error degree must be positive")
    if max_degree > radius and not stress:
        raise CodeSpecError(
            f"error degree {max_degree} exceeds the guaranteed radius {radius}; use stress mode"
        )
    summary = SimulationSummary()
    if trials == 0:
        return summary
    q = code.q_
    f = code.field_
    reps = code.locations_.reps
    supports = error_supports(code.locations_.sizes.tolist(), max_degree)
    if not supports:
        raise CodeSpecError(f"no error pattern has degree-weight <= {max_degree}")
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        msg = rng.integers(0, q, size=code.dimension_)
        codeword = code.transform(msg[None, :])[0]
        support = supports[int(rng.integers(len(supports)))]
        values = rng.integers(1, q, size=len(support))
        error = np.zeros(code.n_locations_, dtype=np.int64)
        error[list(support)] = values
        received = f.f_add[codeword, error]
        try:
            result = code.decode(received)
        except DecodeFailure as exc:
            status = f"fail:{exc.stage}"
            summary.failures += 1
        else:
            if np.array_equal(result.codeword, codeword):
                status = "ok"
                summary.successes += 1
            else:
                status = "miscorrected"
                summary.miscorrections += 1
        summary.trials += 1
        summary.transcript.append(
            f"trial={trial} msg={format_symbols(msg) or '-'} "
            f"support={','.join(str(reps[i]) for i in support)} "
            f"values={','.join(map(str, values.tolist()))} status={status}"
        )
    return summary
