"""Bounded-magnitude noise channel simulation.

Randomness comes from SplitMix64 streams, one per trial, so results do not
depend on how trials are scheduled:

* ``mix64(z)``: ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
  z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2**64).
* A stream with state ``x`` yields ``mix64(x := x + 0x9E3779B97F4A7C15)``.
* Trial ``t`` under master seed ``S`` starts from ``x = S ^ mix64(t)``.
* ``below(k)`` draws ``u`` until ``u < 2**64 - (2**64 % k)``, returns ``u % k``.

Each trial draws the message ranks ``x[0], ..., x[n-1]`` in step order, then
one noise offset ``below(2E + 1) - E`` per codeword position in order.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal

from .codec import decode, encode_sequential, heads_from_message
from .errors import DomainError
from .rep import RepSpec

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

CSV_HEADER = "n,d,noise_max,trials,word_errors,wer,seed"


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, state: int) -> None:
        self.state = state & MASK64

    @classmethod
    def for_trial(cls, seed: int, trial: int) -> SplitMix64:
        return cls((seed & MASK64) ^ mix64(trial))

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection."""
        if k <= 0:
            raise ValueError(f"bound must be positive, got {k}")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            u = self.next()
            if u < limit:
                return u % k


@dataclass(frozen=True)
class SimConfig:
    spec: RepSpec
    d: int
    noise_max: int
    trials: int
    seed: int
    clip: bool = False

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        if self.noise_max < 0:
            raise DomainError(f"noise bound must be >= 0, got {self.noise_max}")
        if not 0 <= self.seed <= MASK64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class SimReport:
    n: int
    d: int
    noise_max: int
    trials: int
    word_errors: int
    seed: int

    @property
    def wer(self) -> str:
        """Word error rate as an exact-as-possible decimal string."""
        return str(Decimal(self.word_errors) / Decimal(self.trials))

    def to_csv(self, header: bool = True) -> str:
        row = f"{self.n},{self.d},{self.noise_max},{self.trials},{self.word_errors},{self.wer},{self.seed}\n"
        return (CSV_HEADER + "\n" + row) if header else row

    def to_text(self) -> str:
        keys = CSV_HEADER.split(",")
        values = self.to_csv(header=False).strip().split(",")
        return "".join(f"{k}={v}\n" for k, v in zip(keys, values))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "d": self.d,
                "noise_max": self.noise_max,
                "trials": self.trials,
                "word_errors": self.word_errors,
                "wer": self.wer,
                "seed": self.seed,
            }
        )


def run_trial(cfg: SimConfig, trial: int) -> bool:
    """One encode/noise/decode round; True when the message is recovered."""
    spec = cfg.spec
    n = spec.n
    rng = SplitMix64.for_trial(cfg.seed, trial)
    x = tuple(rng.below(len(S)) for S in spec)
    codeword = encode_sequential(spec, heads_from_message(spec, x))
    E = cfg.noise_max
    received = [c + rng.below(2 * E + 1) - E for c in codeword]
    if cfg.clip:
        received = [min(max(v, 0), n - 1) for v in received]
    return decode(spec, received).ranks == x


def _count_errors(cfg: SimConfig, trials: range) -> int:
    return sum(not run_trial(cfg, t) for t in trials)


def run_simulation(cfg: SimConfig, threads: int = 1) -> SimReport:
    """Word error count over ``cfg.trials`` trials; independent of ``threads``."""
    if threads <= 1:
        errors = _count_errors(cfg, range(cfg.trials))
    else:
        step = -(-cfg.trials // threads)
        chunks = [range(lo, min(lo + step, cfg.trials)) for lo in range(0, cfg.trials, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            errors = sum(pool.map(lambda r: _count_errors(cfg, r), chunks))
    return SimReport(cfg.spec.n, cfg.d, cfg.noise_max, cfg.trials, errors, cfg.seed)
