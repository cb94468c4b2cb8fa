"""Multiplicity counting, coin-flip reversal odds, and lattice mixing.

Multiplicities are counted by exact enumeration (capped where enumeration
stops being exact or sane), mixing is modeled combinatorially as lattice
arrangements, and the Monte Carlo estimator owns a private seeded generator
so nothing here touches global RNG state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    MixingOverflowError,
    TooManyDiceError,
    TotalOutOfRangeError,
    ValidationError,
)
from .entropy import EntropyValue

MAX_DICE = 8
MAX_MIXING_PARTICLES = 60


@dataclass(frozen=True)
class MacrostateSpec:
    """A labeled macrostate with its microstate count.

    Multiplicity 0 marks an impossible macrostate (e.g. a dice total no
    roll produces); taking its Boltzmann entropy is refused downstream.
    """

    description: str
    multiplicity: int

    def __post_init__(self) -> None:
        if int(self.multiplicity) < 0:
            raise ValidationError(f"multiplicity must be >= 0, got {self.multiplicity}")
        object.__setattr__(self, "multiplicity", int(self.multiplicity))


def dice_multiplicity(num_dice: int, total: int) -> MacrostateSpec:
    """Count ordered dice outcomes summing to ``total``, by exact enumeration.

    Unreachable positive totals count 0; totals below 1 are rejected since
    no roll of any number of dice can produce them.
    """
    num_dice = int(num_dice)
    total = int(total)
    if num_dice < 1:
        raise ValidationError(f"need at least one die, got {num_dice}")
    if num_dice > MAX_DICE:
        raise TooManyDiceError(f"enumeration capped at {MAX_DICE} dice, got {num_dice}")
    if total < 1:
        raise TotalOutOfRangeError(f"no dice roll totals {total}")
    faces = np.arange(1, 7)
    sums = np.zeros(1, dtype=np.int64)
    for _ in range(num_dice):
        sums = (sums[:, None] + faces[None, :]).ravel()
    count = int((sums == total).sum())
    return MacrostateSpec(f"{num_dice} dice totaling {total}", count)


def combine_multiplicities(a: MacrostateSpec, b: MacrostateSpec) -> MacrostateSpec:
    """Joint macrostate of two labeled systems: multiplicities multiply."""
    return MacrostateSpec(f"({a.description}) and ({b.description})", a.multiplicity * b.multiplicity)


def coin_reversal_probability(sequence_length: int) -> float:
    """Probability of reproducing one specific fair-coin sequence: 2^-n.

    The same value covers both re-running n sequential flips and flipping n
    coins at once, since either way one ordered pattern of n binary
    outcomes must be matched.
    """
    n = int(sequence_length)
    if n < 1:
        raise ValidationError(f"sequence length must be >= 1, got {n}")
    return 2.0 ** (-n)


def coin_reversal_unordered_probability(sequence_length: int, target_heads: int) -> float:
    """Probability of matching only the heads/tails counts of the target.

    A conjectural alternative reading of the simultaneous-flip case (match
    the composition, not the ordered pattern): C(n, k) / 2^n.  The ordered
    reading of :func:`coin_reversal_probability` is the default everywhere.
    """
    n = int(sequence_length)
    k = int(target_heads)
    if n < 1:
        raise ValidationError(f"sequence length must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValidationError(f"target heads must be in [0, {n}], got {k}")
    return math.comb(n, k) / 2.0 ** n


def coin_reversal_monte_carlo(sequence_length: int, trials: int, seed: int) -> float:
    """Empirical fraction of fresh random sequences matching a fixed target.

    Deterministic for a fixed seed; the generator is private to the call.
    """
    n = int(sequence_length)
    trials = int(trials)
    if n < 1:
        raise ValidationError(f"sequence length must be >= 1, got {n}")
    if trials < 1:
        raise ValidationError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(int(seed))
    matches = 0
    remaining = trials
    chunk = max(1, min(trials, 10_000_000 // n))
    while remaining > 0:
        batch = min(chunk, remaining)
        draws = rng.integers(0, 2, size=(batch, n), dtype=np.int8)
        matches += int((draws.sum(axis=1) == 0).sum())  # target: all zeros, wlog
        remaining -= batch
    return matches / trials


def mixing_demo(n_a: int, n_b: int, same_species: bool) -> EntropyValue:
    """Lattice entropy of mixing in bits: log2 C(n_a + n_b, n_a).

    Distinguishable species gain log2 of the number of arrangements;
    identical species gain nothing.  Counts are kept small enough that the
    binomial is exact.
    """
    n_a, n_b = int(n_a), int(n_b)
    if n_a < 1 or n_b < 1:
        raise ValidationError(f"particle counts must be >= 1, got ({n_a}, {n_b})")
    if n_a + n_b > MAX_MIXING_PARTICLES:
        raise MixingOverflowError(
            f"refusing n_a + n_b = {n_a + n_b} > {MAX_MIXING_PARTICLES}; binomial would lose exactness"
        )
    if same_species:
        return EntropyValue(0.0, 2.0)
    return EntropyValue(math.log2(math.comb(n_a + n_b, n_a)), 2.0)
