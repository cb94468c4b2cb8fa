import math
from itertools import product as iproduct

import pytest

from entrobound import (
    MacrostateSpec,
    boltzmann_entropy,
    coin_reversal_monte_carlo,
    coin_reversal_probability,
    coin_reversal_unordered_probability,
    combine_multiplicities,
    dice_multiplicity,
    mixing_demo,
)
from entrobound.errors import (
    MixingOverflowError,
    TooManyDiceError,
    TotalOutOfRangeError,
    ValidationError,
    ZeroMultiplicityError,
)


def test_two_dice_seven():
    assert dice_multiplicity(2, 7).multiplicity == 6


def test_two_dice_eight():
    assert dice_multiplicity(2, 8).multiplicity == 5


def test_impossible_total_counts_zero():
    assert dice_multiplicity(2, 13).multiplicity == 0
    assert dice_multiplicity(2, 1).multiplicity == 0


def test_dice_brute_force_cross_check():
    # independent oracle: enumerate tuples with itertools
    for total in range(1, 20):
        expected = sum(1 for roll in iproduct(range(1, 7), repeat=3) if sum(roll) == total)
        assert dice_multiplicity(3, total).multiplicity == expected


def test_dice_errors():
    with pytest.raises(TotalOutOfRangeError):
        dice_multiplicity(2, 0)
    with pytest.raises(TotalOutOfRangeError):
        dice_multiplicity(2, -4)
    with pytest.raises(TooManyDiceError):
        dice_multiplicity(9, 30)
    with pytest.raises(ValidationError):
        dice_multiplicity(0, 0)


def test_boltzmann_entropy_of_impossible_macrostate_refused():
    with pytest.raises(ZeroMultiplicityError):
        boltzmann_entropy(dice_multiplicity(2, 13).multiplicity)


def test_combine_pair_of_pairs():
    seven = dice_multiplicity(2, 7)
    eight = dice_multiplicity(2, 8)
    combined = combine_multiplicities(seven, eight)
    assert combined.multiplicity == 30
    total = boltzmann_entropy(combined.multiplicity).value
    parts = boltzmann_entropy(6).value + boltzmann_entropy(5).value
    assert abs(total - parts) <= 1e-12


def test_combine_identity():
    one = MacrostateSpec("unique", 1)
    k = MacrostateSpec("k-fold", 17)
    assert combine_multiplicities(one, k).multiplicity == 17


def test_combine_direct_product():
    assert combine_multiplicities(MacrostateSpec("a", 6), MacrostateSpec("b", 6)).multiplicity == 36


def test_combine_additivity_sweep():
    import numpy as np

    rng = np.random.default_rng(90)
    for _ in range(100):
        a = int(rng.integers(1, 10_000))
        b = int(rng.integers(1, 10_000))
        combined = combine_multiplicities(MacrostateSpec("a", a), MacrostateSpec("b", b))
        lhs = boltzmann_entropy(combined.multiplicity).value
        rhs = boltzmann_entropy(a).value + boltzmann_entropy(b).value
        assert abs(lhs - rhs) <= 1e-12


def test_coin_single_flip():
    assert coin_reversal_probability(1) == 0.5


def test_coin_five_flips():
    assert coin_reversal_probability(5) == 0.03125


def test_coin_ten_flips():
    assert coin_reversal_probability(10) == 0.0009765625


def test_coin_probability_exact_powers():
    for n in range(1, 51):
        assert coin_reversal_probability(n) == 2.0 ** (-n)


def test_coin_rejects_zero_length():
    with pytest.raises(ValidationError):
        coin_reversal_probability(0)


def test_coin_unordered_conjecture_mode():
    # matching only the 3-heads/2-tails composition of a length-5 target
    assert coin_reversal_unordered_probability(5, 3) == 0.3125
    assert coin_reversal_unordered_probability(5, 2) == 0.3125
    assert coin_reversal_unordered_probability(5, 0) == 0.03125
    with pytest.raises(ValidationError):
        coin_reversal_unordered_probability(5, 6)


def test_monte_carlo_is_seed_deterministic():
    a = coin_reversal_monte_carlo(5, 10_000, seed=7)
    b = coin_reversal_monte_carlo(5, 10_000, seed=7)
    assert a == b


def test_monte_carlo_converges_to_analytic():
    trials = 1_000_000
    p = 0.03125
    sigma = math.sqrt(p * (1 - p) / trials)
    estimate = coin_reversal_monte_carlo(5, trials, seed=2024)
    assert abs(estimate - p) <= 3 * sigma


def test_monte_carlo_single_flip():
    trials = 100_000
    sigma = math.sqrt(0.25 / trials)
    estimate = coin_reversal_monte_carlo(1, trials, seed=11)
    assert abs(estimate - 0.5) <= 3 * sigma


def test_monte_carlo_long_sequence_rarely_matches():
    # p = 2^-20, 10^4 trials: expected matches under 0.01
    assert coin_reversal_monte_carlo(20, 10_000, seed=3) == 0.0


def test_mixing_same_species_is_zero():
    assert mixing_demo(4, 9, same_species=True).value == 0.0


def test_mixing_two_particles():
    assert mixing_demo(1, 1, same_species=False).value == pytest.approx(1.0, abs=1e-15)


def test_mixing_ten_and_ten():
    got = mixing_demo(10, 10, same_species=False).value
    assert got == pytest.approx(math.log2(184756), abs=1e-12)


def test_mixing_nonnegative_and_monotone():
    previous = -1.0
    for n_a in range(1, 20):
        value = mixing_demo(n_a, 7, same_species=False).value
        assert value >= 0.0
        assert value >= previous
        previous = value


def test_mixing_overflow_refused():
    with pytest.raises(MixingOverflowError):
        mixing_demo(31, 30, same_species=False)


def test_mixing_rejects_empty_system():
    with pytest.raises(ValidationError):
        mixing_demo(0, 5, same_species=False)
