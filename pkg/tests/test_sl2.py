import random

import pytest

from helpers import random_matz
from origami_veech.sl2 import (I, LETTER_MATRIX, MatZ, NEG_I, S, T,
                               decompose_word, word_to_matrix)


def test_matz_det_enforced():
    with pytest.raises(ValueError):
        MatZ(1, 0, 0, 2)
    with pytest.raises(ValueError):
        MatZ(0, 0, 0, 0)


def test_constants_and_relations():
    assert S * S == NEG_I
    assert S * S * S * S == I
    st = S * T
    m = I
    for _ in range(6):
        m = m * st
    assert m == I
    assert S.inverse() * S == I
    assert LETTER_MATRIX["T^-1"] == T.inverse()


def test_decompose_examples():
    assert decompose_word(I) == []
    assert decompose_word(T * T * T) == ["T", "T", "T"]
    m = MatZ(2, 1, 1, 1)
    word = decompose_word(m)
    assert word_to_matrix(word) == m
    # the explicit word T, S, T^-1, S^-1 also evaluates to (2 1; 1 1)
    assert word_to_matrix(["T", "S", "T^-1", "S^-1"]) == m


def test_decompose_round_trip_random():
    rng = random.Random(42)
    for _ in range(1000):
        m = random_matz(rng)
        assert word_to_matrix(decompose_word(m)) == m


def test_decompose_negatives():
    for m in (NEG_I, S, S.inverse(), MatZ(-2, -1, -1, -1), MatZ(0, 1, -1, 5)):
        assert word_to_matrix(decompose_word(m)) == m
