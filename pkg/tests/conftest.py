import random

import pytest
from hypothesis import strategies as st

from hurwitz3.braid import Braid, evaluate

signed_letters = st.tuples(st.integers(0, 2), st.sampled_from((1, -1)))
signed_words = st.lists(signed_letters, max_size=12).map(tuple)
plain_words = st.lists(st.integers(0, 2), max_size=12).map(tuple)
braids = signed_words.map(evaluate)


@pytest.fixture
def rng():
    return random.Random(20260808)


def random_braid(rng, max_len=10) -> Braid:
    word = tuple((rng.randrange(3), rng.choice((1, -1)))
                 for _ in range(rng.randrange(max_len + 1)))
    return evaluate(word)
