import pytest

from gcwords import enumerate_reduced_words, longest_element
from gcwords.word_poset import enumerate_commutation_classes


@pytest.fixture(scope="session")
def words_of_rank():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_reduced_words(longest_element(n + 1)))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def classes_of_rank():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_commutation_classes(n))
        return cache[n]

    return get
