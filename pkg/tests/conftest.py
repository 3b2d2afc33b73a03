from fractions import Fraction as F

import pytest

from heckepaths import RootGeneratingSystem


@pytest.fixture(scope="session")
def a1():
    return RootGeneratingSystem.from_gcm([[2]])


@pytest.fixture(scope="session")
def a2():
    return RootGeneratingSystem.from_gcm([[2, -1], [-1, 2]])


@pytest.fixture(scope="session")
def b2():
    return RootGeneratingSystem.from_gcm([[2, -2], [-1, 2]])


@pytest.fixture(scope="session")
def a1aff():
    return RootGeneratingSystem.from_gcm([[2, -2], [-2, 2]])


def frac_vec(*xs):
    return tuple(F(x) for x in xs)


def all_words(n_gens, max_len):
    """Every generator word up to the given length."""
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (i,) for w in frontier for i in range(n_gens)]
        words.extend(frontier)
    return words


def group_elements(system, max_len=6):
    """All distinct elements among words of bounded length (full group if finite)."""
    seen = {}
    for w in all_words(system.n, max_len):
        el = system.normalize_word(w)
        seen.setdefault(el.word, el)
    return list(seen.values())


def brute_force_bruhat(system, elements):
    """Subword-definition Bruhat order oracle: table[(u.word, w.word)] = u <= w."""
    from itertools import combinations

    def subwords(word):
        out = set()
        for r in range(len(word) + 1):
            for idx in combinations(range(len(word)), r):
                out.add(tuple(word[k] for k in idx))
        return out

    table = {}
    for w in elements:
        reachable = {system.normalize_word(sub).word for sub in subwords(w.word)}
        for u in elements:
            table[(u.word, w.word)] = u.word in reachable
    return table
