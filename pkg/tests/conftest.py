import pytest

from galchar.chartab import character_table
from galchar.corpus import CORPUS, build

_group_cache = {}
_table_cache = {}


def corpus_group(key):
    if key not in _group_cache:
        _group_cache[key] = build(key)
    return _group_cache[key]


def corpus_table(key):
    if key not in _table_cache:
        _table_cache[key] = character_table(corpus_group(key))
    return _table_cache[key]


@pytest.fixture(scope="session")
def get_group():
    return corpus_group


@pytest.fixture(scope="session")
def get_table():
    return corpus_table


@pytest.fixture(scope="session")
def corpus_keys():
    return [entry.key for entry in CORPUS]
