"""
Tests for the configuration layer.
"""
import pytest
from pysteiner import config
from pysteiner.exceptions import SteinerInvalidInput
from pysteiner.src.config import defaults_from_env, get_default


def test_config_context_restores():
    """
    Values set in a with block are reverted on exit.
    """
    before = get_default("budget")
    with config(budget=123, max_rejections=0):
        assert get_default("budget") == 123
        assert get_default("max_rejections") == 0
    assert get_default("budget") == before


def test_config_nested():
    """
    Nested blocks restore the value of the enclosing block.
    """
    with config(budget=50):
        with config(budget=20):
            assert get_default("budget") == 20
        assert get_default("budget") == 50


def test_config_global():
    """
    Without a with block the value sticks until changed back.
    """
    before = get_default("max_rejections")
    config(max_rejections=7)
    try:
        assert get_default("max_rejections") == 7
    finally:
        config(max_rejections=before)


@pytest.mark.parametrize(
    "values",
    [
        {"colors": 3},
        {"budget": 0},
        {"budget": True},
        {"budget": 2.5},
        {"budget": "many"},
        {"max_rejections": -1},
    ],
)
def test_config_rejects(values):
    """
    Unknown keys and values that aren't usable integers are refused.
    """
    before = get_default("budget")
    with pytest.raises(SteinerInvalidInput):
        config(**values)
    assert get_default("budget") == before


def test_defaults_from_env():
    """
    Environment variables override the built-in defaults.
    """
    env = {"PYSTEINER_BUDGET": "1000", "PYSTEINER_MAX_REJECTIONS": "3"}
    assert defaults_from_env(env) == {"budget": 1000, "max_rejections": 3}
    assert defaults_from_env({"PYSTEINER_BUDGET": ""})["budget"] == 10 ** 7
    with pytest.raises(SteinerInvalidInput):
        defaults_from_env({"PYSTEINER_BUDGET": "-5"})


def test_get_default_unknown():
    """
    Only known keys can be read.
    """
    with pytest.raises(SteinerInvalidInput):
        get_default("colors")
