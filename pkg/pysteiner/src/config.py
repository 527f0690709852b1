"""
config - set PySteiner defaults globally or locally.
"""
import logging
import os

from pysteiner.exceptions import SteinerInvalidInput

logger = logging.getLogger(__name__)

DEFAULTS = {"budget": 10 ** 7, "max_rejections": 1000}
ENV_VARIABLES = {
    "budget": "PYSTEINER_BUDGET",
    "max_rejections": "PYSTEINER_MAX_REJECTIONS",
}


def _validate(key, value):
    """
    Check a single configuration entry and return it as an int.
    """
    if key not in DEFAULTS:
        raise SteinerInvalidInput(
            f"Unknown configuration key '{key}'. Use one of {sorted(DEFAULTS)}."
        )
    if isinstance(value, bool):
        raise SteinerInvalidInput(f"Invalid value for '{key}': {value!r}.")
    try:
        number = int(value)
    except (TypeError, ValueError) as err:
        raise SteinerInvalidInput(f"Invalid value for '{key}': {value!r}.") from err
    if not isinstance(value, str) and number != value:
        raise SteinerInvalidInput(f"Invalid value for '{key}': {value!r}.")
    lowest = 0 if key == "max_rejections" else 1
    if number < lowest:
        raise SteinerInvalidInput(
            f"Invalid value for '{key}': {value!r}. Must be at least {lowest}."
        )
    return number


def defaults_from_env(env=None):
    """
    Build the initial configuration, letting environment variables override
    the built-in defaults.

    Parameters
    ----------
    env : dict or None
        A dictionary containing the environment variables. If ``None``, will
        default to ``os.environ``.

    Returns
    -------
    defaults : dict
        The starting configuration.

    Examples
    --------

    >>> defaults_from_env(env={})["budget"]
    10000000
    >>> defaults_from_env(env={"PYSTEINER_BUDGET": "500"})["budget"]
    500
    """
    if env is None:
        env = os.environ
    defaults = dict(DEFAULTS)
    for key, variable in ENV_VARIABLES.items():
        if env.get(variable):
            defaults[key] = _validate(key, env[variable])
            logger.debug("%s=%s taken from %s", key, defaults[key], variable)
    return defaults


_CURRENT = defaults_from_env()


def get_default(key):
    """
    Get the current value of a configuration key.

    Parameters
    ----------
    key : str
        Either ``'budget'`` or ``'max_rejections'``.

    Returns
    -------
    value : int

    Examples
    --------

    >>> with config(budget=99):
    ...     print(get_default("budget"))
    ...
    99
    """
    if key not in _CURRENT:
        raise SteinerInvalidInput(f"Unknown configuration key '{key}'.")
    return _CURRENT[key]


class config:  # pylint: disable=invalid-name
    """
    Set PySteiner defaults globally or locally.

    Change defaults globally::

        pysteiner.config(budget=10**5)

    Change defaults locally by using it as a context manager::

        with pysteiner.config(max_rejections=50):
            ...

    Available keys are ``budget`` (the largest number of projective points a
    single enumeration may visit) and ``max_rejections`` (how many failed
    draws :func:`pysteiner.random_steiner` tolerates).
    """

    def __init__(self, **kwargs):
        new_values = {key: _validate(key, value) for key, value in kwargs.items()}
        # Save values so that we can revert to their initial values
        self.old_defaults = {key: _CURRENT[key] for key in new_values}
        _CURRENT.update(new_values)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        # revert to initial values
        _CURRENT.update(self.old_defaults)
