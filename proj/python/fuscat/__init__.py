"""Good and bad primes of fusion categories, in exact arithmetic.

Report functions return the same dicts the command line prints with --json;
every number in them is a decimal string.
"""

import json as _json

from . import _fuscat
from ._fuscat import char_degrees, is_p_unit, norm, run_cli

__all__ = [
    "amplitude_classical",
    "amplitude_quantum",
    "char_degrees",
    "crosscheck",
    "cyc",
    "group",
    "gtcat",
    "is_p_unit",
    "ito_michler",
    "lemma_norm",
    "norm",
    "qdim",
    "run_cli",
    "verlinde_badprimes",
    "verlinde_classify",
    "verlinde_simples",
]


def _wrap(name):
    raw = getattr(_fuscat, name)

    def call(*args, **kwargs):
        return _json.loads(raw(*args, **kwargs))

    call.__name__ = name
    call.__doc__ = raw.__doc__
    return call


amplitude_classical = _wrap("amplitude_classical")
amplitude_quantum = _wrap("amplitude_quantum")
crosscheck = _wrap("crosscheck")
cyc = _wrap("cyc")
group = _wrap("group")
gtcat = _wrap("gtcat")
ito_michler = _wrap("ito_michler")
lemma_norm = _wrap("lemma_norm")
qdim = _wrap("qdim")
verlinde_badprimes = _wrap("verlinde_badprimes")
verlinde_classify = _wrap("verlinde_classify")
verlinde_simples = _wrap("verlinde_simples")
