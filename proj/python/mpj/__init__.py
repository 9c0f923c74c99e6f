"""Programs over monoids in the variety J.

Thin wrapper around the compiled extension: expression construction,
membership and equality, word programs (sweeps, selectors, products),
compression, algebraic classification and the verification suites.
JSON-carrying functions are re-exposed here with plain dicts.
"""

import json as _json

import _mpj
from _mpj import *  # noqa: F401,F403

Error = _mpj.Error
CapExceeded = _mpj.CapExceeded


def classify(expr):
    """Algebraic profile of a language: states, monoid size, omega,
    variety membership, local J, and the stable (quasi) counterparts."""
    return _json.loads(_mpj._classify_json(expr))


def quotient(alphabet, k):
    """Free monoid modulo k-subword equivalence: size, J membership,
    shortlex class representatives."""
    return _json.loads(_mpj._quotient_json(alphabet, k))


def run_check(spec):
    """Run one verification check from a dict like
    {"check_id": "sweep-reduction", "parameters": {"n_max": "4"}}."""
    return _json.loads(_mpj._run_check_json(_json.dumps(spec)))


def default_suite():
    return _json.loads(_mpj._default_suite_json())


def mutation_suite():
    return _json.loads(_mpj._mutation_suite_json())


def run_suite(name="default"):
    """Run the named suite ("default" or "mutation"); returns one report
    dict per check."""
    if name == "default":
        suite = default_suite()
    elif name == "mutation":
        suite = mutation_suite()
    else:
        raise ValueError("unknown suite '%s'" % name)
    return [run_check(spec) for spec in suite]


def compress(program, k):
    """Subword-compress a program to k-equivalence. Returns
    {"kept": ..., "original_length": ..., "program": Program}."""
    out = _json.loads(_mpj._compress_json(_mpj._program_json(program), k))
    out["program"] = _mpj._program_from_json(_json.dumps(out["program"]))
    return out


def expr_to_dict(expr):
    return _json.loads(_mpj._expr_json(expr))


def expr_from_dict(d):
    return _mpj._expr_from_json(_json.dumps(d))


def dfa_to_dict(dfa):
    return _json.loads(_mpj._dfa_json(dfa))


def dfa_from_dict(d):
    return _mpj._dfa_from_json(_json.dumps(d))


def program_to_dict(program):
    return _json.loads(_mpj._program_json(program))


def program_from_dict(d):
    return _mpj._program_from_json(_json.dumps(d))


def gamma_to_dict(program):
    return _json.loads(_mpj._gamma_json(program))


def gamma_from_dict(d):
    return _mpj._gamma_from_json(_json.dumps(d))


def selector_to_dict(selector):
    return _json.loads(_mpj._selector_json(selector))


def selector_from_dict(d):
    return _mpj._selector_from_json(_json.dumps(d))


def product_to_dict(product):
    return _json.loads(_mpj._product_json(product))


def product_from_dict(d):
    return _mpj._product_from_json(_json.dumps(d))
