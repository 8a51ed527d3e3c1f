"""Python bindings for hclab. JSON-producing calls return plain dicts."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import (
    __version__,
    build_certificate_json,
    check_conditions_json,
    check_invariance_json,
    check_quasiconjugacy_json,
    orbit_json,
    scenario_json,
    verify_certificate_json,
)


def _subspace(subspace):
    return subspace if isinstance(subspace, str) else _json.dumps(subspace)


def check_quasiconjugacy(t, s, n, stride=2, offset=-1):
    return _json.loads(check_quasiconjugacy_json(t, s, stride, offset, n))


def check_invariance(t, subspace, samples):
    return _json.loads(check_invariance_json(t, _subspace(subspace), samples))


def orbit(t, x, steps, norm="sup"):
    return _json.loads(orbit_json(t, x, steps, norm))


def scenario(name):
    return _json.loads(scenario_json(name))


def check_conditions(name, samples=100, k_probe=20):
    return _json.loads(check_conditions_json(name, samples, k_probe))


def build_certificate(name, K=12):
    return _json.loads(build_certificate_json(name, K))


def verify_certificate(cert):
    text = cert if isinstance(cert, str) else _json.dumps(cert)
    return _json.loads(verify_certificate_json(text))
