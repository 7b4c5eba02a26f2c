"""Certification toolkit for hidden nonlocality without entanglement.

The heavy lifting lives in the C++ extension ``hnl._hnl``; this package
wraps its JSON-string API with dict-in / dict-out conveniences.
"""

import json as _json

from . import _hnl

__all__ = [
    "construct",
    "certify",
    "measure",
    "classify",
    "reproduce",
    "builtin_protocol",
    "render",
]


def construct(family_id):
    """Build a named product-state family (e.g. ``"type1:11"``) as a dict."""
    return _json.loads(_hnl.construct(family_id))


def certify(check, state_set, party="", witness=()):
    """Run one certification check on a state-set dict.

    ``check`` is one of ``orthogonality``, ``irredundancy``,
    ``irreducibility``, ``indistinguishability`` (needs ``witness``) or
    ``oplm-dim`` (needs ``party``).
    """
    return _json.loads(
        _hnl.certify(check, _json.dumps(state_set), party, list(witness))
    )


def measure(state_set, literal):
    """Apply a diagonal measurement literal such as ``"B:0-4;5-10"``."""
    return _json.loads(_hnl.measure(_json.dumps(state_set), literal))


def classify(state_set, measurement_literals, protocol, witnesses):
    """Full classification pipeline; returns the report dict."""
    return _json.loads(
        _hnl.classify(
            _json.dumps(state_set),
            list(measurement_literals),
            _json.dumps(protocol),
            [list(w) for w in witnesses],
        )
    )


def reproduce(pipeline_id):
    """Run a shipped pipeline: example1..example4 or multiparty."""
    return _json.loads(_hnl.reproduce(pipeline_id))


def builtin_protocol(family_id):
    """Serialized builtin discrimination protocol for a family."""
    return _json.loads(_hnl.builtin_protocol(family_id))


def render(state_set, format="text"):
    """Grid rendering of a bipartite state set (``"svg"`` or ``"text"``)."""
    return _hnl.render(_json.dumps(state_set), format)
