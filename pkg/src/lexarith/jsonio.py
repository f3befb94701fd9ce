"""JSON schemas for the machine interface.

Rationals travel as ``"p/q"`` strings (``"p"`` when the denominator is 1).
Elements are ``{"terms": [{"exp": [...], "coeff": "..."}]}``, verdicts are
``{"level", "equivalent", "witness", "reason"}``, automorphism descriptors
are a kind-tagged union.  Serialization is canonical: fixed key order via
sorted dumps, no whitespace, so equal values are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import automorph
from .analysis import ClassSequence, EmbedResult
from .equiv import Verdict
from .model import Element
from .textform import format_element
from .witnesses import BoundN, Witness


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_pretty(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def rational_to_json(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def rational_from_json(s: str) -> Fraction:
    return Fraction(s)


def element_to_json(e: Element) -> dict:
    return {
        "terms": [
            {
                "exp": [rational_to_json(c) for c in exponent.components],
                "coeff": rational_to_json(coeff),
            }
            for exponent, coeff in e.terms()
        ]
    }


def element_from_json(obj: dict, dim: int) -> Element:
    terms = []
    for t in obj["terms"]:
        exp = tuple(rational_from_json(c) for c in t["exp"])
        terms.append((exp, rational_from_json(t["coeff"])))
    return Element(terms, dim)


def witness_to_json(w: Witness):
    if isinstance(w, BoundN):
        return {"n": w.n}
    return {"c": element_to_json(w.c), "c_text": format_element(w.c)}


def verdict_to_json(v: Verdict) -> dict:
    return {
        "level": v.level,
        "equivalent": v.equivalent,
        "witness": witness_to_json(v.witness) if v.witness is not None else None,
        "reason": v.reason,
    }


def descriptor_to_json(d) -> dict:
    if isinstance(d, automorph.Identity):
        return {"kind": "identity"}
    if isinstance(d, automorph.E0ClassShift):
        return {
            "kind": "e0_class_shift",
            "anchor": element_to_json(d.anchor),
            "offset": d.offset,
        }
    if isinstance(d, automorph.E2Affine):
        return {
            "kind": "e2_affine",
            "a": element_to_json(d.a),
            "b": element_to_json(d.b),
            "n": d.n,
            "c": element_to_json(d.c),
            "m": d.m,
        }
    if isinstance(d, automorph.E3Shift):
        return {
            "kind": "e3_shift",
            "a1": element_to_json(d.a1),
            "a2": element_to_json(d.a2),
            "c": element_to_json(d.c),
        }
    if isinstance(d, automorph.Compose):
        return {"kind": "compose", "parts": [descriptor_to_json(p) for p in d.parts]}
    if isinstance(d, automorph.Inverse):
        return {"kind": "inverse", "of": descriptor_to_json(d.of)}
    if isinstance(d, automorph.SegmentExtend):
        return {
            "kind": "segment_extend",
            "below": descriptor_to_json(d.below),
            "a": element_to_json(d.a),
            "b": element_to_json(d.b),
        }
    raise TypeError(f"not a descriptor: {d!r}")


def descriptor_from_json(obj: dict, dim: int):
    kind = obj["kind"]
    if kind == "identity":
        return automorph.Identity()
    if kind == "e0_class_shift":
        return automorph.E0ClassShift(element_from_json(obj["anchor"], dim), obj["offset"])
    if kind == "e2_affine":
        return automorph.E2Affine(
            a=element_from_json(obj["a"], dim),
            b=element_from_json(obj["b"], dim),
            n=obj["n"],
            c=element_from_json(obj["c"], dim),
            m=obj["m"],
        )
    if kind == "e3_shift":
        return automorph.E3Shift(
            a1=element_from_json(obj["a1"], dim),
            a2=element_from_json(obj["a2"], dim),
            c=element_from_json(obj["c"], dim),
        )
    if kind == "compose":
        return automorph.Compose(tuple(descriptor_from_json(p, dim) for p in obj["parts"]))
    if kind == "inverse":
        return automorph.Inverse(descriptor_from_json(obj["of"], dim))
    if kind == "segment_extend":
        return automorph.SegmentExtend(
            below=descriptor_from_json(obj["below"], dim),
            a=element_from_json(obj["a"], dim),
            b=element_from_json(obj["b"], dim),
        )
    raise ValueError(f"unknown descriptor kind {kind!r}")


def sequence_to_json(seq: ClassSequence) -> dict:
    return {
        "kind": seq.kind,
        "level": seq.level,
        "direction": seq.direction,
        "terms": [element_to_json(t) for t in seq.terms],
        "texts": [format_element(t) for t in seq.terms],
    }


def embed_to_json(r: EmbedResult) -> dict:
    return {"value": rational_to_json(r.value), "degenerate": r.degenerate}
