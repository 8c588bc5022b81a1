"""JSON forms for every kernel value.

Rationals travel as decimal-free strings: `"3"`, `"-2/3"`.  Quaternions
are objects over the fixed basis order, `{"w": ..., "x": ..., "y": ...,
"z": ...}`.  Polynomial coefficient lists run low to high.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput
from .modules import EigenTuple, ModulePresentation, RootNotFound
from .mpoly import (
    CommutingPoint,
    LeftIdeal,
    MPoly,
    RabinowitschCertificate,
    grlex_key,
)
from .scalars import Quat
from .upoly import Isolated, RootClass, UPoly


def rat_to_json(r: Fraction) -> str:
    return str(r)


def rat_from_json(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad rational {text!r}") from exc


def quat_to_json(q: Quat) -> dict:
    return {
        "w": rat_to_json(q.w),
        "x": rat_to_json(q.x),
        "y": rat_to_json(q.y),
        "z": rat_to_json(q.z),
    }


def quat_from_json(obj: dict) -> Quat:
    try:
        return Quat(*(rat_from_json(obj[key]) for key in ("w", "x", "y", "z")))
    except KeyError as exc:
        raise InvalidInput(f"quaternion object missing field {exc}") from exc


def upoly_to_json(p: UPoly) -> list:
    return [quat_to_json(c) for c in p.coeffs]


def upoly_from_json(items: list) -> UPoly:
    return UPoly([quat_from_json(o) for o in items])


def mpoly_to_json(p: MPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [
            {"exps": list(exps), "coeff": quat_to_json(c)}
            for exps, c in sorted(p.terms.items(), key=lambda kv: grlex_key(kv[0]))
        ],
    }


def mpoly_from_json(obj: dict) -> MPoly:
    nvars = int(obj["nvars"])
    terms = {}
    for item in obj["terms"]:
        exps = tuple(int(e) for e in item["exps"])
        terms[exps] = terms.get(exps, Quat.scalar(0)) + quat_from_json(item["coeff"])
    return MPoly(nvars, terms)


def point_to_json(pt: CommutingPoint) -> dict:
    return {"components": [quat_to_json(c) for c in pt]}


def point_from_json(obj: dict) -> CommutingPoint:
    return CommutingPoint([quat_from_json(c) for c in obj["components"]])


def module_to_json(module: ModulePresentation) -> dict:
    return {
        "m": module.m,
        "mats": [
            [[quat_to_json(entry) for entry in row] for row in mat]
            for mat in module.mats
        ],
    }


def module_from_json(obj: dict) -> ModulePresentation:
    return ModulePresentation(
        int(obj["m"]),
        [
            [[quat_from_json(entry) for entry in row] for row in mat]
            for mat in obj["mats"]
        ],
    )


def eigen_to_json(tup: EigenTuple) -> dict:
    return {
        "vector": [quat_to_json(c) for c in tup.v],
        "point": point_to_json(tup.point),
    }


def root_not_found_to_json(out: RootNotFound) -> dict:
    return {
        "poly": upoly_to_json(out.poly),
        "poly_text": str(out.poly),
        "variable": out.var_index + 1,
        "search_exhaustive": out.search_exhaustive,
    }


def root_class_to_json(cls: RootClass) -> dict:
    if isinstance(cls, Isolated):
        return {"kind": "isolated", "a": quat_to_json(cls.a)}
    return {"kind": "sphere", "t": rat_to_json(cls.t), "n": rat_to_json(cls.n)}


def ideal_to_json(ideal: LeftIdeal) -> dict:
    return {"gens": [mpoly_to_json(g) for g in ideal.gens]}


def certificate_to_json(cert: RabinowitschCertificate) -> dict:
    return {
        "N": cert.N,
        "cofactors": [
            [mpoly_to_json(h) for h in row] for row in cert.cofactors
        ],
    }
