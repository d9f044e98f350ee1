"""JSON encodings of the package's objects.  Rationals travel as strings."""

from __future__ import annotations

from typing import Any, Dict, List, Sequence

from .colorful import ColorfulConfiguration, colorful_simplex
from .complexes import SimplicialComplexGF2
from .flips import FlipCertificate, FlipMode, FlipPath
from .gale import PointConfiguration
from .kernel.rational import rat, vec_str
from .minkowski import MinkowskiFace, SimplexV
from .ptransform import HPolytope


def _points(raw: Any, dim: int) -> List[tuple]:
    if not isinstance(raw, list):
        raise ValueError("expected a list of points")
    out = []
    for p in raw:
        if not isinstance(p, list) or len(p) != dim:
            raise ValueError(f"point {p!r} does not have {dim} coordinates")
        out.append(tuple(rat(x) for x in p))
    return out


def _dimension(obj: Any) -> int:
    if not isinstance(obj, dict) or "dimension" not in obj:
        raise ValueError("missing field 'dimension'")
    d = obj["dimension"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise ValueError("'dimension' must be a natural number")
    return d


def config_to_json(c: ColorfulConfiguration) -> Dict[str, Any]:
    return {"dimension": c.dim, "classes": [[vec_str(p) for p in cls] for cls in c.classes]}


def config_from_json(obj: Any) -> ColorfulConfiguration:
    d = _dimension(obj)
    classes = obj.get("classes")
    if not isinstance(classes, list) or not classes:
        raise ValueError("missing field 'classes'")
    return ColorfulConfiguration(d, tuple(tuple(_points(cls, d)) for cls in classes))


def simplex_to_json(s) -> List[List[int]]:
    return [[c, i] for c, i in s]


def simplex_from_json(raw: Any):
    if not isinstance(raw, list) or any(not isinstance(m, list) or len(m) != 2 for m in raw):
        raise ValueError("a colorful simplex is a list of [class, index] pairs")
    return colorful_simplex(raw)


def complex_to_json(cx: SimplicialComplexGF2) -> Dict[str, Any]:
    return {"vertices": cx.vertex_count, "facets": [list(f) for f in cx.facets()]}


def complex_from_json(obj: Any) -> SimplicialComplexGF2:
    if not isinstance(obj, dict) or "vertices" not in obj or "facets" not in obj:
        raise ValueError("complex needs 'vertices' and 'facets'")
    return SimplicialComplexGF2.from_facets(int(obj["vertices"]), [tuple(f) for f in obj["facets"]])


def flip_to_json(p: FlipPath) -> Dict[str, Any]:
    return {"start": config_to_json(p.start), "end": config_to_json(p.end),
            "ridge": simplex_to_json(p.ridge), "mode": p.mode.value}


def flip_from_json(obj: Any) -> FlipPath:
    try:
        mode = FlipMode(obj.get("mode", "CERTIFICATE"))
        return FlipPath(config_from_json(obj["start"]), config_from_json(obj["end"]),
                        simplex_from_json(obj["ridge"]), mode)
    except (KeyError, AttributeError) as exc:
        raise ValueError(f"malformed flip path: {exc}") from None


def certificate_to_json(cert: FlipCertificate) -> Dict[str, Any]:
    return {"valid": cert.valid, "endpoints_ok": cert.endpoints_ok,
            "symmetric_difference": sorted(simplex_to_json(s) for s in cert.symmetric_difference),
            "expected": sorted(simplex_to_json(s) for s in cert.expected)}


def point_config_to_json(a: PointConfiguration) -> Dict[str, Any]:
    out: Dict[str, Any] = {"dimension": a.dim, "points": [vec_str(p) for p in a.points]}
    if a.partition is not None:
        out["classes"] = [list(cls) for cls in a.partition]
    return out


def point_config_from_json(obj: Any) -> PointConfiguration:
    d = _dimension(obj)
    pts = _points(obj.get("points"), d)
    part = obj.get("classes")
    return PointConfiguration(d, tuple(pts), None if part is None else tuple(tuple(c) for c in part))


def simplices_to_json(simplices: Sequence[SimplexV]) -> Dict[str, Any]:
    return {"dimension": simplices[0].ambient,
            "simplices": [[vec_str(v) for v in s.vertices] for s in simplices]}


def simplices_from_json(obj: Any) -> List[SimplexV]:
    d = _dimension(obj)
    raw = obj.get("simplices")
    if not isinstance(raw, list) or not raw:
        raise ValueError("missing field 'simplices'")
    return [SimplexV(tuple(_points(s, d))) for s in raw]


def faces_to_json(faces: Sequence[MinkowskiFace]) -> List[List[List[int]]]:
    return [[list(u) for u in f.selection] for f in faces]


def hpolytope_to_json(p: HPolytope) -> Dict[str, Any]:
    return {"dimension": p.dim, "forms": [vec_str(f) for f in p.forms]}


def hpolytope_from_json(obj: Any) -> HPolytope:
    d = _dimension(obj)
    return HPolytope(d, tuple(_points(obj.get("forms"), d)))


def vectors_to_json(vectors) -> List[List[str]]:
    return [vec_str(v) for v in vectors]

