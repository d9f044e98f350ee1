"""Command line entry point: ``chromadepth <command> ...``.

Exit codes: 0 when every checked property holds, 1 when a property is
violated (a reproducer file is written), 2 for bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from . import io
from .batch import parallel_map
from .colorful import (ColorfulConfiguration, core_contains_origin, extremal_config,
                       hitting_simplices, is_centered, is_relative_general_position,
                       random_centered_rgp)
from .complexes import verify_euler_identity
from .flips import (flip_walk, homotopy_events, segment_stays_centered,
                    translate_flip, verify_flip)
from .gale import (GaleTransform, colorful_gale, face_test, gale_transform, inverse_colorful_gale,
                   positively_equivalent)
from .kernel.rational import rat, rat_str, vec_str
from .minkowski import (extremal_minkowski, fan_from_triangle, intersect_fans, random_simplices,
                        tmf_bound, totally_mixed_facets)
from .ptransform import (LinearProjection, delta_transform, p_transform, simplex_minkowski_transform,
                         verify_coincidence)

CHECKS = ("bound", "betti", "euler", "lower")


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: str
    results: Dict[str, Any] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    elapsed_ms: int = 0

    def to_json(self) -> Dict[str, Any]:
        return {"command": self.command, "inputs": self.inputs, "seed": self.seed,
                "elapsed_ms": self.elapsed_ms, "violations": self.violations, "results": self.results}


def digest(obj: Any) -> str:
    blob = json.dumps(obj, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg})") from None


def _dims(text: str) -> List[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}") from None
    if not out:
        raise InputError("empty list of sizes")
    return out


def _ridge(text: str):
    members = []
    for part in text.split(","):
        try:
            c, i = part.split(":")
            members.append((int(c), int(i)))
        except ValueError:
            raise InputError(f"ridge members look like class:index, got {part!r}") from None
    return members


# --- commands -----------------------------------------------------------------------------

def cmd_csd(args) -> RunReport:
    raw = _load_json(args.config)
    c = io.config_from_json(raw)
    rep = hitting_simplices(c)
    rpt = RunReport("csd", digest(raw))
    rpt.results = {"csd": rep.csd, "bound": rep.bound, "satisfies_bound": rep.satisfies_bound,
                   "centered": is_centered(c), "rgp": is_relative_general_position(c)}
    if args.list:
        rpt.results["hitting"] = [io.simplex_to_json(s) for s in rep.hitting]
    if args.assert_bound and not rep.satisfies_bound:
        rpt.violations.append(f"csd {rep.csd} exceeds the bound {rep.bound}")
        rpt.results["config"] = raw
    return rpt


def _corrupt(c: ColorfulConfiguration) -> ColorfulConfiguration:
    # harness self-test: push everything away from the origin
    return c.map_points(lambda p: tuple(x + 1000 for x in p))


def verify_seed(job) -> Dict[str, Any]:
    """All requested checks on one generated instance; used by ``verify`` and the test suite."""
    shape, seed, checks, corrupt = job
    c = random_centered_rgp(shape, seed)
    if corrupt:
        c = _corrupt(c)
    d = c.dim
    out: Dict[str, Any] = {"seed": seed, "violations": []}
    bad = out["violations"]
    if not (is_centered(c) and is_relative_general_position(c)):
        bad.append("generator produced a configuration that is not centered and in general position")
    rep = hitting_simplices(c)
    out["csd"] = rep.csd
    if "bound" in checks and not rep.satisfies_bound:
        bad.append(f"csd {rep.csd} exceeds the bound {rep.bound}")
    if "lower" in checks:
        if rep.csd < 1:
            bad.append("no hitting simplex")
        if all(k == d + 1 for k in shape) and core_contains_origin(c) and rep.csd < 1 + d * d:
            bad.append(f"csd {rep.csd} below 1 + d^2 with the origin inside the core")
    if not bad and ({"betti", "euler"} & set(checks)):
        e = verify_euler_identity(c)
        out["betti"] = [e.betti_dminus1, e.betti_d]
        if "betti" in checks and e.betti_dminus1 != 1:
            bad.append(f"reduced Betti number {e.betti_dminus1} in degree d-1 of the avoiding complex")
        if "euler" in checks and not e.identity_holds:
            bad.append("Euler identity fails")
    if bad:
        out["config"] = io.config_to_json(c)
    return out


def cmd_verify(args) -> RunReport:
    shape = _dims(args.shape)
    checks = tuple(x.strip() for x in args.checks.split(",") if x.strip())
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise InputError(f"unknown checks: {sorted(unknown)}")
    if len(shape) < 2 or any(k < 2 for k in shape):
        raise InputError("shape needs at least two classes of at least two points")
    seeds = range(args.seed, args.seed + args.seeds)
    rpt = RunReport("verify", digest([shape, args.seed, args.seeds, checks]), seed=args.seed)
    rows = parallel_map(verify_seed, [(shape, s, checks, args.corrupt_generator) for s in seeds])
    failing = [r for r in rows if r["violations"]]
    rpt.results = {"shape": shape, "seeds": len(rows), "checks": list(checks),
                   "failed": len(failing), "csd_max": max(r["csd"] for r in rows)}
    for r in failing:
        rpt.violations.extend(f"seed {r['seed']}: {v}" for v in r["violations"])
    if failing:
        first = failing[0]
        rpt.results["reproducer"] = {"shape": shape, "seed": first["seed"], "config": first["config"],
                                     "violations": first["violations"]}
    return rpt


def _tmf_summary(simplices, fans: bool) -> Dict[str, Any]:
    facets = totally_mixed_facets(simplices)
    dims = [s.dim for s in simplices]
    bound = tmf_bound(dims)
    res: Dict[str, Any] = {"dims": dims, "count": len(facets), "bound": bound,
                           "bound_ok": len(facets) <= bound, "equality": len(facets) == bound,
                           "facets": io.faces_to_json(facets)}
    if fans:
        if any(k != 2 for k in dims):
            raise InputError("--fans needs triangles only")
        inter = intersect_fans([fan_from_triangle(t) for t in simplices])
        res["fan_cones"] = inter.maximal_cones
        res["fan_bound_ok"] = inter.bound_ok
    return res


def cmd_tmf(args) -> RunReport:
    if args.extremal:
        simplices = extremal_minkowski(_dims(args.extremal))
        source: Any = ["extremal", args.extremal]
    elif args.random:
        simplices = random_simplices(_dims(args.random), args.seed)
        source = ["random", args.random, args.seed]
    elif args.simplices:
        source = _load_json(args.simplices)
        simplices = io.simplices_from_json(source)
    else:
        raise InputError("give a simplices file, --extremal or --random")
    rpt = RunReport("tmf", digest(source), seed=args.seed if args.random else None)
    try:
        rpt.results = _tmf_summary(simplices, args.fans)
    except AssertionError as exc:
        rpt.violations.append(str(exc))
        rpt.results = {}
    rpt.results["simplices"] = io.simplices_to_json(simplices)
    if rpt.results.get("bound_ok") is False:
        rpt.violations.append("more totally mixed facets than the bound allows")
    if rpt.results.get("fan_cones", rpt.results.get("count")) != rpt.results.get("count"):
        rpt.violations.append("fan cones and totally mixed facets disagree")
    return rpt


def cmd_flip(args) -> RunReport:
    if args.translate:
        raw = _load_json(args.translate)
        if not args.ridge:
            raise InputError("--translate needs --ridge")
        c = io.config_from_json(raw)
        path = translate_flip(c, _ridge(args.ridge))
        cert = verify_flip(path)
        rpt = RunReport("flip", digest([raw, args.ridge]))
        rpt.results = {"path": io.flip_to_json(path), "certificate": io.certificate_to_json(cert)}
        if args.strict:
            try:
                events = homotopy_events(path.start, path.end)
                rpt.results["events"] = [{"ridge": io.simplex_to_json(e.ridge), "note": e.note}
                                         for e in events]
            except ValueError as exc:
                rpt.results["events"] = str(exc)
        if not cert.valid:
            rpt.violations.append("translation flip certificate rejected")
        return rpt
    if args.verify:
        raw = _load_json(args.verify)
        cert = verify_flip(io.flip_from_json(raw))
        rpt = RunReport("flip", digest(raw))
        rpt.results = {"certificate": io.certificate_to_json(cert)}
        return rpt
    pair = args.walk or args.events
    if not pair:
        raise InputError("choose one of --translate, --verify, --walk, --events")
    raws = [_load_json(p) for p in pair]
    c1, c2 = (io.config_from_json(r) for r in raws)
    if args.events:
        events = homotopy_events(c1, c2)
        rpt = RunReport("flip", digest(raws))
        rpt.results = {"events": [{"ridge": io.simplex_to_json(e.ridge), "note": e.note,
                                   "t_interval": [rat_str(x) for x in e.t_interval]} for e in events]}
        if args.strict:
            rpt.results["centered_throughout"] = segment_stays_centered(c1, c2)
        return rpt
    walk = flip_walk(c1, c2, max_retries=args.max_retries, seed=args.seed)
    rpt = RunReport("flip", digest(raws), seed=args.seed)
    certs = [verify_flip(p) for p in walk.paths]
    rpt.results = {"success": walk.success, "flips": len(walk.paths), "retries_used": walk.retries_used,
                   "diagnostics": list(walk.diagnostics),
                   "paths": [io.flip_to_json(p) for p in walk.paths]}
    if any(not cert.valid for cert in certs):
        rpt.violations.append("a flip returned by the walk has an invalid certificate")
    return rpt


def _colorful_as_gale(c: ColorfulConfiguration) -> GaleTransform:
    vectors = tuple(p for cls in c.classes for p in cls)
    part, start = [], 0
    for cls in c.classes:
        part.append(tuple(range(start, start + len(cls))))
        start += len(cls)
    return GaleTransform(len(vectors), c.dim, vectors, tuple(part))


def cmd_gale(args) -> RunReport:
    if args.inverse:
        if args.extremal:
            c = extremal_config([k for k in _dims(args.extremal)])
            source: Any = ["extremal", args.extremal]
        elif args.config:
            source = _load_json(args.config)
            c = io.config_from_json(source)
        else:
            raise InputError("--inverse needs a configuration file or --extremal")
        g = _colorful_as_gale(c)
        a = inverse_colorful_gale(g, check=False)
        rpt = RunReport("gale", digest(source))
        simplices = [[vec_str(a.points[v]) for v in cls] for cls in a.partition]
        back = colorful_gale(a)
        rpt.results = {"dimension": a.dim, "simplices": simplices,
                       "round_trip": positively_equivalent(back.vectors, g.vectors)}
        if not rpt.results["round_trip"]:
            rpt.violations.append("inverse colorful Gale transform does not round trip")
        return rpt
    if not args.config:
        raise InputError("gale needs a point configuration file")
    raw = _load_json(args.config)
    a = io.point_config_from_json(raw)
    g = colorful_gale(a) if args.colorful else gale_transform(a)
    rpt = RunReport("gale", digest(raw))
    rpt.results = {"dimension": g.dim, "vectors": io.vectors_to_json(g.vectors)}
    if args.face is not None:
        rpt.results["face"] = face_test(g, _dims(args.face) if args.face else [])
    return rpt


def cmd_ptransform(args) -> RunReport:
    if args.coincidence or args.random:
        if args.random:
            simplices = random_simplices(_dims(args.random), args.seed)
            source: Any = ["random", args.random, args.seed]
        else:
            source = _load_json(args.coincidence)
            simplices = io.simplices_from_json(source)
        rpt = RunReport("ptransform", digest(source), seed=args.seed if args.random else None)
        m = simplex_minkowski_transform(simplices)
        ok = verify_coincidence(simplices)
        rpt.results = {"coincidence": ok, "dimension": m.dim, "vectors": io.vectors_to_json(m.vectors),
                       "simplices": io.simplices_to_json(simplices)}
        if not ok:
            rpt.violations.append("Minkowski and colorful Gale transforms differ")
        return rpt
    if args.delta:
        raw = _load_json(args.delta)
        a = io.point_config_from_json(raw)
        t = delta_transform(a.points)
        ok = positively_equivalent(t.vectors, gale_transform(a).vectors)
        rpt = RunReport("ptransform", digest(raw))
        rpt.results = {"dimension": t.dim, "vectors": io.vectors_to_json(t.vectors), "matches_gale": ok}
        if not ok:
            rpt.violations.append("simplex transform differs from the Gale transform")
        return rpt
    if args.hpoly:
        raw = _load_json(args.hpoly)
        p = io.hpolytope_from_json(raw)
        try:
            matrix = json.loads(args.projection) if args.projection else None
        except json.JSONDecodeError:
            raise InputError("--projection must be a JSON matrix") from None
        proj = LinearProjection.identity(p.dim) if matrix is None else LinearProjection(
            tuple(tuple(rat(x) for x in row) for row in matrix))
        t = p_transform(p, proj)
        rpt = RunReport("ptransform", digest([raw, matrix]))
        rpt.results = {"dimension": t.dim, "vectors": io.vectors_to_json(t.vectors)}
        return rpt
    raise InputError("choose one of --coincidence, --random, --delta, --hpoly")


# --- rendering and main -------------------------------------------------------------------

def render_text(rpt: RunReport) -> str:
    lines = [f"command: {rpt.command}", f"inputs: {rpt.inputs}"]
    if rpt.seed is not None:
        lines.append(f"seed: {rpt.seed}")
    for k, v in rpt.results.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        lines.append(f"{k}: {v}")
    lines.append(f"violations: {len(rpt.violations)}")
    lines.extend(f"  {v}" for v in rpt.violations)
    lines.append(f"elapsed_ms: {rpt.elapsed_ms}")
    return "\n".join(lines)


def _write_reproducer(rpt: RunReport, directory: str) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"reproducer-{rpt.command}-{rpt.inputs}.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rpt.to_json(), fh, indent=2)
    return path


def build_parser() -> argparse.ArgumentParser:
    # the shared options work before or after the subcommand; the later one wins
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="sub_format", choices=("json", "text"))
    common.add_argument("--reproducer-dir", dest="sub_reproducer_dir",
                        help="where failing runs leave their reproducer (default: current directory)")
    parser = argparse.ArgumentParser(prog="chromadepth", description="Exact colorful simplicial depth toolkit")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--reproducer-dir", default=".")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csd", parents=[common], help="colorful simplicial depth of a configuration file")
    p.add_argument("config")
    p.add_argument("--list", action="store_true", help="include the hitting simplices")
    p.add_argument("--assert-bound", action="store_true", help="exit 1 if the upper bound fails")
    p.set_defaults(func=cmd_csd)

    p = sub.add_parser("verify", parents=[common], help="check properties on seeded random instances")
    p.add_argument("--shape", required=True, help="class sizes, e.g. 2,2,2")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--corrupt-generator", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tmf", parents=[common], help="totally mixed facets of a Minkowski sum of simplices")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("simplices", nargs="?")
    src.add_argument("--extremal", help="simplex dimensions of the extremal instance, e.g. 2,2")
    src.add_argument("--random", help="simplex dimensions of a seeded random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fans", action="store_true", help="cross-check with the fan intersection")
    p.set_defaults(func=cmd_tmf)

    p = sub.add_parser("flip", parents=[common], help="flips between configurations")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--translate", metavar="CONFIG")
    mode.add_argument("--verify", metavar="PATH")
    mode.add_argument("--walk", nargs=2, metavar=("START", "END"))
    mode.add_argument("--events", nargs=2, metavar=("START", "END"))
    p.add_argument("--ridge", help="ridge members as class:index,class:index,...")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=20)
    p.add_argument("--strict", action="store_true", help="also sweep events / certify centeredness")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("gale", parents=[common], help="Gale transforms and their inverse")
    p.add_argument("config", nargs="?")
    p.add_argument("--colorful", action="store_true")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--extremal")
    p.add_argument("--face", help="comma separated index set to test as a face")
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("ptransform", parents=[common], help="P-transforms and the Minkowski transform")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--coincidence", metavar="SIMPLICES")
    mode.add_argument("--random", help="simplex dimensions of a seeded random collection")
    mode.add_argument("--delta", metavar="POINTS")
    mode.add_argument("--hpoly", metavar="HPOLY")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--projection", help="JSON matrix of the projection")
    p.set_defaults(func=cmd_ptransform)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = args.sub_format or args.format
    args.reproducer_dir = args.sub_reproducer_dir or args.reproducer_dir
    start = time.perf_counter()
    try:
        rpt = args.func(args)
    except (InputError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rpt.elapsed_ms = int((time.perf_counter() - start) * 1000)
    if rpt.violations:
        path = _write_reproducer(rpt, args.reproducer_dir)
        rpt.results["reproducer_file"] = path
    print(render_text(rpt) if args.format == "text" else json.dumps(rpt.to_json(), indent=2))
    if rpt.violations:
        print(f"property violated; reproducer written to {path}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
