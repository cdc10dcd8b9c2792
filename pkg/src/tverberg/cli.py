"""Command-line interface: exact point-set input, one certificate-bearing report per run.

Input is a JSON document ``{"dim": d, "points": [[...], ...], "labels": [...]}``
whose coordinates are integers or fraction strings such as ``"-3/4"``.
Indices in reports are 1-based.  Exit codes: 0 for any completed verdict
(an empty region is a verdict), 2 for malformed input or usage, 3 when a
construction's hypothesis fails, 4 when a search budget runs out.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import gallery
from .cascade import ClaimFailed, HypothesisViolated, construct_cascade_partition, verify_cascade_inequality
from .depth import DepthReport, DimensionTooLarge, centerpoint_cell, rado_check, tukey_depth
from .flip import FlipPath, IndexNeverFree, InvalidState, RadonState, core_certificate_from_path, find_flip_path, verify_paper_example, verify_path
from .linalg import PointSet, affine_span_dim, combine, dependence_space, is_dependence, rank, sub, to_rat, to_vector
from .lp import check_barycentric
from .partitions import (
    Partition,
    SearchExhausted,
    TverbergRefutation,
    TverbergWitness,
    is_tverberg_partition,
    radon_from_dependence,
    search_tverberg,
    stirling2,
)
from .regions import (
    CellRefutation,
    CellWitness,
    ConvexCell,
    Region,
    cell_extreme,
    cell_verdict,
    core_membership,
    core_region,
    interval_union,
    region_dim,
    tverberg_region,
)

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_EXHAUSTED = 0, 2, 3, 4
DEFAULT_BUDGET = 100_000  # partitions (or partitions x deletions) per command


class InputError(ValueError):
    """Malformed input document; the message carries line and column when known."""


# ---------------------------------------------------------------- parsing

_NUMBER = re.compile(r"-?\d+(\.\d*)?([eE][+-]?\d+)?")


def _find_float(text: str) -> tuple[int, int, str] | None:
    """Position of the first non-integer number literal outside strings."""
    i, line, col, in_string = 0, 1, 1, False
    while i < len(text):
        ch = text[i]
        if in_string:
            if ch == "\\":
                i, col = i + 2, col + 2
                continue
            if ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch == "-" or ch.isdigit():
            m = _NUMBER.match(text, i)
            if m and (m.group(1) or m.group(2)):
                return line, col, m.group(0)
            if m:
                i, col = m.end(), col + len(m.group(0))
                continue
        if ch == "\n":
            line, col = line + 1, 1
        else:
            col += 1
        i += 1
    return None


def parse_document(text: str) -> tuple[PointSet, list[str] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    hit = _find_float(text)
    if hit is not None:
        line, col, literal = hit
        raise InputError(f"line {line}, column {col}: floating-point literal {literal} is not allowed; write it as a fraction string like \"1/2\"")
    if not isinstance(doc, dict) or "points" not in doc or "dim" not in doc:
        raise InputError("expected an object with \"dim\" and \"points\"")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError("\"dim\" must be a positive integer")
    pts = doc["points"]
    if not isinstance(pts, list) or not pts:
        raise InputError("\"points\" must be a nonempty list")
    rows = []
    for k, p in enumerate(pts, 1):
        if not isinstance(p, list) or len(p) != dim:
            raise InputError(f"point {k} must be a list of {dim} coordinates")
        try:
            rows.append(to_vector(p))
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"point {k}: {e}") from None
    try:
        s = PointSet.of(rows, dim=dim)
    except ValueError as e:
        raise InputError(str(e)) from None
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(s)):
        raise InputError("\"labels\" must list one label per point")
    return s, labels


def parse_indices(text: str, n: int) -> frozenset:
    """``"1,3,5"`` (1-based) to a set of 0-based indices."""
    try:
        out = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad index list {text!r}") from None
    if not out or any(i < 0 or i >= n for i in out):
        raise InputError(f"indices in {text!r} must lie in 1..{n}")
    return frozenset(out)


def parse_point(text: str, dim: int) -> tuple[Fraction, ...]:
    parts = [x.strip() for x in text.split(",")]
    if len(parts) != dim:
        raise InputError(f"--point needs {dim} comma-separated coordinates")
    try:
        return to_vector(parts)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"--point: {e}") from None


# ---------------------------------------------------------- serialization

def q(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def qv(v: Sequence[Fraction]) -> list:
    return [q(x) for x in v]


def one_based(idx: Sequence[int]) -> list[int]:
    return [i + 1 for i in idx]


def zero_based(idx: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(i) - 1 for i in idx)


def partition_json(p: Partition) -> dict:
    return {"parts": [one_based(x) for x in p.parts], "unassigned": one_based(p.unassigned)}


def witness_cert(w: TverbergWitness, deleted: Sequence[int] = ()) -> dict:
    out = {
        "type": "tverberg-witness",
        "parts": [one_based(x) for x in w.partition.parts],
        "point": qv(w.point),
        "coefficients": [qv(c) for c in w.coefficients],
    }
    if deleted:
        out["deleted"] = one_based(deleted)
    return out


def refutation_cert(r: TverbergRefutation, deleted: Sequence[int] = ()) -> dict:
    out = {"type": "tverberg-refutation", "parts": [one_based(x) for x in r.partition.parts], "multipliers": qv(r.multipliers)}
    if r.point is not None:
        out["point"] = qv(r.point)
    if deleted:
        out["deleted"] = one_based(deleted)
    return out


def cell_witness_cert(c: ConvexCell, w: CellWitness) -> dict:
    return {"type": "cell-witness", "hulls": c.to_json(), "point": qv(w.point), "coefficients": [qv(x) for x in w.coefficients]}


def cell_refutation_cert(c: ConvexCell, r: CellRefutation) -> dict:
    return {
        "type": "cell-refutation",
        "cell": c.to_json(),
        "hulls": [one_based(h) for h in r.hulls],
        "multipliers": qv(r.multipliers),
    }


def region_refutation_certs(reg: Region) -> list[dict]:
    out = []
    for r in reg.refutations:
        if isinstance(r, TverbergRefutation):
            out.append(refutation_cert(r))
        else:
            c, ref = r
            out.append(cell_refutation_cert(c, ref))
    return out


def region_json(reg: Region) -> tuple[dict, list[dict]]:
    """Cells with a witness each, plus the refutations of discarded candidates."""
    certs = []
    for c in reg.cells:
        certs.append(cell_witness_cert(c, cell_verdict(c)))
    body: dict[str, Any] = {"empty": reg.empty, "dim": region_dim(reg), "cells": reg.to_json()}
    if reg.ground.dim == 1:
        body["intervals"] = [[q(lo), q(hi)] for lo, hi in interval_union(reg)]
    return body, certs + region_refutation_certs(reg)


# ----------------------------------------------------------- verification

def _ground(s: PointSet, cert: dict) -> PointSet:
    return s.without(zero_based(cert["deleted"]))[0] if cert.get("deleted") else s


def _verify_one(s: PointSet, c: dict) -> bool:
    kind = c["type"]
    if kind == "dependence":
        return is_dependence(s, to_vector(c["alpha"]))
    if kind == "affinely-independent":
        return rank(s.lifted()) == len(s)
    if kind == "radon":
        alpha = to_vector(c["alpha"])
        if not any(alpha) or not is_dependence(s, alpha):
            return False
        r = radon_from_dependence(s, alpha)
        return (one_based(r.a), one_based(r.b), qv(r.point)) == (c["a"], c["b"], c["point"])
    if kind == "tverberg-witness":
        w = TverbergWitness(
            Partition(tuple(zero_based(p) for p in c["parts"])),
            to_vector(c["point"]),
            tuple(to_vector(x) for x in c["coefficients"]),
        )
        return w.verify(_ground(s, c))
    if kind == "tverberg-refutation":
        point = to_vector(c["point"]) if "point" in c else None
        r = TverbergRefutation(Partition(tuple(zero_based(p) for p in c["parts"])), to_vector(c["multipliers"]), point)
        return r.verify(_ground(s, c))
    if kind == "cell-witness":
        cell = ConvexCell(s, tuple(zero_based(h) for h in c["hulls"]))
        return CellWitness(to_vector(c["point"]), tuple(to_vector(x) for x in c["coefficients"])).verify(cell)
    if kind == "cell-refutation":
        cell = ConvexCell(s, tuple(zero_based(h) for h in c["cell"]))
        return CellRefutation(tuple(zero_based(h) for h in c["hulls"]), to_vector(c["multipliers"])).verify(cell)
    if kind == "barycentric":
        return check_barycentric(s, zero_based(c["indices"]), to_vector(c["coefficients"]), to_vector(c["point"]))
    if kind == "block":
        origin = to_vector(c["origin"])
        idx = zero_based(c["indices"])
        consts = to_vector(c["constants"])
        moved = [sub(s[i], origin) for i in idx]
        zero = (Fraction(0),) * s.dim
        ok = combine([abs(x) for x in consts], moved) == zero and sum(abs(x) for x in consts) > 0
        if c.get("balanced"):
            ok = ok and sum(consts) == 0 and combine(consts, moved) == zero
        return ok
    if kind == "depth-halfspace":
        rep = DepthReport(to_vector(c["point"]), int(c["depth"]), to_vector(c["normal"]), to_rat(c["offset"]))
        return rep.verify(s)
    if kind == "flip-path":
        path = _path_from_json(c)
        return verify_path(path, s, to_vector(c["y"]))
    if kind == "flip-component":
        # re-run the exhaustive search; the claim is that the swap is unreachable
        start = RadonState(zero_based(c["start"]["a"]), zero_based(c["start"]["b"]))
        return find_flip_path(s, to_vector(c["y"]), start, budget=int(c["states_budget"])) is None
    raise InputError(f"unknown certificate type {kind!r}")


def _path_from_json(c: dict) -> FlipPath:
    states = [RadonState(zero_based(st["a"]), zero_based(st["b"])) for st in c["states"]]
    moves = [(op, side, int(i) - 1) for op, side, i in c["moves"]]
    return FlipPath(states, moves)


def verify_report(doc: dict) -> bool:
    """Re-parse a report's embedded input and re-check every certificate."""
    s, _ = parse_document(json.dumps(doc["input"]))
    return all(_verify_one(s, c) for c in doc.get("certificates", []))


# --------------------------------------------------------------- commands

class Context:
    def __init__(self, args: argparse.Namespace, s: PointSet, labels):
        self.args, self.s, self.labels = args, s, labels
        self.budget = args.budget
        self.threads = args.threads

    def point(self) -> tuple[Fraction, ...]:
        if self.args.point is None:
            raise InputError("--point is required")
        return parse_point(self.args.point, self.s.dim)

    def need(self, name: str) -> int:
        value = getattr(self.args, name)
        if value is None:
            raise InputError(f"--{name} is required")
        return value

    def check_budget(self, count: int, what: str) -> None:
        if count > self.budget:
            raise SearchExhausted(f"{count} {what} exceed the budget of {self.budget}; raise --budget or try core-member")


def cmd_deps(ctx: Context) -> tuple[dict, list[dict]]:
    w = dependence_space(ctx.s)
    basis = [qv(a) for a in w.basis]
    certs = [{"type": "dependence", "alpha": a} for a in basis]
    if not basis:
        certs.append({"type": "affinely-independent"})
    return {"dimension": w.dim, "basis": basis}, certs


def cmd_radon(ctx: Context) -> tuple[dict, list[dict]]:
    w = dependence_space(ctx.s)
    if not w.basis:
        return {"radon": None, "reason": "the points are affinely independent"}, [{"type": "affinely-independent"}]
    r = radon_from_dependence(ctx.s, w.basis[0])
    body = {"radon": {"a": one_based(r.a), "b": one_based(r.b), "point": qv(r.point)}}
    return body, [{"type": "radon", "a": one_based(r.a), "b": one_based(r.b), "point": qv(r.point), "alpha": qv(r.alpha)}]


def cmd_tverberg(ctx: Context) -> tuple[dict, list[dict]]:
    r = ctx.need("r")
    res = search_tverberg(ctx.s, r, budget=ctx.budget, threads=ctx.threads)
    if res.witness is not None:
        body = {"exists": True, "partition": partition_json(res.witness.partition), "point": qv(res.witness.point), "examined": res.examined}
        return body, [witness_cert(res.witness)]
    body = {"exists": False, "examined": res.examined, "refuted": len(res.refutations), "total": stirling2(len(ctx.s), r)}
    return body, [refutation_cert(x) for x in res.refutations]


def cmd_region(ctx: Context) -> tuple[dict, list[dict]]:
    r = ctx.need("r")
    ctx.check_budget(stirling2(len(ctx.s), r), "partitions")
    body, certs = region_json(tverberg_region(ctx.s, r))
    return {"r": r, **body}, certs


def cmd_core(ctx: Context) -> tuple[dict, list[dict]]:
    r, t = ctx.need("r"), ctx.need("t")
    n = len(ctx.s)
    if t < 0 or t >= n:
        raise InputError("--t must satisfy 0 <= t < |S|")
    ctx.check_budget(math.comb(n, t) * stirling2(n - t, r), "partition checks")
    body, certs = region_json(core_region(ctx.s, r, t))
    return {"r": r, "t": t, **body}, certs


def cmd_core_member(ctx: Context) -> tuple[dict, list[dict]]:
    r, t = ctx.need("r"), ctx.need("t")
    n = len(ctx.s)
    if t < 0 or t >= n:
        raise InputError("--t must satisfy 0 <= t < |S|")
    ctx.check_budget(math.comb(n, t) * stirling2(n - t, r), "partition checks")
    p = ctx.point()
    m = core_membership(p, ctx.s, r, t)
    certs = [witness_cert(w, deleted) for deleted, w in m.witnesses.items()]
    body: dict[str, Any] = {"point": qv(p), "member": m.member, "deletions_checked": len(m.witnesses)}
    if not m.member:
        body["failed_deletion"] = one_based(m.failed_deletion)
        certs += [refutation_cert(x, m.failed_deletion) for x in m.refutations]
    return body, certs


def _block_certs(res) -> list[dict]:
    bd = res.decomposition
    certs = []
    for j, b in enumerate(bd.blocks):
        certs.append({
            "type": "block",
            "origin": qv(res.point),
            "indices": one_based(b),
            "constants": [q(bd.constants[i]) for i in b],
            "balanced": res.branch == "split",
        })
    for bc in res.block_certificates:
        certs.append({"type": "barycentric", "indices": one_based(bc.block), "coefficients": qv(bc.coefficients), "point": qv(res.point)})
    return certs


def cmd_cascade_construct(ctx: Context) -> tuple[dict, list[dict]]:
    t = ctx.need("t")
    res = construct_cascade_partition(ctx.s, t)
    bd = res.decomposition
    body = {
        "t": t,
        "branch": res.branch,
        "point": qv(res.point),
        "partition": partition_json(res.partition),
        "blocks": [one_based(b) for b in bd.blocks],
        "ignored": one_based(bd.ignored),
        "constants": [[q(bd.constants[i]) for i in b] for b in bd.blocks],
    }
    return body, [witness_cert(res.witness)] + _block_certs(res)


def _cascade_certs(s: PointSet, dims: Sequence[int]) -> list[dict]:
    """A witness for each nonempty T_r and refutations for the first empty one."""
    certs = []
    for r, d in enumerate(dims, 1):
        reg = tverberg_region(s, r)
        if d >= 0:
            c = reg.cells[0]
            certs.append(cell_witness_cert(c, cell_verdict(c)))
        else:
            certs += region_refutation_certs(reg)
            break
    return certs


def cmd_cascade_check(ctx: Context) -> tuple[dict, list[dict]]:
    rep = verify_cascade_inequality(ctx.s)
    body = {"sum": rep.total, "dims": list(rep.dims), "holds": rep.holds, "affine_dim": rep.affine_dim, "max_parts": rep.max_parts}
    return body, _cascade_certs(ctx.s, rep.dims)


def cmd_flip_path(ctx: Context) -> tuple[dict, list[dict]]:
    n = len(ctx.s)
    if ctx.args.start_a is None or ctx.args.start_b is None:
        raise InputError("--start-a and --start-b are required")
    y = ctx.point()
    start = RadonState(parse_indices(ctx.args.start_a, n), parse_indices(ctx.args.start_b, n))
    path = find_flip_path(ctx.s, y, start, budget=ctx.budget)
    if path is None:
        marker = {"type": "flip-component", "y": qv(y), "start": start.to_json(), "states_budget": ctx.budget}
        return {"y": qv(y), "start": start.to_json(), "reachable": False}, [marker]
    body: dict[str, Any] = {"y": qv(y), "start": start.to_json(), "reachable": True, "moves": len(path)}
    certs = [{"type": "flip-path", "y": qv(y), **path.to_json()}]
    try:
        freed = core_certificate_from_path(path, ctx.s, y)
        body["core_certificate"] = {str(i + 1): step for i, step in freed.items()}
        for i, step in freed.items():
            st = path.states[step]
            rest, keep = ctx.s.without([i])
            pos = {orig: k for k, orig in enumerate(keep)}
            sides = [[pos[j] for j in sorted(st.a)], [pos[j] for j in sorted(st.b)]]
            w = is_tverberg_partition(rest, Partition(tuple(tuple(x) for x in sides)), point=y)
            certs.append(witness_cert(w, [i]))
    except IndexNeverFree as e:
        body["core_certificate"] = None
        body["core_note"] = str(e)
    return body, certs


def _depth_body(rep: DepthReport) -> dict:
    return {"point": qv(rep.point), "depth": rep.depth, "normal": qv(rep.normal), "offset": q(rep.offset)}


def _depth_cert(rep: DepthReport) -> dict:
    return {"type": "depth-halfspace", **_depth_body(rep)}


def _rado(ctx: Context, t: int) -> tuple[dict, list[dict]]:
    n = len(ctx.s)
    if t < 0 or t >= n:
        raise InputError("--t must satisfy 0 <= t < |S|")
    ctx.check_budget(math.comb(n, t), "hulls")
    rep = rado_check(ctx.s, t)
    body: dict[str, Any] = {"t": t, "size": rep.size, "bound": rep.bound, "bound_met": rep.bound_met, "nonempty": rep.nonempty}
    cell = centerpoint_cell(ctx.s, t)
    v = rep.witness if rep.witness is not None else cell_verdict(cell)
    if isinstance(v, CellWitness):
        certs = [cell_witness_cert(cell, v)]
        body["witness"] = qv(v.point)
    else:
        certs = [cell_refutation_cert(cell, v)]
    if rep.depth is not None:
        body["depth"] = rep.depth.depth
        certs.append(_depth_cert(rep.depth))
    return body, certs


def cmd_depth(ctx: Context) -> tuple[dict, list[dict]]:
    if ctx.args.point is not None:
        rep = tukey_depth(ctx.point(), ctx.s)
        return _depth_body(rep), [_depth_cert(rep)]
    if ctx.args.t is not None:
        return _rado(ctx, ctx.args.t)
    raise InputError("depth needs --point or --t")


def cmd_rado_check(ctx: Context) -> tuple[dict, list[dict]]:
    return _rado(ctx, ctx.need("t"))


def _line_checks(s: PointSet) -> tuple[dict, list[dict]]:
    xs = sorted(p[0] for p in s)
    n = len(xs) - 1  # points are x_1 .. x_{n+1}
    rows, certs, ok = [], [], True
    for r in range(1, len(xs) + 1):
        reg = tverberg_region(s, r)
        got = [tuple(x) for x in interval_union(reg)]
        want = [(xs[r - 1], xs[n - r + 1])] if r <= n - r + 2 else []
        ok &= got == want
        rows.append({"r": r, "t": 0, "interval": [qv(x) for x in got], "matches": got == want})
        for t in range(1, min(3, n) + 1):
            core = core_region(s, r, t)
            got = [tuple(x) for x in interval_union(core)]
            want = [(xs[r + t - 1], xs[n - r - t + 1])] if r + t <= n - r - t + 2 else []
            ok &= got == want
            rows.append({"r": r, "t": t, "interval": [qv(x) for x in got], "matches": got == want})
    return {"closed_forms_match": ok, "rows": rows}, certs


def cmd_gallery(ctx: Context) -> tuple[dict, list[dict]]:
    name = ctx.args.name
    s = ctx.s
    if name == "paper-counterexample":
        rep = verify_paper_example(s)
        return {"checks": rep.checks, "details": rep.details, "passed": rep.passed}, []
    if name.startswith("line-"):
        return _line_checks(s)
    # cross and curated-cascade instances have exactly affine dim + t + 2 points
    t = len(s) - affine_span_dim(s) - 2
    body: dict[str, Any] = {}
    certs: list[dict] = []
    rep = verify_cascade_inequality(s)
    body["cascade"] = {"sum": rep.total, "dims": list(rep.dims), "holds": rep.holds}
    certs += _cascade_certs(s, rep.dims)
    res = construct_cascade_partition(s, t)
    body["construction"] = {"t": t, "branch": res.branch, "partition": partition_json(res.partition), "point": qv(res.point)}
    certs += [witness_cert(res.witness)] + _block_certs(res)
    return body, certs


COMMANDS: dict[str, Callable[[Context], tuple[dict, list[dict]]]] = {
    "deps": cmd_deps,
    "radon": cmd_radon,
    "tverberg": cmd_tverberg,
    "region": cmd_region,
    "core": cmd_core,
    "core-member": cmd_core_member,
    "cascade-check": cmd_cascade_check,
    "cascade-construct": cmd_cascade_construct,
    "flip-path": cmd_flip_path,
    "depth": cmd_depth,
    "rado-check": cmd_rado_check,
    "gallery": cmd_gallery,
}


# -------------------------------------------------------------------- SVG

def _convex_hull_2d(points: Sequence[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """Exact monotone chain; collinear points are dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    upper: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def render_svg(s: PointSet, r: int, labels=None, size: int = 480) -> str:
    """Points, the hulls of one Tverberg r-partition and sampled points of T_r."""
    if s.dim != 2:
        raise InputError("plot needs d = 2")
    res = search_tverberg(s, r)
    reg = tverberg_region(s, r)
    samples: list[list[tuple[Fraction, Fraction]]] = []
    directions = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
    for c in reg.cells:
        pts = {cell_extreme(c, d)[1] for d in directions}
        samples.append(_convex_hull_2d(list(pts)))
    xs = [p[0] for p in s]
    ys = [p[1] for p in s]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, Fraction(1))
    margin = 30
    scale = (size - 2 * margin) / span

    def xy(p) -> tuple[float, float]:
        return float(margin + (p[0] - lo_x) * scale), float(size - margin - (p[1] - lo_y) * scale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append(f'<rect width="{size}" height="{size}" fill="white"/>')
    if res.witness is not None:
        for k, part in enumerate(res.witness.partition.parts):
            hull = _convex_hull_2d([s[i] for i in part])
            color = PALETTE[k % len(PALETTE)]
            coords = " ".join(f"{a:.2f},{b:.2f}" for a, b in map(xy, hull))
            if len(hull) >= 3:
                out.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="0.12" stroke="{color}" stroke-width="1.5"/>')
            else:
                out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>')
    for hull in samples:
        coords = " ".join(f"{a:.2f},{b:.2f}" for a, b in map(xy, hull))
        if len(hull) >= 3:
            out.append(f'<polygon class="cell" points="{coords}" fill="black" fill-opacity="0.35"/>')
        elif len(hull) == 2:
            out.append(f'<polyline class="cell" points="{coords}" stroke="black" stroke-width="3"/>')
    for a, b in sorted({xy(p) for hull in samples for p in hull}):
        out.append(f'<circle class="cell-point" cx="{a:.2f}" cy="{b:.2f}" r="3" fill="black"/>')
    if res.witness is not None:
        a, b = xy(res.witness.point)
        out.append(f'<circle class="witness" cx="{a:.2f}" cy="{b:.2f}" r="5" fill="none" stroke="black" stroke-width="2"/>')
    for i, p in enumerate(s):
        a, b = xy(p)
        label = labels[i] if labels else str(i + 1)
        out.append(f'<circle class="point" cx="{a:.2f}" cy="{b:.2f}" r="4" fill="#444"/>')
        out.append(f'<text x="{a + 6:.2f}" y="{b - 6:.2f}" font-size="11" font-family="sans-serif">{label}</text>')
    if reg.empty:
        out.append(f'<text class="empty" x="{margin}" y="{margin - 10}" font-size="14" font-family="sans-serif">T_{r} is empty</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------ driver

def _text(doc: dict) -> str:
    lines = [f"command: {doc['command']['name']}"]
    for key, value in doc["result"].items():
        lines.append(f"{key}: {json.dumps(value)}")
    lines.append(f"certificates: {len(doc['certificates'])} ({'all verified' if doc['verified'] else 'NOT VERIFIED'})")
    lines.append(f"elapsed: {doc['elapsed_seconds']:.3f}s")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="number of parts")
    common.add_argument("--t", type=int, help="number of deleted points")
    common.add_argument("--point", help="comma-separated exact coordinates, e.g. 0,1/2")
    common.add_argument("--start-a", dest="start_a", help="1-based indices of side A, e.g. 1,3")
    common.add_argument("--start-b", dest="start_b", help="1-based indices of side B")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="partition or flip-state budget")
    common.add_argument("--threads", type=int, default=1, help="worker processes for partition searches")
    common.add_argument("--output", help="write the report (or SVG) to this path")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="tverberg", description="Exact Radon and Tverberg computations with certificates.")
    sub_parsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        if name == "gallery":
            continue
        p = sub_parsers.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", default="-", help="JSON point set (default: standard input)")
    g = sub_parsers.add_parser("gallery", parents=[common])
    g.add_argument("name", help="paper-counterexample, cross, cross-N, line-N or curated-cascade-KEY")
    p = sub_parsers.add_parser("plot", parents=[common])
    p.add_argument("input", nargs="?", default="-")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def input_document(s: PointSet, labels=None) -> dict:
    doc: dict[str, Any] = {"dim": s.dim, "points": [qv(p) for p in s]}
    if labels is not None:
        doc["labels"] = labels
    return doc


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    started = time.perf_counter()
    try:
        if args.budget < 1 or args.threads < 1:
            raise InputError("--budget and --threads must be positive")
        if args.r is not None and args.r < 1:
            raise InputError("--r must be positive")
        if args.command == "gallery":
            try:
                s, labels = gallery.named(args.name), None
            except (KeyError, IndexError):
                raise InputError(f"unknown gallery instance {args.name!r}") from None
        else:
            s, labels = parse_document(_read_input(args.input))
        if args.command == "plot":
            r = args.r if args.r is not None else 2
            svg = render_svg(s, r, labels)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(svg)
            else:
                stdout.write(svg)
            return EXIT_OK
        ctx = Context(args, s, labels)
        result, certs = COMMANDS[args.command](ctx)
    except (InputError, DimensionTooLarge, InvalidState) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except (HypothesisViolated, ClaimFailed) as e:
        print(f"hypothesis violated: {e}", file=stderr)
        return EXIT_HYPOTHESIS
    except SearchExhausted as e:
        print(f"search exhausted: {e}", file=stderr)
        return EXIT_EXHAUSTED
    doc = {
        "command": {"name": args.command, "r": args.r, "t": args.t, "point": args.point,
                    "start_a": args.start_a, "start_b": args.start_b, "budget": args.budget},
        "input": input_document(s, labels),
        "result": result,
        "certificates": certs,
    }
    doc["verified"] = verify_report(doc)
    doc["elapsed_seconds"] = time.perf_counter() - started
    text = json.dumps(doc, indent=1) + "\n" if args.format == "json" else _text(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
