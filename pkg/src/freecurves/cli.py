"""Command-line front end.

Input files are line oriented::

    # comment
    field a : a^2 - 5
    component line : x + a*y
    component conic : x^2 - y*z

or a single ``curve : <poly>`` line for a bare curve.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field

from . import catalog as cat
from .arrangements import (
    AR_MODULE,
    MDR,
    Arrangement,
    Component,
    singular_points,
    split_field,
    weak_combinatorics,
    weak_ziegler_pair,
    ziegler_pair,
)
from .errors import (
    CatalogError,
    DegreeUnsupported,
    FieldTowerUnsupported,
    FileFormatError,
    FreeCurvesError,
    InvalidComponent,
    NotLineArrangement,
    NotReduced,
    ParseError,
    ProvablyReducible,
)
from .numfield import QQ, NumberField, adjoin_root
from .polyring import HomogPoly, parse_field_poly, parse_poly
from .syzygy import classify

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_TOWER, EXIT_NOT_REDUCED, EXIT_CATALOG = 0, 1, 2, 3, 4, 5

_KINDS = {"line": "Line", "conic": "Conic", "curve": "OtherSmooth"}


@dataclass
class ParsedInput:
    field: NumberField
    curve: HomogPoly
    arrangement: Arrangement | None = None


def _split_line(raw: str, lineno: int):
    if ":" not in raw:
        raise FileFormatError("expected '<keyword> ... : <value>'", lineno, 1)
    head, _, body = raw.partition(":")
    return head.split(), body, len(head) + 1


def parse_input(text: str) -> ParsedInput:
    """Parse the arrangement file format; errors carry 1-based line and column."""
    F: NumberField = QQ
    comps: list = []
    curve = None
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words, body, offset = _split_line(raw, lineno)
        key = words[0] if words else ""
        if key == "field":
            if seen_content:
                raise FileFormatError("the field must be declared before any curve", lineno, 1)
            if len(words) != 2 or F is not QQ:
                raise FileFormatError("expected 'field <generator> : <minimal polynomial>'", lineno, 1)
            coeffs = parse_field_poly(body, words[1], lineno, offset)
            if len(coeffs) < 2 or coeffs[-1] != 1:
                raise FileFormatError("minimal polynomial must be monic of degree >= 1", lineno, offset + 1)
            try:
                F = adjoin_root(coeffs, words[1]) if len(coeffs) > 2 else QQ
            except (ProvablyReducible, DegreeUnsupported) as exc:
                raise FileFormatError(str(exc), lineno, offset + 1) from exc
        elif key == "component":
            if len(words) != 2 or words[1] not in _KINDS:
                raise FileFormatError("expected 'component <line|conic|curve> : <poly>'", lineno, 1)
            if curve is not None:
                raise FileFormatError("cannot mix 'curve' and 'component' entries", lineno, 1)
            p = parse_poly(body, F, lineno, offset)
            try:
                comps.append(Component(_KINDS[words[1]], p))
            except InvalidComponent as exc:
                raise FileFormatError(str(exc), lineno, offset + 1) from exc
            seen_content = True
        elif key == "curve":
            if len(words) != 1:
                raise FileFormatError("expected 'curve : <poly>'", lineno, 1)
            if comps or curve is not None:
                raise FileFormatError("'curve' must be the only curve entry", lineno, 1)
            curve = parse_poly(body, F, lineno, offset)
            seen_content = True
        else:
            raise FileFormatError(f"unknown keyword {key!r}", lineno, 1)
    if curve is not None:
        if curve.is_zero() or curve.degree < 1:
            raise FileFormatError("curve must have positive degree", None, None)
        return ParsedInput(F, curve)
    if not comps:
        raise FileFormatError("no curve or component given", None, None)
    A = Arrangement(tuple(comps), F)
    return ParsedInput(F, A.polynomial(), A)


def read_input(path: str) -> ParsedInput:
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


# --- reports -------------------------------------------------------------------------------

@dataclass
class AnalysisReport:
    input: str
    field: str
    degree: int
    mdr: int
    tau: int
    exponents: tuple
    relation_degrees: tuple
    curve_class: str
    type_k: int | None
    subtype: str | None
    resolution: str
    weak_combinatorics: dict | None = None
    points_field: str | None = None
    singular_points: list | None = None
    warnings: list = dc_field(default_factory=list)
    seconds: float | None = None

    def to_json(self) -> dict:
        out = {
            "input": self.input,
            "degree": self.degree,
            "field": self.field,
            "mdr": self.mdr,
            "tau": self.tau,
            "exponents": list(self.exponents),
            "relation_degrees": list(self.relation_degrees),
            "class": self.curve_class,
            "type_k": self.type_k,
            "subtype": self.subtype,
            "resolution": self.resolution,
            "weak_combinatorics": self.weak_combinatorics,
            "warnings": list(self.warnings),
        }
        if self.singular_points is not None:
            out["points_field"] = self.points_field
            out["singular_points"] = self.singular_points
        if self.seconds is not None:
            out["timing"] = {"seconds": round(self.seconds, 3)}
        return out

    def to_text(self) -> str:
        lines = [
            f"input: {self.input}",
            f"field: {self.field}",
            f"degree: {self.degree}",
            f"class: {self.curve_class}",
            "exponents: " + " ".join(map(str, self.exponents)),
            "relation degrees: " + (" ".join(map(str, self.relation_degrees)) or "-"),
            f"mdr: {self.mdr}",
            f"tau: {self.tau}",
            f"type: {self.type_k if self.type_k is not None else '-'}"
            + (f" (subtype {self.subtype})" if self.subtype else ""),
            f"resolution: {self.resolution}",
        ]
        if self.weak_combinatorics is not None:
            wc = self.weak_combinatorics
            sings = ", ".join(f"{c} x {k}" for k, c in wc["singularities"].items())
            lines.append("weak-combinatorics: degrees " + " ".join(map(str, wc["degrees"])) + f"; {sings}")
        if self.singular_points is not None:
            lines.append(f"singular points (over {self.points_field}):")
            for r in self.singular_points:
                inc = ",".join(map(str, r["incident"]))
                lines.append(f"  {r['point']}  components {inc}  {r['label']}"
                             f"  mu={r['mu']} tau={r['tau']}" + (f"  x{r['count']}" if r["count"] > 1 else ""))
        for w in self.warnings:
            lines.append(f"warning: {w}")
        if self.seconds is not None:
            lines.append(f"time: {self.seconds:.3f} s")
        return "\n".join(lines) + "\n"


def analyze(parsed: ParsedInput, name: str, aggregate: bool = False, timing: bool = True) -> AnalysisReport:
    t0 = time.perf_counter()
    ca = classify(parsed.curve)
    warnings = list(ca.warnings)
    wc_json = pts = pfield = None
    A = parsed.arrangement
    if A is not None:
        wc = weak_combinatorics(A, aggregate)
        wc_json = {"degrees": list(wc.degree_counts), "singularities": dict(wc.sing_counts)}
        pfield = str(split_field(A, aggregate).field)
        pts = []
        for r in singular_points(A, aggregate):
            pts.append({
                "point": r.point_str(),
                "incident": list(r.incident),
                "label": r.label.key,
                "mu": r.local.mu,
                "tau": r.local.tau,
                "multiplicity": r.local.multiplicity,
                "count": r.count,
            })
            if r.label.note and r.label.note not in warnings and r.label.name == "Other":
                warnings.append(f"{r.label.key}: {r.label.note}")
        if any(r.conjugate is not None for r in singular_points(A, aggregate)):
            warnings.append("conjugate points aggregated with shared invariants")
    return AnalysisReport(
        input=name,
        field=str(parsed.field),
        degree=ca.d,
        mdr=ca.mdr,
        tau=ca.tau,
        exponents=ca.exponents,
        relation_degrees=ca.relation_degrees,
        curve_class=ca.class_name,
        type_k=ca.type_k,
        subtype=ca.subtype,
        resolution=ca.resolution.display(),
        weak_combinatorics=wc_json,
        points_field=pfield,
        singular_points=pts,
        warnings=warnings,
        seconds=(time.perf_counter() - t0) if timing else None,
    )


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj if isinstance(obj, dict) else obj.to_json(), indent=2) + "\n")
    else:
        out.write(obj if isinstance(obj, str) else obj.to_text())


# --- commands ------------------------------------------------------------------------------

def cmd_analyze(args, out) -> int:
    parsed = read_input(args.path)
    report = analyze(parsed, args.path, args.aggregate_points, not args.no_timing)
    _emit(report, args.format, out)
    return EXIT_OK


_VARIANTS = {
    "lattice-mdr": (ziegler_pair, MDR),
    "lattice-ar": (ziegler_pair, AR_MODULE),
    "weak-mdr": (weak_ziegler_pair, MDR),
    "weak-ar": (weak_ziegler_pair, AR_MODULE),
}


def cmd_ziegler(args, out) -> int:
    a, b = read_input(args.path_a), read_input(args.path_b)
    if a.arrangement is None or b.arrangement is None:
        raise NotLineArrangement("pair detection needs files with 'component' entries")
    fn, variant = _VARIANTS[args.variant]
    t0 = time.perf_counter()
    if fn is weak_ziegler_pair:
        v = fn(a.arrangement, b.arrangement, variant, aggregate=True)
    else:
        v = fn(a.arrangement, b.arrangement, variant)
    obj = {
        "inputs": [args.path_a, args.path_b],
        "variant": args.variant,
        "verdict": "IsPair" if v.is_pair else "NotPair",
        "reason": v.reason,
        "details": {k: _jsonable(val) for k, val in sorted(v.details.items())},
    }
    if not args.no_timing:
        obj["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    if args.format == "json":
        _emit(obj, "json", out)
    else:
        lines = [f"{obj['verdict']}: {v.reason}"]
        lines += [f"  {k}: {val}" for k, val in obj["details"].items()]
        if "timing" in obj:
            lines.append(f"time: {obj['timing']['seconds']:.3f} s")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def _catalog_params(args) -> dict:
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise FileFormatError(f"--param expects k=v, got {item!r}")
        k, _, val = item.partition("=")
        params[k.strip()] = val.strip()
    for k in ("s", "t", "n"):
        v = getattr(args, k, None)
        if v is not None:
            params[k] = v
    return params


def cmd_catalog(args, out) -> int:
    if args.catalog_cmd == "list":
        if args.format == "json":
            _emit({"entries": [
                {"name": e.name, "description": e.description, "params": sorted(e.params),
                 "extended": e.extended} for e in cat.CATALOG.values()]}, "json", out)
        else:
            width = max(len(n) for n in cat.CATALOG)
            for e in cat.CATALOG.values():
                extra = f" [params: {', '.join(sorted(e.params))}]" if e.params else ""
                out.write(f"{e.name:<{width}}  {e.description}{extra}\n")
        return EXIT_OK
    entry = cat.get_entry(args.name)
    params = _catalog_params(args)
    unknown = set(params) - set(entry.params)
    if unknown:
        raise cat.ConstraintViolated(f"entry {entry.name!r} takes no parameter(s) {sorted(unknown)}")
    if "n" in params:
        params["n"] = int(params["n"])
    if args.field:
        if "field" not in entry.build.__code__.co_varnames:
            raise cat.ConstraintViolated(f"entry {entry.name!r} does not take a field")
        params["field"] = parsed_field(args.field)
    A = entry.arrangement(**params)
    text = cat.serialize(A, f"{entry.name} {' '.join(f'{k}={v}' for k, v in sorted(params.items()) if k != 'field')}".strip())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def parsed_field(spec: str) -> NumberField:
    """Field from '<gen> : <minpoly>'."""
    head, _, body = spec.partition(":")
    name = head.strip()
    coeffs = parse_field_poly(body, name)
    return adjoin_root(coeffs, name)


# --- argument parsing ----------------------------------------------------------------------

def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "text"), default=d("text"), help="report format")
    p.add_argument("--no-timing", action="store_true", default=d(False), help="omit timing")
    p.add_argument("--aggregate-points", action="store_true", default=d(False),
                   help="record conjugate points over unsupported extensions together")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="freecurves", description=__doc__.splitlines()[0])
    _add_global(p, False)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a curve or arrangement file")
    _add_global(a, True)
    a.add_argument("path")

    z = sub.add_parser("ziegler", help="decide whether two arrangements form a (weak) Ziegler pair")
    _add_global(z, True)
    z.add_argument("path_a")
    z.add_argument("path_b")
    z.add_argument("--variant", choices=sorted(_VARIANTS), default="lattice-ar")

    c = sub.add_parser("catalog", help="list or generate named arrangements")
    _add_global(c, True)
    csub = c.add_subparsers(dest="catalog_cmd", required=True)
    cl = csub.add_parser("list")
    _add_global(cl, True)
    g = csub.add_parser("gen")
    _add_global(g, True)
    g.add_argument("name")
    g.add_argument("--param", action="append", metavar="K=V")
    g.add_argument("--s")
    g.add_argument("--t")
    g.add_argument("--n")
    g.add_argument("--field", metavar="GEN:MINPOLY", help="e.g. 'a : a^2 - 5'")
    g.add_argument("-o", "--output")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    handlers = {"analyze": cmd_analyze, "ziegler": cmd_ziegler, "catalog": cmd_catalog}
    try:
        return handlers[args.command](args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except FieldTowerUnsupported as exc:
        err.write(f"unsupported field tower: {exc}\n")
        return EXIT_TOWER
    except NotReduced as exc:
        err.write(f"not reduced: {exc}\n")
        return EXIT_NOT_REDUCED
    except CatalogError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_CATALOG
    except NotLineArrangement as exc:
        err.write(f"not a line arrangement: {exc}\n")
        return EXIT_PARSE
    except FreeCurvesError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
