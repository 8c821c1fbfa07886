"""Command line entry point: JSON config in, canonical report envelope out.

Exit codes: 0 computed and every checked assumption holds, 2 a checked
assumption failed (the report is still written), 1 usage or config error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .checkers import DEFAULT_UNDERLINE_CAP, Verdict, run_all_checks
from .cohomology import (
    group_cohomology_report,
    kostant_report,
    left_adjoint_report,
    parameter_support,
    principal_series_report,
    satake_target_report,
)
from .errors import AssumptionViolated, ConfigError, OrthogonalityFails, SatakeLabError, SizeCap
from .levi import build_levi, xi_and_hM
from .oracle import DEFAULT_CE_CAP, sl2_module_oracle
from .parallel import ordered_map
from .root_datum import CartanType, Preset, build_raw_root_datum, build_root_datum, center_is_connected
from .verify import compare_with_oracle
from .weights import ModPCharacter, as_underline, torus_basis
from .weyl import DEFAULT_WEYL_CAP, normalize_subset

SCHEMA_VERSION = 1
COMMANDS = (
    "check", "kostant", "group-cohomology", "left-adjoint", "satake",
    "pseries", "parameters", "oracle-verify", "report-all",
)
KNOWN_KEYS = {
    "family", "rank", "preset", "p", "f", "J", "lambda", "command", "caps",
    "output_format", "chi0", "simple_roots", "simple_coroots",
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass
class JobConfig:
    family: str | None
    rank: int | None
    preset: str
    p: int
    f: int = 1
    J: list = field(default_factory=list)  # 1-based
    lam: list | None = None
    command: str | None = None
    caps: dict = field(default_factory=dict)
    output_format: str = "json"
    chi0: list | None = None
    simple_roots: list | None = None
    simple_coroots: list | None = None

    @classmethod
    def from_dict(cls, data: dict, source: str | None = None):
        def fail(msg, key):
            raise ConfigError(msg, key, _line_of(source, key))

        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = sorted(set(data) - KNOWN_KEYS)
        if unknown:
            fail(f"unknown key {unknown[0]!r}", unknown[0])
        preset = data.get("preset", "SimplyConnected")
        if preset not in {p.value for p in Preset}:
            fail(f"unknown preset {preset!r}", "preset")
        family, rank = data.get("family"), data.get("rank")
        if preset != Preset.RAW.value or family is not None:
            if not isinstance(family, str) or len(family) != 1:
                fail("family must be one of A..G", "family")
            if not isinstance(rank, int) or isinstance(rank, bool):
                fail("rank must be an integer", "rank")
        p = data.get("p")
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            fail(f"p must be a prime, got {p!r}", "p")
        f = data.get("f", 1)
        if not isinstance(f, int) or isinstance(f, bool) or f < 1:
            fail("f must be an integer >= 1", "f")
        J = data.get("J", [])
        if not isinstance(J, list) or not all(isinstance(j, int) and not isinstance(j, bool) for j in J):
            fail("J must be a list of 1-based simple-root indices", "J")
        if len(set(J)) != len(J):
            fail("J has repeated indices", "J")
        lam = data.get("lambda")
        if lam == 0 or lam == []:
            lam = None
        if lam is not None:
            ok = isinstance(lam, list) and len(lam) == f and all(
                isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v) for v in lam
            )
            if not ok:
                fail(f"lambda must be a list of {f} integer vectors", "lambda")
        caps = data.get("caps", {}) or {}
        if not isinstance(caps, dict) or not all(k in ("weyl", "underline", "ce") for k in caps):
            fail("caps accepts only weyl, underline and ce", "caps")
        if not all(isinstance(v, int) and v > 0 for v in caps.values()):
            fail("caps must be positive integers", "caps")
        fmt = data.get("output_format", "json")
        if fmt not in ("json", "text"):
            fail("output_format must be json or text", "output_format")
        command = data.get("command")
        if command is not None and command not in COMMANDS:
            fail(f"unknown command {command!r}", "command")
        chi0 = data.get("chi0")
        if chi0 is not None and not (isinstance(chi0, list) and all(isinstance(x, int) for x in chi0)):
            fail("chi0 must be a list of integer exponents", "chi0")
        roots, coroots = data.get("simple_roots"), data.get("simple_coroots")
        if preset == Preset.RAW.value and (roots is None or coroots is None):
            fail("Raw preset needs simple_roots and simple_coroots", "simple_roots")
        return cls(family, rank, preset, p, f, list(J), lam, command, dict(caps), fmt, chi0, roots, coroots)

    def to_dict(self):
        out = {
            "family": self.family,
            "rank": self.rank,
            "preset": self.preset,
            "p": self.p,
            "f": self.f,
            "J": list(self.J),
            "lambda": self.lam,
            "command": self.command,
            "caps": dict(self.caps),
            "output_format": self.output_format,
        }
        if self.chi0 is not None:
            out["chi0"] = self.chi0
        if self.simple_roots is not None:
            out["simple_roots"] = self.simple_roots
            out["simple_coroots"] = self.simple_coroots
        return out

    def build(self):
        """Resolve the root datum, the 0-based J and the underline weight."""
        try:
            if self.preset == Preset.RAW.value:
                ct = CartanType(self.family.upper(), self.rank) if self.family else None
                datum = build_raw_root_datum(self.simple_roots, self.simple_coroots, ct)
            else:
                datum = build_root_datum(CartanType(self.family.upper(), self.rank), Preset(self.preset))
        except SatakeLabError as exc:
            where = "simple_roots" if self.preset == Preset.RAW.value else "family"
            raise ConfigError(str(exc), where) from exc
        bad = [j for j in self.J if not 1 <= j <= datum.rank]
        if bad:
            raise ConfigError(f"J index {bad[0]} out of range 1..{datum.rank}", "J")
        J = normalize_subset(datum, [j - 1 for j in self.J])
        try:
            lams = as_underline(self.lam, datum, self.f)
        except SatakeLabError as exc:
            raise ConfigError(str(exc), "lambda") from exc
        return datum, J, lams


def _line_of(source, key):
    if not source:
        return None
    needle = f'"{key}"'
    for n, line in enumerate(source.splitlines(), 1):
        if needle in line:
            return n
    return None


def parse_config(text: str) -> JobConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg}", None, exc.lineno) from None
    return JobConfig.from_dict(data, text)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default, ensure_ascii=False) + "\n"


def canonical_hash(envelope: dict) -> str:
    body = {k: v for k, v in envelope.items() if k not in ("timings", "canonical_hash")}
    text = json.dumps(body, sort_keys=True, separators=(",", ":"), default=_json_default)
    return hashlib.sha256(text.encode()).hexdigest()


def datum_summary(datum):
    out = datum.to_dict()
    table = datum.positive_roots
    out["positive_roots"] = [list(r.vector) for r in table.roots]
    out["coxeter_numbers"] = list(table.coxeter_numbers)
    out["center_connected"] = center_is_connected(datum)
    return out


class Job:
    """One configured computation; each section returns (payload, verdicts, failed)."""

    def __init__(self, config: JobConfig, cap_weyl=None, cap_underline=None, subsets=None):
        self.config = config
        self.datum, self.J, self.lams = config.build()
        caps = config.caps
        self.weyl_cap = cap_weyl or caps.get("weyl", DEFAULT_WEYL_CAP)
        self.cap = cap_underline or caps.get("underline", DEFAULT_UNDERLINE_CAP)
        self.ce_cap = caps.get("ce", DEFAULT_CE_CAP)
        self.subsets = subsets
        self.p, self.f = config.p, config.f

    def args(self):
        return self.datum, self.J, self.lams, self.p, self.f

    def check(self):
        reports = run_all_checks(*self.args(), cap=self.cap, weyl_cap=self.weyl_cap)
        verdicts = {r.name: r.verdict.value for r in reports}
        hard = ("p_bound", "p_valuation", "orthogonality_direct")
        failed = any(r.name in hard and r.verdict != Verdict.PASS for r in reports)
        payload = {
            "checks": [r.to_dict() for r in reports],
            "levi": _levi_dict(self.datum, self.J, self.f),
        }
        return payload, verdicts, failed

    def _cohomology(self, fn, name):
        try:
            rep = fn(*self.args(), cap=self.cap, weyl_cap=self.weyl_cap)
        except AssumptionViolated as exc:
            return {"error": str(exc)}, {name: "Fail"}, True
        return rep.to_dict(), {name: "Pass"}, False

    def kostant(self):
        return self._cohomology(kostant_report, "kostant")

    def group_cohomology(self):
        return self._cohomology(group_cohomology_report, "group_cohomology")

    def left_adjoint(self):
        return self._cohomology(left_adjoint_report, "left_adjoint")

    def satake(self):
        try:
            rep = satake_target_report(*self.args(), cap=self.cap, weyl_cap=self.weyl_cap)
        except OrthogonalityFails as exc:
            return {"error": str(exc), "orthogonality": exc.report.to_dict()}, {"satake": "Fail"}, True
        except AssumptionViolated as exc:
            return {"error": str(exc)}, {"satake": "Fail"}, True
        return rep.to_dict(), {"satake": "Pass"}, False

    def pseries(self):
        if self.config.chi0 is None:
            raise ConfigError("pseries needs chi0 exponents", "chi0")
        if len(self.config.chi0) != self.datum.lattice_rank:
            raise ConfigError(f"chi0 needs {self.datum.lattice_rank} exponents", "chi0")
        chi0 = ModPCharacter(self.p**self.f - 1, torus_basis(self.datum).tag, tuple(self.config.chi0))
        try:
            rep = principal_series_report(self.datum, chi0, self.p, self.f, self.cap, self.weyl_cap)
        except AssumptionViolated as exc:
            return {"error": str(exc)}, {"pseries": "Fail"}, True
        return rep.to_dict(), {"pseries": "Pass"}, False

    def parameters(self):
        subsets = None if self.subsets is None else [[j - 1 for j in s] for s in self.subsets]
        sup = parameter_support(self.datum, self.lams, self.p, self.f, subsets, self.cap, self.weyl_cap)
        verdicts = {"parameters:" + "{" + ",".join(str(j + 1) for j in sorted(s.J)) + "}": s.verdict for s in sup}
        return {"supports": [s.to_dict() for s in sup]}, verdicts, False

    def oracle_verify(self):
        zero = not any(any(v) for v in self.lams)
        if zero:
            try:
                cmp = compare_with_oracle(self.datum, self.J, self.p, self.f)
            except SizeCap as exc:
                return {"skipped": str(exc)}, {"oracle": "NotApplicable"}, False
            except AssumptionViolated as exc:
                return {"error": str(exc)}, {"oracle": "Fail"}, True
            v = "Pass" if cmp.agree else "Fail"
            return {"mode": "chevalley_eilenberg", **cmp.to_dict()}, {"oracle": v}, not cmp.agree
        if self.datum.rank == 1 and self.f == 1 and not self.J:
            lam = self.lams[0]
            m = sum(a * b for a, b in zip(lam, self.datum.simple_coroots[0]))
            try:
                sl2 = sl2_module_oracle(m, self.p)
                rep = kostant_report(*self.args(), cap=self.cap, weyl_cap=self.weyl_cap)
            except SatakeLabError as exc:
                return {"error": str(exc)}, {"oracle": "Fail"}, True
            kw = [[sum(a * b for a, b in zip(c.weight[0], self.datum.simple_coroots[0])) for c in cs]
                  for _, cs in sorted(rep.degrees.items())]
            agree = kw == [sl2.h0_weights, sl2.h1_weights]
            payload = {"mode": "sl2_module", "kostant_pairings": kw,
                       "oracle_pairings": [sl2.h0_weights, sl2.h1_weights], "agree": agree}
            return payload, {"oracle": "Pass" if agree else "Fail"}, not agree
        return {"skipped": "oracle covers lambda = 0, or rank one with f = 1"}, {"oracle": "NotApplicable"}, False

    def report_all(self):
        sections = ["check", "kostant", "group-cohomology", "left-adjoint", "satake", "parameters", "oracle-verify"]
        if self.config.chi0 is not None:
            sections.insert(5, "pseries")
        results = ordered_map(lambda s: (s, self.run_section(s)), sections)
        payload, verdicts, failed, timings = {}, {}, False, {}
        for name, (pl, vd, fl, dt) in results:
            payload[name] = pl
            verdicts.update(vd)
            failed = failed or fl
            timings[name] = dt
        self._section_timings = timings
        return payload, verdicts, failed

    def run_section(self, name):
        start = time.perf_counter()
        payload, verdicts, failed = getattr(self, name.replace("-", "_"))()
        return payload, verdicts, failed, round(time.perf_counter() - start, 6)


def _levi_dict(datum, J, f):
    levi = build_levi(datum, J, f)
    return {
        "J": sorted(j + 1 for j in J),
        "dim_N_alg": levi.dim_N_alg,
        "dim_N0": levi.dim_N0,
        "two_rho_M": list(levi.two_rho_M),
        "central_basis": [list(v) for v in levi.central_basis.vectors],
        "xi": xi_and_hM(datum, J).to_dict(),
    }


def run(config: JobConfig, command: str | None = None, cap_weyl=None, cap_underline=None,
        subsets=None, timings: bool = True):
    """Execute one job; returns (envelope, exit code)."""
    command = command or config.command
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}", "command")
    start = time.perf_counter()
    job = Job(config, cap_weyl, cap_underline, subsets)
    job._section_timings = {}
    payload, verdicts, failed, dt = job.run_section(command)
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
        "config": config.to_dict(),
        "root_datum": datum_summary(job.datum),
        "results": payload,
        "verdicts": dict(sorted(verdicts.items())),
    }
    if timings:
        envelope["timings"] = {"total_seconds": round(time.perf_counter() - start, 6), "sections": job._section_timings or {command: dt}}
    envelope["canonical_hash"] = canonical_hash(envelope)
    return envelope, (2 if failed else 0)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(obj, default=_json_default, sort_keys=True)


def render_text(envelope: dict) -> str:
    rows = ["path\tvalue"]
    for path, value in _flatten(json.loads(canonical_json(envelope))):
        rows.append(f"{path}\t{value}")
    return "\n".join(rows) + "\n"


def render_figures(envelope: dict, outdir: Path):
    from . import plotting

    outdir = Path(outdir)
    written = []
    res = envelope["results"]
    sections = res if envelope["command"] == "report-all" else {envelope["command"]: res}
    for name, payload in sections.items():
        if not isinstance(payload, dict):
            continue
        if payload.get("dims"):
            written.append(plotting.degree_bars(payload["dims"], name, outdir / f"{name}_dims.png"))
        if name == "satake" and "targets" in payload:
            counts = [[t["n"], len(t["constituents"])] for t in payload["targets"]]
            written.append(plotting.degree_bars(counts, "satake targets", outdir / "satake_targets.png", "constituents"))
        if name == "check":
            for c in payload["checks"]:
                if c["name"] == "p_valuation":
                    written.append(plotting.valuation_plot(c["details"]["entries"], c["details"]["p"], outdir / "p_valuation.png"))
        if name == "parameters":
            written.append(plotting.support_plot(payload["supports"], outdir / "parameter_support.png"))
    return written


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def build_parser():
    ap = _Parser(prog="satake-lab", description="Exact mod-p Satake combinatorics and cohomology reports.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", default="-", help="JSON config file, or - for stdin")
    ap.add_argument("--format", choices=("json", "text"), default=None)
    ap.add_argument("--cap-weyl", type=int, default=None)
    ap.add_argument("--cap-underline", type=int, default=None)
    ap.add_argument("--out", default=None, help="write the report here instead of stdout")
    ap.add_argument("--figures", default=None, metavar="DIR", help="also render PNG figures into DIR")
    ap.add_argument("--subsets", default=None, help="JSON list of 1-based J lists for the parameters command")
    ap.add_argument("--no-timings", action="store_true", help="omit the timings field")
    ap.add_argument("--version", action="version", version=f"satake-lab {__version__}")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.config == "-" else Path(args.config).read_text()
        config = parse_config(text)
        subsets = None
        if args.subsets is not None:
            try:
                subsets = json.loads(args.subsets)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid --subsets: {exc.msg}", "subsets") from None
        envelope, code = run(config, args.command, args.cap_weyl, args.cap_underline, subsets, not args.no_timings)
    except (ConfigError, OSError) as exc:
        sys.stderr.write(f"satake-lab: config error: {exc}\n")
        return 1
    except SatakeLabError as exc:
        sys.stderr.write(f"satake-lab: error: {type(exc).__name__}: {exc}\n")
        return 1
    if args.figures:
        names = render_figures(envelope, Path(args.figures))
        sys.stderr.write("".join(f"figure: {Path(args.figures) / n}\n" for n in names))
    fmt = args.format or config.output_format
    out = render_text(envelope) if fmt == "text" else canonical_json(envelope)
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
