"""Command line front end: run the certificate suites and print a report.

    python -m pafiber.report_cli verify all --format markdown
    python -m pafiber.report_cli verify table4
    python -m pafiber.report_cli search --budget 19 --threads 8 --emit-strings out.txt
    python -m pafiber.report_cli census
    python -m pafiber.report_cli export-complex spine

Exit codes: 0 when no certificate failed, 1 when one did, 2 for bad
configuration or an unwritable output path, 3 for an internal error.
"""
from __future__ import annotations

import argparse
import json
import platform
import sys
import traceback
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .certificates import FAIL, Certificate

SUITE_ORDER = ("algebra", "lattice", "complexes", "gluing", "chords", "triangulation", "search")
VERIFY_TARGETS = ("all", "lattice", "complexes", "gluing", "chords", "triangulation", "table4")
COMPLEXES = ("pi", "pi-orbifold", "delta", "delta'", "delta-orbifold", "spine")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    suites: tuple = SUITE_ORDER
    grid: int = 256
    tolerance: float = 1e-6
    budget: int = 19
    threads: int = 1
    fmt: str = "json"
    prune: bool = True
    deterministic: bool = False
    emit_strings: str | None = None
    only_table4: bool = False
    extra: dict = field(default_factory=dict)

    def validate(self):
        from .cat1_search import MAX_BUDGET

        unknown = [s for s in self.suites if s not in SUITE_ORDER]
        if unknown:
            raise ConfigError(f"unknown suites {unknown}")
        if not 8 <= self.grid <= 4096:
            raise ConfigError("grid must be between 8 and 4096")
        if not 0 < self.tolerance < 1:
            raise ConfigError("tolerance must lie in (0, 1)")
        if not 1 <= self.budget <= MAX_BUDGET:
            raise ConfigError(f"budget must be between 1 and {MAX_BUDGET}")
        if self.threads < 1:
            raise ConfigError("threads must be positive")
        if self.fmt not in ("json", "markdown"):
            raise ConfigError("format must be json or markdown")
        return self


def run_suite(name: str, cfg: RunConfig) -> list:
    if name == "algebra":
        from .exact_algebra import algebra_certificates
        return algebra_certificates()
    if name == "lattice":
        from .cat1_search.checks import volume_certificates
        from .lattice_torus import lattice_certificates
        return lattice_certificates() + volume_certificates()
    if name == "complexes":
        from .cell_complexes import complexes_certificates
        return complexes_certificates()
    if name == "gluing":
        from .hyperbolic_gluing import gluing_certificates
        return gluing_certificates(only_table4=cfg.only_table4)
    if name == "chords":
        from .chord_geometry import chord_certificates
        return chord_certificates(sign_grid=cfg.grid, tol=cfg.tolerance)
    if name == "triangulation":
        from .cat1_search.checks import group_certificates, triangulation_certificates
        from .cat1_search.suite import catalog_certificates
        return triangulation_certificates() + group_certificates() + catalog_certificates()
    if name == "search":
        return search_suite(cfg)
    raise ConfigError(f"unknown suite {name}")


def search_suite(cfg: RunConfig) -> list:
    from .cat1_search import search
    from .cat1_search.consistency import consistency_certificates
    from .cat1_search.suite import search_certificates

    prune = "table" if cfg.prune else "off"
    result = search(cfg.budget, prune=prune, workers=cfg.threads)
    if cfg.emit_strings:
        write_text(cfg.emit_strings, "".join(
            f"{' '.join(map(str, ids))}\t{base}\t{b}\n" for ids, _, base, b, _ in result.closed_admissible_strings))
    return search_certificates(cfg.budget, cfg.threads, prune=prune, result=result) + consistency_certificates()


def run(cfg: RunConfig) -> list:
    certs = []
    for name in SUITE_ORDER:
        if name in cfg.suites:
            certs.extend(run_suite(name, cfg))
    ids = [c.claim_id for c in certs]
    dup = sorted({i for i in ids if ids.count(i) > 1})
    if dup:
        raise RuntimeError(f"duplicate claim ids {dup}")
    return certs


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, set, frozenset)):
        return [_plain(v) for v in (sorted(x, key=str) if isinstance(x, (set, frozenset)) else x)]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def report_dict(certs, cfg: RunConfig) -> dict:
    meta = {
        "tool": "pafiber",
        "version": __version__,
        "suites": [s for s in SUITE_ORDER if s in cfg.suites],
        "config": {"grid": cfg.grid, "tolerance": cfg.tolerance, "budget": cfg.budget,
                   "threads": cfg.threads, "prune": cfg.prune},
        "python": "" if cfg.deterministic else platform.python_version(),
        "counts": {s: sum(1 for c in certs if c.status == s) for s in ("PASS", "FAIL", "INFO")},
    }
    return {"run_meta": meta,
            "certificates": [_plain(c.to_dict(cfg.deterministic)) for c in certs]}


def render_json(certs, cfg: RunConfig) -> str:
    return json.dumps(report_dict(certs, cfg), indent=2, sort_keys=True) + "\n"


def render_markdown(certs, cfg: RunConfig) -> str:
    rep = report_dict(certs, cfg)
    counts = rep["run_meta"]["counts"]
    lines = ["# Certificate report", "",
             f"{counts['PASS']} passed, {counts['FAIL']} failed, {counts['INFO']} informational.", ""]
    failed = [c for c in certs if c.status == FAIL]
    if failed:
        lines += ["## Failures", ""]
        for c in failed:
            lines.append(f"- **{c.claim_id}**: {c.anchor}")
            lines.append(f"  `{json.dumps(_plain(c.witness), sort_keys=True)[:400]}`")
        lines.append("")
    groups = {}
    for c in certs:
        groups.setdefault(c.claim_id.split(".")[0], []).append(c)
    for g, cs in groups.items():
        lines += [f"## {g}", "", "| claim | status | anchor |", "|---|---|---|"]
        lines += [f"| {c.claim_id} | {c.status} | {c.anchor} |" for c in cs]
        lines.append("")
    return "\n".join(lines)


def write_text(path, text: str):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc


def census_report() -> dict:
    from .cell_complexes import build_delta, build_pi, build_spine

    out = {}
    for name, cx in (("pi", build_pi("fiber")), ("pi-orbifold", build_pi("orbifold")),
                     ("delta", build_delta("fiber")), ("delta'", build_delta("fiber", "delta'")),
                     ("delta-orbifold", build_delta("orbifold")), ("spine", build_spine())):
        out[name] = {"census": list(cx.census()), "euler_without_vertices": cx.euler(skip_vertices=True)}
    return out


def export_complex(name: str) -> str:
    from .cell_complexes import build_delta, build_pi, build_spine

    builders = {"pi": lambda: build_pi("fiber"), "pi-orbifold": lambda: build_pi("orbifold"),
                "delta": lambda: build_delta("fiber"), "delta'": lambda: build_delta("fiber", "delta'"),
                "delta-orbifold": lambda: build_delta("orbifold"), "spine": build_spine}
    if name not in builders:
        raise ConfigError(f"unknown complex {name!r}; choose from {', '.join(COMPLEXES)}")
    return builders[name]().export_incidence()


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", default="json", choices=("json", "markdown"))
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("--deterministic", action="store_true", help="zero timings and host details")
    common.add_argument("--budget", type=int, default=19, help="search budget in tenths of pi")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--grid", type=int, default=256, help="sign-check grid per axis")
    common.add_argument("--tolerance", type=float, default=1e-6)
    common.add_argument("--no-prune", action="store_true", help="search without the return-length table")
    common.add_argument("--emit-strings", default=None, help="dump closed admissible strings to a file")

    p = _Parser(prog="pafiber", description="Verify the fibration certificates.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("target", choices=VERIFY_TARGETS)
    sub.add_parser("search", parents=[common])
    sub.add_parser("census", parents=[common])
    e = sub.add_parser("export-complex", parents=[common])
    e.add_argument("name", choices=COMPLEXES)
    return p


def config_from_args(args) -> RunConfig:
    if args.command == "verify":
        target = args.target
        suites = {"all": SUITE_ORDER, "table4": ("gluing",)}.get(target, (target,))
    else:
        suites = ("search",)
    return RunConfig(suites=tuple(suites), grid=args.grid, tolerance=args.tolerance, budget=args.budget,
                     threads=args.threads, fmt=args.fmt, prune=not args.no_prune,
                     deterministic=args.deterministic, emit_strings=args.emit_strings,
                     only_table4=getattr(args, "target", None) == "table4").validate()


def _emit(text: str, path):
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "census":
            _emit(json.dumps(census_report(), indent=2, sort_keys=True) + "\n", args.output)
            return 0
        if args.command == "export-complex":
            _emit(export_complex(args.name), args.output)
            return 0
        cfg = config_from_args(args)
        certs = run(cfg)
        text = render_json(certs, cfg) if cfg.fmt == "json" else render_markdown(certs, cfg)
        _emit(text, args.output)
        return 1 if any(c.status == FAIL for c in certs) else 0
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
