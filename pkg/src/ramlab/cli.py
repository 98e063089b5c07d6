"""Command-line pipeline: enumerations, model computations, analyses, figures.

Every run writes its outputs plus a manifest JSON recording the config,
versions, wall time and sha256 checksums.  CSV/JSON outputs are
byte-deterministic for a fixed config, independent of the worker count.

Exit codes: 0 success, 2 config error, 3 domain error, 4 I/O error,
5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .cubicfields import MIN_X as CUBIC_MIN_X
from .cubicfields import cubic_field_batches
from .densities import FamilySpec, loglog_mean
from .intsieve import Histogram, omega_histogram, omega_table
from .model import BernoulliFamily, exact_moments, sample, standardized_moments
from .quadfields import fundamental_batches
from .stats import (StandardizedSample, divisibility_table, ecdf_points,
                    empirical_field_density, field_moment_report, ks_distance,
                    truncated_omega, truncated_raw_moment)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_IO = 4
EXIT_INTERNAL = 5

MAX_X = 10**9
QUAD_MAGIC = b"RAMLABQ1"
CUBIC_MAGIC = b"RAMLABC1"
DIVISIBILITY_QS = (2, 3, 5, 7, 6, 30)


@dataclass
class RunConfig:
    subcommand: str
    x: int | None = None
    z: int | None = None
    degree: int | None = None
    k: int | None = None
    n: int | None = None
    seed: int | None = None
    workers: int = 1
    only: str | None = None
    which: str | None = None
    input: str | None = None
    outdir: str = "."
    formats: tuple[str, ...] = ("csv", "json")

    def validate(self) -> None:
        if self.x is not None and self.x > MAX_X:
            raise ValueError(f"X = {self.x} exceeds the guard {MAX_X}")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if not os.path.isdir(self.outdir):
            os.makedirs(self.outdir, exist_ok=True)
        if not os.access(self.outdir, os.W_OK):
            raise OSError(f"output directory not writable: {self.outdir}")


class _Run:
    """Collects output files and writes the closing manifest."""

    def __init__(self, config: RunConfig, name: str):
        self.config = config
        self.name = name
        self.outputs: list[str] = []
        self.extra: dict = {}
        self.t0 = time.time()

    def path(self, suffix: str) -> str:
        return os.path.join(self.config.outdir, f"{self.name}{suffix}")

    def write_text(self, suffix: str, text: str) -> str:
        p = self.path(suffix)
        with open(p, "w") as fh:
            fh.write(text)
        self.outputs.append(p)
        return p

    def write_json(self, suffix: str, obj) -> str:
        return self.write_text(suffix, json.dumps(obj, indent=2, sort_keys=True) + "\n")

    def finish(self) -> None:
        manifest = {
            "subcommand": self.config.subcommand,
            "config": {k: v for k, v in asdict(self.config).items() if v is not None},
            "versions": {
                "ramlab": __version__,
                "python": sys.version.split()[0],
                "numpy": np.__version__,
            },
            "wall_time_s": round(time.time() - self.t0, 3),
            "outputs": [
                {"path": os.path.basename(p), "bytes": os.path.getsize(p),
                 "sha256": _sha256(p)}
                for p in self.outputs
            ],
        }
        manifest.update(self.extra)
        p = self.path(".manifest.json")
        with open(p, "w") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def _histogram_csv(h: Histogram) -> str:
    lines = ["omega,count"]
    lines += [f"{w},{c}" for w, c in h.as_sorted_items()]
    return "\n".join(lines) + "\n"


def _bar_chart_svg(h: Histogram, title: str, ylabel: str) -> str:
    """Minimal static SVG bar chart; the CSV is the authoritative artifact."""
    items = h.as_sorted_items()
    width, height, m_left, m_bottom, m_top = 640, 420, 60, 50, 30
    plot_w, plot_h = width - m_left - 20, height - m_bottom - m_top
    peak = max((c for _, c in items), default=1)
    bar_w = plot_w / max(len(items), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f"<title>{title}</title>",
        "<desc>",
        "omega,count",
        *[f"{w},{c}" for w, c in items],
        "</desc>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{m_left}" y1="{height - m_bottom}" x2="{width - 20}" '
        f'y2="{height - m_bottom}" stroke="black"/>',
        f'<line x1="{m_left}" y1="{m_top}" x2="{m_left}" y2="{height - m_bottom}" '
        'stroke="black"/>',
    ]
    for i, (w, c) in enumerate(items):
        bh = plot_h * c / peak
        x = m_left + i * bar_w + bar_w * 0.1
        y = height - m_bottom - bh
        parts.append(f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar_w * 0.8:.1f}" '
                     f'height="{bh:.1f}" fill="#7fa8d9" stroke="#2a4d7f"/>')
        parts.append(f'<text x="{x + bar_w * 0.4:.1f}" y="{height - m_bottom + 16}" '
                     f'font-size="12" text-anchor="middle">{w}</text>')
    parts.append(f'<text x="{m_left + plot_w / 2:.0f}" y="{height - 12}" font-size="13" '
                 'text-anchor="middle">Number of Prime Factors</text>')
    parts.append(f'<text x="16" y="{m_top + plot_h / 2:.0f}" font-size="13" '
                 f'text-anchor="middle" transform="rotate(-90 16 {m_top + plot_h / 2:.0f})">'
                 f"{ylabel}</text>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_sieve_integers(cfg: RunConfig) -> None:
    run = _Run(cfg, f"sieve-integers-x{cfg.x}")
    h = omega_histogram(cfg.x, workers=cfg.workers)
    run.write_text(".csv", _histogram_csv(h))
    run.extra["total"] = h.total
    run.finish()


def _cmd_enum_quadratic(cfg: RunConfig) -> None:
    run = _Run(cfg, f"enum-quadratic-x{cfg.x}")
    total = 0
    hist = np.zeros(16, dtype=np.int64)
    csv_path = run.path(".csv") if "csv" in cfg.formats else None
    bin_path = run.path(".disc.bin") if "binary" in cfg.formats else None
    csv_fh = open(csv_path, "w") if csv_path else None
    bin_fh = open(bin_path, "wb") if bin_path else None
    try:
        if csv_fh:
            csv_fh.write("disc,omega\n")
        if bin_fh:
            bin_fh.write(QUAD_MAGIC)
        for disc, om in fundamental_batches(cfg.x):
            if not len(disc):
                continue
            total += len(disc)
            hist += np.bincount(om, minlength=16)
            if csv_fh:
                csv_fh.write("\n".join(f"{d},{w}" for d, w in zip(disc.tolist(), om.tolist())))
                csv_fh.write("\n")
            if bin_fh:
                bin_fh.write(disc.astype("<i8").tobytes())
    finally:
        if csv_fh:
            csv_fh.close()
        if bin_fh:
            bin_fh.close()
    if csv_path:
        run.outputs.append(csv_path)
    if bin_path:
        run.outputs.append(bin_path)
    run.write_text(".hist.csv", _histogram_csv(Histogram.from_counts(hist)))
    run.extra["total"] = total
    run.extra["density_estimate"] = empirical_field_density(total, cfg.x)
    run.finish()


def _cmd_enum_cubic(cfg: RunConfig) -> None:
    run = _Run(cfg, f"enum-cubic-x{cfg.x}" + (f"-{cfg.only}" if cfg.only else ""))
    total = 0
    hist = np.zeros(16, dtype=np.int64)
    csv_path = run.path(".csv") if "csv" in cfg.formats else None
    bin_path = run.path(".disc.bin") if "binary" in cfg.formats else None
    csv_fh = open(csv_path, "w") if csv_path else None
    bin_fh = open(bin_path, "wb") if bin_path else None
    try:
        if csv_fh:
            csv_fh.write("disc,omega,cyclic\n")
        if bin_fh:
            bin_fh.write(CUBIC_MAGIC)
        if cfg.x >= CUBIC_MIN_X:  # below 23 there are no cubic fields: empty output
            for disc, om, cy in cubic_field_batches(cfg.x, workers=cfg.workers,
                                                    only=cfg.only):
                if not len(disc):
                    continue
                total += len(disc)
                hist += np.bincount(om, minlength=16)
                if csv_fh:
                    csv_fh.write("\n".join(
                        f"{d},{w},{int(k)}" for d, w, k in
                        zip(disc.tolist(), om.tolist(), cy.tolist())))
                    csv_fh.write("\n")
                if bin_fh:
                    bin_fh.write(disc.astype("<i8").tobytes())
    finally:
        if csv_fh:
            csv_fh.close()
        if bin_fh:
            bin_fh.close()
    if csv_path:
        run.outputs.append(csv_path)
    if bin_path:
        run.outputs.append(bin_path)
    run.write_text(".hist.csv", _histogram_csv(Histogram.from_counts(hist)))
    run.extra["total"] = total
    run.extra["density_estimate"] = empirical_field_density(total, cfg.x)
    run.finish()


def _cmd_model_moments(cfg: RunConfig) -> None:
    run = _Run(cfg, f"model-moments-d{cfg.degree}-z{cfg.z}-k{cfg.k}")
    fam = BernoulliFamily.create(FamilySpec.for_degree(cfg.degree), cfg.z)
    if cfg.x:
        report = standardized_moments(fam, float(cfg.x), cfg.k)
    else:
        report = exact_moments(fam, cfg.k)
    run.write_json(".json", report.to_json_dict())
    run.finish()


def _cmd_model_sample(cfg: RunConfig) -> None:
    run = _Run(cfg, f"model-sample-d{cfg.degree}-z{cfg.z}-n{cfg.n}-s{cfg.seed}")
    fam = BernoulliFamily.create(FamilySpec.for_degree(cfg.degree), cfg.z)
    h = sample(fam, cfg.n, cfg.seed, workers=cfg.workers)
    run.write_json(".json", {
        "bins": {str(k): v for k, v in h.as_sorted_items()},
        "total": h.total,
        "label": h.label,
    })
    run.finish()


def _read_records(path: str) -> tuple[np.ndarray, np.ndarray | None]:
    """(disc, omega-or-None) from a records CSV or a magic-tagged binary dump."""
    with open(path, "rb") as fh:
        head = fh.read(8)
    if head in (QUAD_MAGIC, CUBIC_MAGIC):
        raw = np.fromfile(path, dtype="<i8", offset=8)
        return raw.astype(np.int64), None
    data = np.genfromtxt(path, delimiter=",", names=True, dtype=np.int64)
    disc = np.atleast_1d(data["disc"]).astype(np.int64)
    omega = np.atleast_1d(data["omega"]).astype(np.int64) if "omega" in (data.dtype.names or ()) else None
    return disc, omega


def _cmd_analyze(cfg: RunConfig) -> None:
    run = _Run(cfg, f"analyze-x{cfg.x}" + (f"-z{cfg.z}" if cfg.z else ""))
    disc, omega = _read_records(cfg.input)
    if omega is None:
        table = omega_table(int(np.abs(disc).max(initial=2)))
        omega = table[np.abs(disc)].astype(np.int64)
    full = Histogram.from_counts(np.bincount(omega), label=f"omega, X={cfg.x}")
    k_max = cfg.k or 6
    degree = cfg.degree or 3
    spec = FamilySpec.for_degree(degree)
    report = field_moment_report(full, X=float(cfg.x), Z=cfg.z, k_max=k_max)
    samp = StandardizedSample(X=float(cfg.x), values=full)
    result = {
        "moments": report.to_json_dict(),
        "ks_distance": ks_distance(samp),
        "total": full.total,
        "density_estimate": empirical_field_density(full.total, cfg.x),
        "divisibility": {},
    }
    table = divisibility_table([disc], spec, DIVISIBILITY_QS)
    result["divisibility"] = {str(q): row for q, row in table.items()}
    if cfg.z:
        fam = BernoulliFamily.create(spec, cfg.z)
        trunc = truncated_omega([disc], cfg.z)
        result["truncated"] = {
            "Z": cfg.z,
            "histogram": {str(k): v for k, v in trunc.as_sorted_items()},
            "raw_moments": [
                dict(zip(("fields", "model"),
                         truncated_raw_moment([disc], cfg.z, k, fam)))
                for k in range(1, k_max + 1)
            ],
        }
    run.write_json(".json", result)
    ecdf = ecdf_points(samp)
    rows = ["z,ecdf,phi"] + [f"{z!r},{f!r},{phi!r}" for z, f, phi in ecdf]
    run.write_text(".ecdf.csv", "\n".join(rows) + "\n")
    run.finish()


def _cmd_figure(cfg: RunConfig) -> None:
    run = _Run(cfg, f"figure-{cfg.which}-x{cfg.x}")
    if cfg.which == "integers":
        h = omega_histogram(cfg.x, workers=cfg.workers)
        ylabel = "Integers"
    else:
        h = Histogram()
        if cfg.x >= CUBIC_MIN_X:
            counts = np.zeros(16, dtype=np.int64)
            for _, om, _ in cubic_field_batches(cfg.x, workers=cfg.workers):
                counts += np.bincount(om, minlength=16)
            h = Histogram.from_counts(counts)
        ylabel = "Cubic Fields"
    run.write_text(".csv", _histogram_csv(h))
    run.write_text(".svg", _bar_chart_svg(
        h, title=f"{ylabel}: number of prime factors, X = {cfg.x}", ylabel=ylabel))
    run.extra["total"] = h.total
    run.finish()


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramlab",
        description="Ramified-prime statistics: sieves, field enumeration, "
                    "Bernoulli models, and figure data.")
    ap.add_argument("--outdir", default=os.environ.get("RAMLAB_OUTDIR", "."),
                    help="output directory (or set RAMLAB_OUTDIR)")
    ap.add_argument("--workers", type=int, default=1, help="worker process count")
    ap.add_argument("-v", "--verbose", action="store_true",
                    help="progress logging to stderr")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("sieve-integers", help="omega histogram of 2..X")
    p.add_argument("--x", type=int, required=True)

    p = sub.add_parser("enum-quadratic", help="fundamental discriminants |D| <= X")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--format", choices=("csv", "binary", "both"), default="csv")

    p = sub.add_parser("enum-cubic", help="cubic fields with |disc| <= X")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--only", choices=("s3", "cyclic"), default=None)
    p.add_argument("--format", choices=("csv", "binary", "both"), default="csv")

    p = sub.add_parser("model-moments", help="exact moments of the Bernoulli model")
    p.add_argument("--d", type=int, required=True, choices=(2, 3, 4, 5))
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, default=None,
                   help="also standardize at loglog X")

    p = sub.add_parser("model-sample", help="seeded Monte Carlo of the model")
    p.add_argument("--d", type=int, required=True, choices=(2, 3, 4, 5))
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("analyze", help="statistics over an enumeration dump")
    p.add_argument("--input", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--z", type=int, default=None)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--d", type=int, default=3, choices=(2, 3, 4, 5))

    p = sub.add_parser("figure", help="paper-figure histogram data (CSV + SVG)")
    p.add_argument("--which", choices=("cubic", "integers"), required=True)
    p.add_argument("--x", type=int, required=True)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = getattr(args, "format", "csv")
    formats = {"csv": ("csv",), "binary": ("binary",), "both": ("csv", "binary")}[fmt]
    return RunConfig(
        subcommand=args.subcommand,
        x=getattr(args, "x", None),
        z=getattr(args, "z", None),
        degree=getattr(args, "d", None),
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        seed=getattr(args, "seed", None),
        workers=args.workers,
        only=getattr(args, "only", None),
        which=getattr(args, "which", None),
        input=getattr(args, "input", None),
        outdir=args.outdir,
        formats=formats,
    )


_DISPATCH = {
    "sieve-integers": _cmd_sieve_integers,
    "enum-quadratic": _cmd_enum_quadratic,
    "enum-cubic": _cmd_enum_cubic,
    "model-moments": _cmd_model_moments,
    "model-sample": _cmd_model_sample,
    "analyze": _cmd_analyze,
    "figure": _cmd_figure,
}


def run(config: RunConfig) -> int:
    """Execute one subcommand; returns the process exit status."""
    try:
        config.validate()
        _DISPATCH[config.subcommand](config)
        return EXIT_OK
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                            format="%(asctime)s %(name)s: %(message)s")
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
