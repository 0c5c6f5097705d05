"""Figure rendering for the report subcommands.

Every renderer takes the already-computed report structure and writes PNG
files into a directory, returning the paths.  Figures are an opt-in side
channel: the delimited outputs stay the primary, byte-stable artifacts.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def _save(fig, outdir: str, name: str) -> str:
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, name)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_equidist(report: dict, outdir: str) -> list[str]:
    paths = []
    grid = report["grid"]
    xs = np.linspace(-1, 1, 400)
    semicircle = 2 / np.pi * np.sqrt(1 - xs**2)
    for summary in report["summaries"]:
        nu = summary["nu"]
        rows = [r for r in report["rows"] if r["nu"] == nu]
        fig, ax = plt.subplots(figsize=(6, 4))
        lefts = [float(r["alpha"]) for r in rows]
        heights = [r["ratio"] * grid / 2 for r in rows]  # ratio / cell width
        ax.bar(lefts, heights, width=2 / grid, align="edge", alpha=0.6,
               label=f"normalized $\\mu$ at $\\nu$={nu}")
        ax.plot(xs, semicircle, "k-", lw=1.5, label="semicircle density")
        ax.set_xlabel("x")
        ax.set_ylabel("density")
        ax.set_title(
            f"q={report['q']}, nu={nu}: sup discrepancy "
            f"{summary['discrepancy']:.4f}"
        )
        ax.legend()
        paths.append(_save(fig, outdir, f"equidist_q{report['q']}_nu{nu}.png"))
    if len(report["summaries"]) > 1:
        fig, ax = plt.subplots(figsize=(6, 4))
        nus = [s["nu"] for s in report["summaries"]]
        ds = [s["discrepancy"] for s in report["summaries"]]
        ax.plot(nus, ds, "o-")
        ax.set_xlabel("nu")
        ax.set_ylabel("sup cell discrepancy")
        ax.set_yscale("log")
        ax.set_title(f"q={report['q']}: discrepancy decay")
        paths.append(_save(fig, outdir, f"equidist_q{report['q']}_trend.png"))
    return paths


def render_bounds(report: dict, outdir: str) -> list[str]:
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = sorted({r["n"] for r in report["rows"]})
    for n in ns:
        rows = [r for r in report["rows"] if r["n"] == n]
        ax.plot(
            [r["nu"] for r in rows],
            [max(r["r_chebyshev"], 1e-300) for r in rows],
            "o-",
            label=f"U_{n}",
        )
    ax.set_xlabel("nu")
    ax.set_ylabel(r"$|\langle\mu_{q^\nu},U_n\rangle|\,q^{-\nu/2}$")
    ax.set_yscale("log")
    ax.set_title(f"q={report['q']}: normalized Chebyshev moments")
    ax.legend()
    return [_save(fig, outdir, f"bounds_q{report['q']}.png")]


def render_moments(rows: list[dict], q: int, k: int, outdir: str) -> list[str]:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r["nu"] for r in rows], [r["normalized"] for r in rows], "o-")
    ax.set_xlabel("nu")
    ax.set_ylabel(r"$|A_{k,q}(\nu)|\,q^{-\nu/2}$")
    ax.set_title(f"k={k}, q={q}: normalized moment magnitudes")
    return [_save(fig, outdir, f"moments_k{k}_q{q}.png")]


def render_mass(rows: list[dict], outdir: str) -> list[str]:
    fig, ax = plt.subplots(figsize=(6, 4))
    ms = [r["m"] for r in rows]
    ax.plot(ms, [float(r["mass"]) for r in rows], ".", ms=2)
    ax.set_xlabel("m")
    ax.set_ylabel(r"$\langle\mu_m,1\rangle$")
    ax.set_title("total Hurwitz mass vs the divisor expression (overlaid)")
    ax.plot(ms, [float(r["divisor_side"]) for r in rows], "k.", ms=1)
    return [_save(fig, outdir, "mass_check.png")]
