"""Shared dispatch used by both front ends (CLI and HTTP service)."""

from __future__ import annotations

from . import abaci, expansions, lattice_paths
from .partitions import Partition, SkewShape
from .polynomials import IntPolynomial, m_poly, word_weight

SCHUR_METHODS = ("bialternant", "jt-h", "jt-e", "tableaux", "abacus")


def schur_by_method(lam: Partition, nvars: int, method: str) -> IntPolynomial:
    """One Schur polynomial, five independent constructions."""
    if method == "bialternant":
        return abaci.schur_bialternant(lam, nvars)
    if method == "jt-h":
        return lattice_paths.jacobi_trudi_h(lam, nvars)
    if method == "jt-e":
        return lattice_paths.jacobi_trudi_e(lam, nvars)
    if method == "tableaux":
        return lattice_paths.skew_schur(SkewShape(lam, Partition()), nvars, "tableaux")
    if method == "abacus":
        return abaci.schur_via_abaci(lam, nvars)
    raise ValueError(f"unknown method {method!r}")


def expand_to_schur(source: str, mu: Partition) -> dict[Partition, int]:
    """Schur coordinates of a basis element of the given family."""
    if source == "h":
        return expansions.h_in_s(mu)
    if source == "e":
        return expansions.e_in_s(mu)
    if source == "s":
        return {mu: 1}
    if source == "m":
        nvars = max(mu.size(), 1)
        return expansions.to_schur_basis(m_poly(mu, nvars), nvars)
    raise ValueError(f"unknown source basis {source!r}")


def paths_report(
    model: str,
    lam: Partition,
    nvars: int,
    inner: Partition | None = None,
    limit: int = 3,
) -> tuple[int, list[str]]:
    """Non-crossing path systems of one model, rendered as text lines."""
    if model == "h":
        sources, sinks = lattice_paths.h_model_endpoints(lam, nvars, inner)
        grid = lattice_paths.h_model_grid(nvars, max(x for x, _ in sinks))
        tableau_model = "skew" if inner else "h"
    elif model == "e":
        if inner:
            raise ValueError("inner shapes are only supported for the h model")
        sources, sinks = lattice_paths.e_model_endpoints(lam, nvars)
        grid = lattice_paths.e_model_grid(nvars, max(x for x, _ in sinks))
        tableau_model = "e"
    elif model == "giambelli":
        if inner:
            raise ValueError("inner shapes are only supported for the h model")
        sources, sinks = lattice_paths.giambelli_endpoints(lam, nvars)
        if not sources:
            raise ValueError("empty shape has no diagonal hooks to draw")
        grid = lattice_paths.giambelli_grid(
            nvars, min(x for x, _ in sources), max(x for x, _ in sinks)
        )
        tableau_model = "giambelli"
    else:
        raise ValueError(f"unknown model {model!r}")
    systems = lattice_paths.noncrossing_systems(grid, sources, sinks)
    lines = [
        f"model {model}",
        f"shape {lam}" + (f"/{inner}" if inner else ""),
        f"vars {nvars}",
        f"noncrossing systems: {len(systems)}",
    ]
    for idx, system in enumerate(systems[:limit] if limit >= 0 else systems, start=1):
        t = lattice_paths.paths_to_tableau(system, tableau_model)
        lines.append("")
        lines.append(f"system {idx}")
        lines += lattice_paths.render_system(grid, system).splitlines()
        lines.append("tableau:")
        lines += str(t).splitlines() if t.rows else ["(empty)"]
        lines.append(f"weight {word_weight(t.reading_word(), nvars)}")
    return len(systems), lines
