"""Report rendering: projector coefficients as delimited files plus figure
output (chord drawings of class representatives and the action matrix)."""

from __future__ import annotations

import csv
import os
from fractions import Fraction

from .bracelets import delta_normalized_row, monomials_of_degree, representative_diagram
from .brauer import BrauerDiagram
from .exactnum import rational_to_str
from .projector import ProjectorForm


def _coefficient_table(form: ProjectorForm):
    rows = []
    for zeta, c in sorted(form.coordinates.terms.items(), key=lambda t: t[0].words()):
        num = " ".join(rational_to_str(x) for x in c.num.coeffs) or "0"
        den = " ".join(rational_to_str(x) for x in c.den.coeffs)
        rows.append((str(zeta), str(c), num, den))
    return rows


def write_coefficients_csv(form: ProjectorForm, path: str):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["monomial", "coefficient", "num_coeffs", "den_coeffs"])
        writer.writerows(_coefficient_table(form))


def write_spectrum_csv(form: ProjectorForm, path: str):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["f", "outer", "inner", "value", "specialized"])
        for e in form.provenance:
            writer.writerow([
                e.f,
                " ".join(map(str, e.skew.outer)) or "-",
                " ".join(map(str, e.skew.inner)) or "-",
                str(e.value),
                "" if e.specialized is None else e.specialized,
            ])


def _draw_diagram(ax, d: BrauerDiagram):
    import matplotlib.patches as mpatches

    n = d.n
    for i in range(n):
        ax.plot([i], [1], "ko", markersize=3)
        ax.plot([i], [0], "ko", markersize=3)
    for a, b in d.pairs:
        if a < n and b < n:  # top arc bulges down
            ax.add_patch(mpatches.Arc(((a + b) / 2, 1), abs(b - a), 0.7, theta1=180, theta2=360))
        elif a >= n and b >= n:  # bottom arc bulges up
            ax.add_patch(mpatches.Arc(((a + b) / 2 - n, 0), abs(b - a), 0.7, theta1=0, theta2=180))
        else:
            ax.plot([a, b - n], [1, 0], "k-", linewidth=1)
    ax.set_xlim(-0.6, n - 0.4)
    ax.set_ylim(-0.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")


def render_projector_figure(form: ProjectorForm, path: str):
    """One chord drawing per class representative, captioned with its exact
    coefficient."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    items = sorted(form.coordinates.terms.items(), key=lambda t: t[0].words())
    cols = 4
    rows = (len(items) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 2.2 * rows))
    axes = [ax for row in (axes if rows > 1 else [axes]) for ax in (row if cols > 1 else [row])]
    for ax in axes[len(items):]:
        ax.axis("off")
    for ax, (zeta, c) in zip(axes, items):
        _draw_diagram(ax, representative_diagram(zeta))
        ax.set_title(f"{zeta}\n{c}", fontsize=8)
    fig.suptitle(f"projector expansion, rank {form.n} ({form.kind})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_action_matrix(n: int, path: str, display_value: Fraction = Fraction(10)):
    """Heatmap of the contraction-sum action matrix in the normalized class
    basis, annotated with exact entries and evaluated at a display value."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    basis = monomials_of_degree(n)
    index = {z: i for i, z in enumerate(basis)}
    size = len(basis)
    grid = [[0.0] * size for _ in range(size)]
    labels = [["" for _ in range(size)] for _ in range(size)]
    for j, zeta in enumerate(basis):
        for xi, poly in delta_normalized_row(zeta):
            i = index[xi]
            grid[i][j] = float(poly.evaluate(display_value))
            labels[i][j] = str(poly)
    fig, ax = plt.subplots(figsize=(1.0 * size + 2, 1.0 * size + 2))
    ax.imshow(grid, cmap="viridis")
    for i in range(size):
        for j in range(size):
            if labels[i][j]:
                ax.text(j, i, labels[i][j], ha="center", va="center", fontsize=6, color="white")
    ax.set_xticks(range(size))
    ax.set_xticklabels([str(z) for z in basis], rotation=90, fontsize=6)
    ax.set_yticks(range(size))
    ax.set_yticklabels([str(z) for z in basis], fontsize=6)
    ax.set_title(f"contraction-sum action on degree-{n} classes")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_report(form: ProjectorForm, out_dir: str) -> list:
    """Write the delimited tables and figures for one projector; returns the
    created file names."""
    os.makedirs(out_dir, exist_ok=True)
    created = []
    for name, fn in (
        ("coefficients.csv", lambda p: write_coefficients_csv(form, p)),
        ("spectrum.csv", lambda p: write_spectrum_csv(form, p)),
        ("diagrams.png", lambda p: render_projector_figure(form, p)),
        ("action_matrix.png", lambda p: render_action_matrix(form.n, p)),
    ):
        path = os.path.join(out_dir, name)
        fn(path)
        created.append(name)
    return created
