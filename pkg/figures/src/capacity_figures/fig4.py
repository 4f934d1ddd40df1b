"""Thermal channel: factor-vs-efficiency curves for each bath ratio
(panels a-c), plus the bound regions at the first ratio (panel d)."""

from .loader import FigureSpec, bound_regions, new_figure, read_csv, save, sweep_curves

COLUMNS = ("model", "quantity", "eta", "rho_t", "factor")
_PANELS = (("ce", "assisted"), ("c_lower", "coherent-state bound"), ("q_lower", "coherent information"))


def render(spec: FigureSpec):
    rows = read_csv(spec.data_dir / "fig4.csv", COLUMNS)
    rhos = sorted({r["rho_t"] for r in rows})
    fig = new_figure(9.0, 7.0)
    axes = fig.subplots(2, 2).ravel()
    for ax, (quantity, label) in zip(axes[:3], _PANELS):
        for rho in rhos:
            curves = sweep_curves([r for r in rows if r["rho_t"] == rho])
            xs, ys = curves[quantity]
            ax.plot(xs, ys, lw=1.5, label=f"R_T/R_C={rho:g}")
        ax.set_title(label)
        ax.set_xlabel("quantum efficiency")
        ax.set_ylabel("capacity factor")
        ax.legend(fontsize=7)
    curves = sweep_curves([r for r in rows if r["rho_t"] == rhos[0]])
    bound_regions(
        axes[3],
        curves["ce"][0],
        curves["ce"][1],
        curves["c_lower"][1],
        curves["q_lower"][1],
        curves["q_alt"][1],
        spec,
    )
    axes[3].set_title(f"bounds at R_T/R_C={rhos[0]:g}")
    fig.suptitle("thermal channel")
    fig.tight_layout()
    return save(fig, spec)
