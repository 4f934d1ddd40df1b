"""White-noise channel: factor-vs-efficiency curves for each noise level
(panels a-c), plus the bound regions at unit noise occupation (panel d)."""

from .loader import FigureSpec, bound_regions, new_figure, read_csv, save, sweep_curves

COLUMNS = ("model", "quantity", "eta", "nbar", "factor")
_PANELS = (("ce", "assisted"), ("c_lower", "coherent-state bound"), ("q_lower", "coherent information"))


def render(spec: FigureSpec):
    rows = read_csv(spec.data_dir / "fig2.csv", COLUMNS)
    nbars = sorted({r["nbar"] for r in rows})
    fig = new_figure(9.0, 7.0)
    axes = fig.subplots(2, 2).ravel()
    for ax, (quantity, label) in zip(axes[:3], _PANELS):
        for nbar in nbars:
            curves = sweep_curves([r for r in rows if r["nbar"] == nbar])
            xs, ys = curves[quantity]
            ax.plot(xs, ys, lw=1.5, label=f"nbar={nbar:g}")
        ax.set_title(label)
        ax.set_xlabel("quantum efficiency")
        ax.set_ylabel("capacity factor")
        ax.legend(fontsize=7)
    panel_nbar = 1.0 if 1.0 in nbars else nbars[len(nbars) // 2]
    curves = sweep_curves([r for r in rows if r["nbar"] == panel_nbar])
    bound_regions(
        axes[3],
        curves["ce"][0],
        curves["ce"][1],
        curves["c_lower"][1],
        curves["q_lower"][1],
        curves["q_alt"][1],
        spec,
    )
    axes[3].set_title(f"bounds at nbar={panel_nbar:g}")
    fig.suptitle("white-noise channel")
    fig.tight_layout()
    return save(fig, spec)
