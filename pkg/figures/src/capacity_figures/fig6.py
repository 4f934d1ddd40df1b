"""Dephasing-channel capacity factors vs quantum efficiency, with the
allowed classical and quantum regions shaded."""

from .loader import FigureSpec, bound_regions, new_figure, read_csv, save, sweep_curves

COLUMNS = ("model", "quantity", "eta", "factor")


def render(spec: FigureSpec):
    rows = read_csv(spec.data_dir / "fig6.csv", COLUMNS)
    curves = sweep_curves(rows)
    fig = new_figure()
    ax = fig.gca()
    bound_regions(
        ax,
        curves["ce"][0],
        curves["ce"][1],
        curves["c_lower"][1],
        curves["q_lower"][1],
        curves["q_alt"][1],
        spec,
    )
    ax.set_title("dephasing channel")
    return save(fig, spec)
