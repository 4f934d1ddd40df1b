"""Lossy-channel capacity factors vs quantum efficiency, with the allowed
classical and quantum regions shaded."""

from .loader import FigureSpec, bound_regions, new_figure, read_csv, save, sweep_curves

COLUMNS = ("model", "quantity", "eta", "factor")


def render(spec: FigureSpec):
    rows = read_csv(spec.data_dir / "fig1.csv", COLUMNS)
    curves = sweep_curves(rows)
    etas = curves["ce"][0]
    fig = new_figure()
    ax = fig.gca()
    bound_regions(
        ax,
        etas,
        curves["ce"][1],
        curves["c_lower"][1],
        curves["q_lower"][1],
        curves["q_alt"][1],
        spec,
    )
    ax.set_title("lossy channel")
    return save(fig, spec)
