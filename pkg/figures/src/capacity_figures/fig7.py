"""Mutual information vs correlation-eigenvalue splitting at fixed photon
number: every curve peaks at zero splitting (squeezed inputs never win)."""

from .loader import FigureDataError, FigureSpec, new_figure, read_csv, save

COLUMNS = ("lambda_diff", "mutual_info_bits")


def render(spec: FigureSpec):
    paths = sorted(spec.data_dir.glob("fig7_sum*.csv"))
    if not paths:
        raise FigureDataError(f"no fig7_sum*.csv files in {spec.data_dir}")
    fig = new_figure()
    ax = fig.gca()
    for path in paths:
        rows = read_csv(path, COLUMNS)
        xs = [r["lambda_diff"] for r in rows]
        ys = [r["mutual_info_bits"] for r in rows]
        label = path.stem.replace("fig7_sum", "eigenvalue sum ")
        ax.plot(xs, ys, lw=1.5, label=label)
    ax.set_xlabel("eigenvalue difference")
    ax.set_ylabel("mutual information [bits]")
    ax.set_title("no gain from squeezed inputs")
    ax.legend(fontsize=8)
    return save(fig, spec)
