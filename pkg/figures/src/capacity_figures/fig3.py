"""White-noise occupation profiles: optimal photon number per mode vs
scaled frequency for the three quantities (the classical-rate curve stops
at its cutoff)."""

from .loader import FigureSpec, new_figure, read_csv, save

COLUMNS = ("x", "n", "clamped")
_CURVES = (("ce", "assisted", "-"), ("c_lower", "coherent-state code", ":"), ("q_lower", "quantum code", "--"))


def render(spec: FigureSpec):
    fig = new_figure()
    ax = fig.gca()
    for quantity, label, style in _CURVES:
        rows = read_csv(spec.data_dir / f"fig3_{quantity}.csv", COLUMNS)
        xs = [r["x"] for r in rows]
        ns = [r["n"] for r in rows]
        ax.plot(xs, ns, style, lw=1.5, label=label)
    ax.set_xlabel("frequency / water-filling scale")
    ax.set_ylabel("mode occupation")
    ax.set_title("white-noise channel: optimal spectra")
    ax.set_ylim(bottom=0.0)
    ax.legend(fontsize=8)
    return save(fig, spec)
