"""Figure scripts for broadband channel capacity data.

Each figure module exposes ``render(spec) -> Path``; all numbers drawn
come from CSV files written by the ``broadband-capacity`` CLI.
"""

from . import fig1, fig2, fig3, fig4, fig5, fig6, fig7
from .loader import FigureDataError, FigureSpec

RENDERERS = {
    "fig1": fig1.render,
    "fig2": fig2.render,
    "fig3": fig3.render,
    "fig4": fig4.render,
    "fig5": fig5.render,
    "fig6": fig6.render,
    "fig7": fig7.render,
}

__all__ = ["FigureDataError", "FigureSpec", "RENDERERS"]
