"""Static figure rendering for sweep CSV outputs."""

from .figures import PRESETS, FigureSpec, build_figure, render
from .io import SchemaError, Table, read_table, require_columns

__version__ = "0.1.0"

__all__ = [
    "FigureSpec",
    "PRESETS",
    "SchemaError",
    "Table",
    "build_figure",
    "read_table",
    "render",
    "require_columns",
]
