"""Batch rendering of simulator CSV output to publication-style figures."""

from .render import KINDS, PlotJob, SchemaError, main, render

__all__ = ["KINDS", "PlotJob", "SchemaError", "main", "render"]

__version__ = "0.1.0"
