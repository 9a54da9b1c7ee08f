"""Exact verification engine for knot-surgered K3 surfaces with free Z/2 x Z/2 quotients."""

__version__ = "0.1.0"
