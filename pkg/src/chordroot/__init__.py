"""Chord segmentation and root analysis for symbolic music scores."""

__version__ = "0.1.0"
