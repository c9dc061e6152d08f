"""Containers, classic algorithms, a headless 2D game kernel, pixel filters and small demo engines."""

__version__ = "0.1.0"
