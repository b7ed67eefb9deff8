"""RDFC toolkit - rate-region calculator and channel-synthesis simulator."""

__version__ = "0.1.0"
