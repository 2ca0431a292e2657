"""Exact symbolic models of involutive cobordism rings and group laws."""

__version__ = "0.1.0"
