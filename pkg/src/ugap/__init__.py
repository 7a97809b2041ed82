"""Beveridge-curve estimation and efficient-unemployment-gap toolkit."""

__version__ = "0.1.0"
