"""Version information for `sasakijoin`."""

__version__ = "0.3.0"
