"""Logging and error types shared by all sub-packages."""
