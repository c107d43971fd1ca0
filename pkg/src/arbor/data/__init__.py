"""Packaged graph files."""
