"""Command-line front end: build, query, count, cut, verify, bench."""
from .main import build_parser, main

__all__ = ['build_parser', 'main']
