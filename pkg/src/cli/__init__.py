"""
maxwist command-line interface
"""

from .maxwist_cli import build_parser, main

__all__ = ['build_parser', 'main']
