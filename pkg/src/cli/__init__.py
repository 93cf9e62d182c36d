from .expressions import parse_pair, parse_pair_or_family, parse_sequence, parse_series
from .main import build_parser, main

__all__ = ["build_parser", "main", "parse_pair", "parse_pair_or_family", "parse_sequence", "parse_series"]
