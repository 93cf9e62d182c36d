"""OEIS b-file fixtures and optional network fetch."""
from .bfile import BFile, OEISClient, oeis_load, parse_bfile

__all__ = ["BFile", "OEISClient", "oeis_load", "parse_bfile"]
