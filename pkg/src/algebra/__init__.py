"""Exact Riordan-group algebra: coefficients, series, pairs, matrices and transforms."""
