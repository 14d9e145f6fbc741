"""Exact regularized summation."""
