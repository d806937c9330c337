"""Test suite package for the matroid frontier toolkit."""
