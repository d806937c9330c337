"""Matroid representations, exact bi-objective geometry and the frontier solvers."""
