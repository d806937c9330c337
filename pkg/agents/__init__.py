"""Agent modules orchestrating the load, solve, verify and benchmark pipeline."""
