"""CLI, run configuration and the verification report."""
