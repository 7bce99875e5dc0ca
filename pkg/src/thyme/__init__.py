"""Temporal hypergraph motif counting."""
