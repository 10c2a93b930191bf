"""Machinery shared by all optimizers."""
