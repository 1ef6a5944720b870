"""The *-operation on pairs of partitions and Schur-positivity checks."""

__version__ = "0.1.0"
