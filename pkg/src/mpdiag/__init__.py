"""Exact computations in the partition algebra and the multiset partition algebra."""

from .scalars import RationalPolynomial, X, falling_factorial, evaluate
from .partitions import SetPartition, MultisetPartition, kappa, enumerate_msp, enumerate_set_partitions
from .partition_algebra import PAElement
from .msp_algebra import MPElement, dlike_product, olike_product, oz_orbit_product, omega, convert

__version__ = "0.1.0"
