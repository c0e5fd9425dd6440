"""Degrees and generic finiteness of ramification assignments.

The heavy lifting lives in the compiled extension ``ramify._core``:
randomized Groebner fiber counting over several primes (``phi``,
``veronese``), differential-rank certificates (``rank``), and the exact
intersection-theory cross-checks (``catalan``, ``plucker_degree``).

Reports are plain dicts in the same shape as the CLI JSON output.
"""

from ramify._core import (
    DEFAULT_PRIMES,
    catalan,
    dims,
    dominates,
    h0_dim,
    monotonicity,
    phi,
    plucker_degree,
    ram_coefficients,
    rank,
    requirement_holds,
    veronese,
)

__all__ = [
    "DEFAULT_PRIMES",
    "catalan",
    "dims",
    "dominates",
    "h0_dim",
    "monotonicity",
    "phi",
    "plucker_degree",
    "ram_coefficients",
    "rank",
    "requirement_holds",
    "veronese",
]

__version__ = "0.1.0"
