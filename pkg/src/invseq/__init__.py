"""Pattern-avoiding inversion sequences and permutations: enumeration, statistics,
bijections and exact generating-function checks."""

__version__ = "0.1.0"
