"""Simultaneous core partitions and dominant regions of the m-Shi arrangement."""

from .affine import AffinePermutation, AffineRoot, from_word, generator, inverse, length, word_for
from .bijection import anderson_count, enumerate_catalog, narayana_histogram, phi, phi_inverse, verify_haiman
from .cores import Partition, core_from_vector, n_vector, parse_partition
from .shi import Alcove, bruteforce_dominant_regions, is_m_minimal

__all__ = [
    "AffinePermutation",
    "AffineRoot",
    "Alcove",
    "Partition",
    "anderson_count",
    "bruteforce_dominant_regions",
    "core_from_vector",
    "enumerate_catalog",
    "from_word",
    "generator",
    "inverse",
    "is_m_minimal",
    "length",
    "n_vector",
    "narayana_histogram",
    "parse_partition",
    "phi",
    "phi_inverse",
    "verify_haiman",
    "word_for",
]
