"""
Residue field helpers over the prime field F_p, backed by ``galois``.

Polynomials are little-endian coefficient tuples, ``(c_0, c_1, ..., c_m)``.
galois lists coefficients from the leading term down, so every crossing
reverses them. A field element's integer in galois is ``sum(c_i * p**i)``,
the same encoding the ring uses for its digits.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

import galois
import numpy as np

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]


def is_prime(p: int) -> bool:
    return p >= 2 and bool(galois.is_prime(p))


def trim(poly: Sequence[int]) -> Poly:
    """Drop trailing zero coefficients."""
    coeffs = list(poly)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _to_galois(poly: Sequence[int], p: int) -> galois.Poly:
    return galois.Poly([c % p for c in reversed(trim(poly))], field=galois.GF(p))


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    f = trim([c % p for c in poly])
    if len(f) < 2:
        return False
    return bool(_to_galois(f, p).is_irreducible())


def smallest_irreducible(degree: int, p: int) -> Poly:
    """Monic irreducible polynomial of the given degree with the smallest integer encoding."""
    poly = galois.irreducible_poly(p, degree, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


@lru_cache(maxsize=None)
def _field(p: int, modulus: Poly):
    if len(modulus) - 1 == 1:
        return galois.GF(p)
    return galois.GF(p ** (len(modulus) - 1), irreducible_poly=_to_galois(modulus, p))


def field_tables(p: int, modulus: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """Addition and multiplication tables of F_p[x]/(modulus), indexed by element encoding."""
    field = _field(p, trim([c % p for c in modulus]))
    x = field.elements
    add = np.asarray((x[:, None] + x[None, :]).view(np.ndarray), dtype=np.int64)
    mul = np.asarray((x[:, None] * x[None, :]).view(np.ndarray), dtype=np.int64)
    logger.debug(f"field tables for {field.name}")
    return add, mul
