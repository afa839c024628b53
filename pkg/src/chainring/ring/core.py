"""
Exact arithmetic for finite valuation rings of order q^r.

Two families are supported:

* ``cyclic``: Z/p^rZ, uniformizer p.
* ``polynomial``: F_q[t]/(t^r) with F_q = F_p[x]/(f), uniformizer t.

Every element has a canonical index in ``[0, q^r)``: the little-endian base-p
digit vector of length ``n*r`` packed into an integer. For the cyclic family
this is the residue itself. For the polynomial family digit ``j*n + i`` is the
coefficient of ``x^i t^j``. In both families the index is little-endian in
base-q blocks, so ``valuation(a)`` is the number of trailing zero blocks.
"""

import functools
import logging
import re
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..errors import MixedRingError, NotAUnit, RingConstructionError
from .polys import field_tables, is_irreducible, is_prime, smallest_irreducible

logger = logging.getLogger(__name__)

Family = Literal["cyclic", "polynomial"]
IndexLike = Union[int, np.integer, np.ndarray]

# Lookup-table arithmetic needs order^2 entries.
POLY_TABLE_LIMIT = 4096
# Largest ring whose elements may be enumerated into arrays.
ENUMERATION_LIMIT = 1 << 20
CYCLIC_ORDER_LIMIT = 1 << 31

_DESCRIPTOR_RE = re.compile(r"^\s*(\d+)\^(\d+)\^(\d+)(?::(cyclic|polynomial))?\s*$")


class _Arithmetic(ABC):
    """Index-level kernels shared by scalar and vectorized operations."""

    @abstractmethod
    def add(self, a: IndexLike, b: IndexLike) -> IndexLike:
        ...

    @abstractmethod
    def neg(self, a: IndexLike) -> IndexLike:
        ...

    @abstractmethod
    def mul(self, a: IndexLike, b: IndexLike) -> IndexLike:
        ...


class _CyclicArithmetic(_Arithmetic):
    """Closed-form residue arithmetic modulo p^r."""

    def __init__(self, modulus: int):
        self.modulus = modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        # p^r <= 2^31 keeps int64 products exact.
        return (a * b) % self.modulus


class _TableArithmetic(_Arithmetic):
    """Lookup-table arithmetic for F_q[t]/(t^r)."""

    def __init__(self, add_table: np.ndarray, mul_table: np.ndarray, neg_table: np.ndarray):
        self.add_table = add_table
        self.mul_table = mul_table
        self.neg_table = neg_table

    def add(self, a, b):
        return self.add_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a, b]


def _polynomial_tables(p: int, n: int, r: int, modulus: Sequence[int]) -> _TableArithmetic:
    q = p ** n
    order = q ** r
    fq_add, fq_mul = (np.asarray(t, dtype=np.int32) for t in field_tables(p, modulus))

    idx = np.arange(order, dtype=np.int64)
    digits = [(idx // p ** k) % p for k in range(n * r)]
    add_table = np.zeros((order, order), dtype=np.int32)
    neg_table = np.zeros(order, dtype=np.int32)
    for k, col in enumerate(digits):
        add_table += (((col[:, None] + col[None, :]) % p) * p ** k).astype(np.int32)
        neg_table += (((p - col) % p) * p ** k).astype(np.int32)

    blocks = [(idx // q ** j) % q for j in range(r)]
    acc = [np.zeros((order, order), dtype=np.int32) for _ in range(r)]
    for i in range(r):
        for j in range(r - i):
            term = fq_mul[blocks[i][:, None], blocks[j][None, :]]
            acc[i + j] = fq_add[acc[i + j], term]
    mul_table = np.zeros((order, order), dtype=np.int32)
    for j in range(r):
        mul_table += acc[j] * np.int32(q ** j)
    return _TableArithmetic(add_table, mul_table, neg_table)


class RingSpec(BaseModel):
    """Description of a finite valuation ring of order q^r, q = p^n."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., description="Odd prime characteristic of the residue field")
    n: int = Field(default=1, description="Residue field degree, q = p^n")
    r: int = Field(default=1, description="Nilpotency degree of the maximal ideal")
    family: Family = Field(default="cyclic", description="Ring family tag")
    field_poly: Optional[Tuple[int, ...]] = Field(
        default=None,
        description="Little-endian monic irreducible modulus of F_q over F_p (n > 1 only)",
    )

    _arith: Any = PrivateAttr(default=None)
    _squares: Any = PrivateAttr(default=None)

    @model_validator(mode="before")
    @classmethod
    def _fill_field_poly(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("field_poly") is None:
            p, n = data.get("p"), data.get("n", 1)
            if isinstance(p, int) and isinstance(n, int) and n > 1 and is_prime(p):
                data = dict(data, field_poly=smallest_irreducible(n, p))
        return data

    @model_validator(mode="after")
    def _check(self) -> "RingSpec":
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.p == 2:
            raise ValueError("p=2 is not supported: the ring must have odd order")
        if self.n < 1 or self.r < 1:
            raise ValueError(f"n and r must be positive (got n={self.n}, r={self.r})")
        if self.family == "cyclic" and self.n != 1:
            raise ValueError("the cyclic family requires n = 1")
        if self.n > 1:
            poly = tuple(self.field_poly or ())
            if len(poly) != self.n + 1 or poly[-1] != 1:
                raise ValueError(f"field_poly must be monic of degree {self.n}")
            if not is_irreducible(poly, self.p):
                raise ValueError(f"field_poly {poly} is reducible over F_{self.p}")
        return self

    def model_post_init(self, __context: Any) -> None:
        order = self.order
        if self.family == "cyclic":
            if order > CYCLIC_ORDER_LIMIT:
                raise ValueError(f"cyclic rings are limited to order <= 2^31 (got {order})")
            self._arith = _CyclicArithmetic(order)
        else:
            if order > POLY_TABLE_LIMIT:
                raise ValueError(f"polynomial rings are limited to order <= {POLY_TABLE_LIMIT} (got {order})")
            modulus = self.field_poly if self.n > 1 else (0, 1)
            self._arith = _polynomial_tables(self.p, self.n, self.r, modulus)
        logger.debug(f"Constructed ring {self.descriptor} of order {order}")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> Tuple:
        return (self.p, self.n, self.r, self.family, self.field_poly)

    def __repr__(self) -> str:
        return f"RingSpec({self.descriptor})"

    # ------------------------------------------------------------------
    # Structure

    @property
    def q(self) -> int:
        """Order of the residue field."""
        return self.p ** self.n

    @property
    def order(self) -> int:
        """|R| = q^r."""
        return self.q ** self.r

    @property
    def unit_count(self) -> int:
        """|R^*| = q^r - q^(r-1)."""
        return self.order - self.q ** (self.r - 1)

    @property
    def nonunit_count(self) -> int:
        """|R^0| = q^(r-1)."""
        return self.q ** (self.r - 1)

    @property
    def descriptor(self) -> str:
        """Descriptor string ``p^n^r:family``."""
        return f"{self.p}^{self.n}^{self.r}:{self.family}"

    @property
    def uniformizer(self) -> "RingElement":
        """p for the cyclic family, t for the polynomial family (zero when r = 1)."""
        return self.element(self.q % self.order)

    @property
    def zero(self) -> "RingElement":
        return self.element(0)

    @property
    def one(self) -> "RingElement":
        return self.element(1)

    def element(self, index: int) -> "RingElement":
        """Element with the given canonical index."""
        index = int(index)
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside [0, {self.order})")
        return RingElement(index, self)

    def __call__(self, value: int) -> "RingElement":
        """Integer embedding: ``value * 1`` reduced into the ring."""
        if self.family == "cyclic":
            return self.element(value % self.order)
        # The prime subring is F_p, sitting in the lowest digit.
        return self.element(value % self.p)

    def check_enumerable(self) -> None:
        if self.order > ENUMERATION_LIMIT:
            raise RingConstructionError(f"ring of order {self.order} is too large to enumerate")

    def all_indices(self) -> np.ndarray:
        """Every canonical index in increasing order."""
        self.check_enumerable()
        return np.arange(self.order, dtype=np.int64)

    def unit_indices(self) -> np.ndarray:
        """Indices of R^* in increasing order."""
        idx = self.all_indices()
        return idx[self.is_unit_array(idx)]

    def nonunit_indices(self) -> np.ndarray:
        """Indices of R^0 in increasing order."""
        idx = self.all_indices()
        return idx[~self.is_unit_array(idx)]

    # ------------------------------------------------------------------
    # Vectorized index kernels

    def vadd(self, a: IndexLike, b: IndexLike) -> IndexLike:
        return self._arith.add(a, b)

    def vneg(self, a: IndexLike) -> IndexLike:
        return self._arith.neg(a)

    def vsub(self, a: IndexLike, b: IndexLike) -> IndexLike:
        return self._arith.add(a, self._arith.neg(b))

    def vmul(self, a: IndexLike, b: IndexLike) -> IndexLike:
        return self._arith.mul(a, b)

    def vpow(self, a: IndexLike, exponent: int) -> IndexLike:
        """a^exponent by square-and-multiply (exponent >= 0)."""
        result = np.ones_like(a) if isinstance(a, np.ndarray) else 1
        base = a
        while exponent:
            if exponent & 1:
                result = self.vmul(result, base)
            base = self.vmul(base, base)
            exponent >>= 1
        return result

    def vinv(self, a: IndexLike) -> IndexLike:
        """Inverse of units: a^(|R^*| - 1). Non-unit inputs give meaningless output."""
        return self.vpow(a, self.unit_count - 1)

    def vdot(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Pairwise dot products of two index arrays of shape (m, d) and (n, d) -> (m, n)."""
        left = np.asarray(left, dtype=np.int64)
        right = np.asarray(right, dtype=np.int64)
        if left.ndim != 2 or right.ndim != 2 or left.shape[1] != right.shape[1]:
            raise ValueError(f"incompatible shapes {left.shape} and {right.shape}")
        out = np.zeros((left.shape[0], right.shape[0]), dtype=np.int64)
        for k in range(left.shape[1]):
            out = self.vadd(out, self.vmul(left[:, k, None], right[None, :, k]))
        return np.asarray(out, dtype=np.int64)

    def valuation_array(self, a: IndexLike) -> IndexLike:
        """Valuations of indices; valuation(0) = r."""
        a = np.asarray(a, dtype=np.int64)
        v = np.zeros_like(a)
        for j in range(1, self.r + 1):
            v += (a % self.q ** j == 0)
        return v

    def is_unit_array(self, a: IndexLike) -> IndexLike:
        return np.asarray(a, dtype=np.int64) % self.q != 0

    # ------------------------------------------------------------------
    # Encodings

    def digits(self, index: int) -> Tuple[int, ...]:
        """Little-endian base-p digit vector of length n*r."""
        return tuple((int(index) // self.p ** k) % self.p for k in range(self.n * self.r))

    def from_digits(self, digits: Sequence[int]) -> "RingElement":
        if len(digits) > self.n * self.r:
            raise ValueError(f"too many digits for {self.descriptor}: {len(digits)}")
        if any(not 0 <= d < self.p for d in digits):
            raise ValueError(f"digits must lie in [0, {self.p})")
        return self.element(sum(d * self.p ** k for k, d in enumerate(digits)))

    def element_from_text(self, text: str) -> "RingElement":
        """Parse the comma-separated little-endian digit form, e.g. ``"2,1"``."""
        parts = [s for s in text.strip().split(",") if s.strip()]
        return self.from_digits([int(s) for s in parts])

    def square_roots(self, a: IndexLike) -> List["RingElement"]:
        """All z with z^2 = a, in index order."""
        if self._squares is None:
            idx = self.all_indices()
            squares = np.asarray(self.vmul(idx, idx), dtype=np.int64)
            table: Dict[int, List[int]] = {}
            for z, s in zip(idx.tolist(), squares.tolist()):
                table.setdefault(s, []).append(z)
            self._squares = table
        return [self.element(z) for z in self._squares.get(int(a), [])]


class RingElement:
    """Element of a RingSpec, identified by its canonical index."""

    __slots__ = ("index", "ring")

    def __init__(self, index: int, ring: RingSpec):
        self.index = int(index)
        self.ring = ring

    def _same_ring(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise MixedRingError(f"operands from {self.ring.descriptor} and {other.ring.descriptor}")

    def __add__(self, other: "RingElement") -> "RingElement":
        return add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return sub(self, other)

    def __neg__(self) -> "RingElement":
        return neg(self)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul(self, other)

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            return inv(self) ** (-exponent)
        return RingElement(int(self.ring.vpow(self.index, exponent)), self.ring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.index == other.index and (self.ring is other.ring or self.ring == other.ring)

    def __lt__(self, other: "RingElement") -> bool:
        self._same_ring(other)
        return self.index < other.index

    def __hash__(self) -> int:
        return hash((self.index, self.ring))

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"RingElement({self.to_text()} in {self.ring.descriptor})"

    def to_text(self) -> str:
        """Comma-separated little-endian base-p digits."""
        return ",".join(str(d) for d in self.ring.digits(self.index))

    @property
    def is_unit(self) -> bool:
        return self.index % self.ring.q != 0

    @property
    def valuation(self) -> int:
        return valuation(self)


def add(a: RingElement, b: RingElement) -> RingElement:
    a._same_ring(b)
    return RingElement(int(a.ring.vadd(a.index, b.index)), a.ring)


def sub(a: RingElement, b: RingElement) -> RingElement:
    a._same_ring(b)
    return RingElement(int(a.ring.vsub(a.index, b.index)), a.ring)


def neg(a: RingElement) -> RingElement:
    return RingElement(int(a.ring.vneg(a.index)), a.ring)


def mul(a: RingElement, b: RingElement) -> RingElement:
    a._same_ring(b)
    return RingElement(int(a.ring.vmul(a.index, b.index)), a.ring)


def inv(a: RingElement) -> RingElement:
    """Multiplicative inverse of a unit."""
    if not a.is_unit:
        raise NotAUnit(f"{a.to_text()} is not a unit of {a.ring.descriptor}")
    return RingElement(int(a.ring.vinv(a.index)), a.ring)


def valuation(a: RingElement) -> int:
    """Largest v with a in pi^v R; valuation(0) = r."""
    return int(a.ring.valuation_array(a.index))


@functools.lru_cache(maxsize=64)
def make_ring(
    p: int,
    n: int = 1,
    r: int = 1,
    family: Optional[str] = None,
    field_poly: Optional[Tuple[int, ...]] = None,
) -> RingSpec:
    """Construct (and cache) the ring of order p^(n r) in the requested family.

    Args:
        p: Odd prime
        n: Residue field degree (q = p^n)
        r: Nilpotency degree
        family: ``cyclic`` or ``polynomial``; defaults to cyclic when n = 1
        field_poly: Optional little-endian modulus for F_q; the smallest
            monic irreducible is searched for when omitted

    Returns:
        The ring

    Raises:
        RingConstructionError: On non-prime or even p, non-positive n or r,
            or an incompatible family
    """
    if family is None:
        family = "cyclic" if n == 1 else "polynomial"
    try:
        return RingSpec(p=p, n=n, r=r, family=family, field_poly=field_poly)
    except ValueError as e:
        raise RingConstructionError(str(e)) from e


def parse_descriptor(text: str) -> RingSpec:
    """Build a ring from ``p^n^r:family`` (family optional)."""
    match = _DESCRIPTOR_RE.match(text)
    if not match:
        raise RingConstructionError(f"malformed ring descriptor '{text}' (expected p^n^r:family)")
    p, n, r, family = match.groups()
    return make_ring(int(p), int(n), int(r), family)


def enumerate_elements(spec: RingSpec) -> List[RingElement]:
    """All elements in index order."""
    return [RingElement(i, spec) for i in spec.all_indices().tolist()]


def enumerate_units(spec: RingSpec) -> List[RingElement]:
    """All units in index order."""
    return [RingElement(i, spec) for i in spec.unit_indices().tolist()]
