"""Exact arithmetic in the complex Clifford algebra C_n.

Elements are sparse sums of basis blades e_A, where A is a strictly
increasing subset of {1, ..., n}, with Gaussian-rational coefficients.
The generators satisfy e_i e_j + e_j e_i = -2 delta_ij, so each e_i
squares to -1.  Blades are stored internally as bitmasks over at most
16 generator slots; the product sign is a merge transposition count
plus one -1 factor per repeated generator.

Everything here is immutable after construction and every operation is
pure, so values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

MAX_DIMENSION = 16

RationalLike = Union[int, Fraction]


class DimensionMismatchError(ValueError):
    """Operands live in Clifford algebras of different dimension."""


class GaussianRational:
    """Exact complex number re + im*i with rational parts.

    Both parts are `fractions.Fraction`, hence always reduced with a
    positive denominator; structural equality is semantic equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.im and not other.im:  # common real-only fast path
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# Blades
# ---------------------------------------------------------------------------

def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Bitmask for a blade given its strictly increasing index tuple."""
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {n}")
    mask = 0
    prev = 0
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range [1, {n}]")
        if i <= prev:
            raise ValueError(f"blade indices must be strictly increasing, got {tuple(indices)}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _mask_product(a: int, b: int) -> tuple[int, int]:
    """Sign and bitmask of e_A * e_B.

    Transpositions needed to interleave B into A, counted wordwise,
    plus one sign flip per common generator (e_i^2 = -1).
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    swaps += (a & b).bit_count()
    return (-1 if swaps & 1 else 1), a ^ b


def blade_product(a: Iterable[int], b: Iterable[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Product of two basis blades: e_a * e_b = sign * e_c."""
    sign, mask = _mask_product(mask_from_indices(a, n), mask_from_indices(b, n))
    return sign, indices_from_mask(mask)


# ---------------------------------------------------------------------------
# Clifford numbers
# ---------------------------------------------------------------------------

class CliffordNumber:
    """Element of C_n as a sparse blade -> GaussianRational map.

    Zero coefficients are never stored; the empty map is the canonical
    zero, so `==` on the coefficient maps is semantic equality.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, ...], object] | None = None):
        if not 1 <= n <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {n}")
        self.n = n
        data: dict[int, GaussianRational] = {}
        if coeffs:
            for indices, value in coeffs.items():
                mask = mask_from_indices(indices, n)
                gr = _coerce(value)
                if gr is NotImplemented:
                    raise TypeError(f"bad coefficient {value!r}")
                if mask in data:
                    raise ValueError(f"duplicate blade {indices}")
                if gr:
                    data[mask] = gr
        self._coeffs = data

    @classmethod
    def _from_masks(cls, n: int, data: dict[int, GaussianRational]) -> "CliffordNumber":
        out = cls.__new__(cls)
        out.n = n
        out._coeffs = {m: v for m, v in data.items() if v}
        return out

    @classmethod
    def zero(cls, n: int) -> "CliffordNumber":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CliffordNumber":
        return cls(n, {(): 1})

    @classmethod
    def scalar(cls, n: int, value) -> "CliffordNumber":
        return cls(n, {(): value})

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], coeff=1) -> "CliffordNumber":
        return cls(n, {tuple(indices): coeff})

    @classmethod
    def basis(cls, n: int, i: int) -> "CliffordNumber":
        """The generator e_i."""
        return cls(n, {(i,): 1})

    def terms(self) -> Iterator[tuple[tuple[int, ...], GaussianRational]]:
        """Canonically ordered (indices, coefficient) pairs: by grade, then lex."""
        for mask in sorted(self._coeffs, key=lambda m: (m.bit_count(), indices_from_mask(m))):
            yield indices_from_mask(mask), self._coeffs[mask]

    def coefficient(self, indices: Iterable[int]) -> GaussianRational:
        return self._coeffs.get(mask_from_indices(indices, self.n), GaussianRational())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _check_dim(self, other: "CliffordNumber") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"C_{self.n} vs C_{other.n}")

    def __add__(self, other) -> "CliffordNumber":
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        self._check_dim(other)
        data = dict(self._coeffs)
        for mask, value in other._coeffs.items():
            acc = data.get(mask)
            data[mask] = value if acc is None else acc + value
        return CliffordNumber._from_masks(self.n, data)

    def __sub__(self, other) -> "CliffordNumber":
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "CliffordNumber":
        return CliffordNumber._from_masks(self.n, {m: -v for m, v in self._coeffs.items()})

    def __mul__(self, other) -> "CliffordNumber":
        if isinstance(other, CliffordNumber):
            self._check_dim(other)
            data: dict[int, GaussianRational] = {}
            for ma, va in self._coeffs.items():
                for mb, vb in other._coeffs.items():
                    sign, mask = _mask_product(ma, mb)
                    value = va * vb
                    if sign < 0:
                        value = -value
                    acc = data.get(mask)
                    data[mask] = value if acc is None else acc + value
            return CliffordNumber._from_masks(self.n, data)
        scalar = _coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return CliffordNumber._from_masks(
            self.n, {m: v * scalar for m, v in self._coeffs.items()})

    def __rmul__(self, other) -> "CliffordNumber":
        # scalars are central, so left and right scaling agree
        scalar = _coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self * scalar

    def grade(self, k: int) -> "CliffordNumber":
        """The k-vector part: keep blades with exactly k generators."""
        if k < 0:
            raise ValueError("grade must be nonnegative")
        return CliffordNumber._from_masks(
            self.n, {m: v for m, v in self._coeffs.items() if m.bit_count() == k})

    def scalar_part(self) -> GaussianRational:
        return self._coeffs.get(0, GaussianRational())

    def hermitian_conj(self) -> "CliffordNumber":
        """Antilinear antiautomorphism with e_i -> -e_i.

        On a grade-k blade the reversal and the per-generator minus
        signs combine to (-1)^(k(k+1)/2); scalars are complex-conjugated.
        """
        data = {}
        for mask, value in self._coeffs.items():
            k = mask.bit_count()
            value = value.conjugate()
            if (k * (k + 1) // 2) & 1:
                value = -value
            data[mask] = value
        return CliffordNumber._from_masks(self.n, data)

    def inner(self, other: "CliffordNumber") -> GaussianRational:
        """Hermitian inner product (self, other) = [conj(self) * other]_0."""
        self._check_dim(other)
        return (self.hermitian_conj() * other).scalar_part()

    def norm_sq(self) -> Fraction:
        """(self, self) = sum of |coefficient|^2; exact and nonnegative."""
        total = Fraction(0)
        for value in self._coeffs.values():
            total += value.abs_sq()
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = CliffordNumber.scalar(self.n, other)
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    __hash__ = None  # mutable-looking container semantics; not hashable

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for indices, value in self.terms():
            blade = "e{" + ",".join(map(str, indices)) + "}" if indices else ""
            parts.append(f"({value!r}){blade}" if blade else repr(value))
        return " + ".join(parts)
