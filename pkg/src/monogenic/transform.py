"""Heat operator, Hermite polynomials, Cauchy-Kowalevski extension and
the factorized Segal-Bargmann transform.

The transform is the composition (C-K extension) o (heat operator):
first smooth an x0-free polynomial with exp(Laplacian/2), then extend
the result to the unique monogenic polynomial on R^{n+1} restricting to
it.  Both factors are finite sums on polynomials (the Laplacian and the
Dirac operator are nilpotent there), so everything is exact.

Probabilists' Hermite polynomials are the preimages of the monomials
under the heat operator; their monogenic images form the orthogonal
basis whose squared norms are the multi-index factorials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from .clifford import CliffordNumber, DimensionMismatchError
from .poly import CliffordPolynomial, MultiIndex


class NotMonogenicError(ValueError):
    """Input must satisfy the generalized Cauchy-Riemann equation."""


def heat(f: CliffordPolynomial, inverse: bool = False) -> CliffordPolynomial:
    """Apply exp(+Laplacian/2), or exp(-Laplacian/2) when inverse is set.

    The series sum_k (+-1)^k Lap^k f / (2^k k!) terminates because the
    Laplacian strictly drops total degree.
    """
    if not f.is_x0_free():
        raise ValueError("heat operator acts on x0-free polynomials")
    total = CliffordPolynomial.zero(f.n)
    term = f
    k = 0
    while term:
        sign = (-1) ** k if inverse else 1
        total = total + term * Fraction(sign, 2 ** k * _factorial(k))
        term = term.laplacian()
        k += 1
    return total


def _factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def hermite(n: int, beta: Sequence[int]) -> CliffordPolynomial:
    """Product of monic probabilists' Hermite polynomials, H_beta.

    Defined as the inverse heat image of the monomial x^beta; this is
    the normalization under which the heat operator sends H_beta back
    to x^beta and the Gaussian squared norm is beta!.
    """
    beta = MultiIndex(beta)
    if len(beta) != n:
        raise ValueError(f"multi-index length {len(beta)} != dimension {n}")
    return heat(CliffordPolynomial.monomial(n, 0, beta), inverse=True)


def ck_extend(f: CliffordPolynomial) -> CliffordPolynomial:
    """Cauchy-Kowalevski extension: the monogenic polynomial on R^{n+1}
    restricting to f at x0 = 0, via sum_k (-x0)^k D^k f / k!."""
    if not f.is_x0_free():
        raise ValueError("C-K extension starts from an x0-free polynomial")
    n = f.n
    total = CliffordPolynomial.zero(n)
    term = f
    k = 0
    while term:
        x0k = CliffordPolynomial.monomial(n, k, (0,) * n)
        total = total + x0k * term * Fraction((-1) ** k, _factorial(k))
        term = term.dirac()
        k += 1
    return total


def restrict(F: CliffordPolynomial) -> CliffordPolynomial:
    """Substitute x0 = 0."""
    return F.restrict()


def p_basis(n: int, beta: Sequence[int]) -> CliffordPolynomial:
    """Monogenic basis element: the C-K extension of the monomial x^beta."""
    beta = MultiIndex(beta)
    if len(beta) != n:
        raise ValueError(f"multi-index length {len(beta)} != dimension {n}")
    return ck_extend(CliffordPolynomial.monomial(n, 0, beta))


class HermiteExpansion:
    """Finite expansion f = sum_beta H_beta * w_beta with right
    Clifford coefficients w_beta."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[Sequence[int], CliffordNumber] | None = None):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        self.n = n
        data: dict[MultiIndex, CliffordNumber] = {}
        if coeffs:
            for beta, value in coeffs.items():
                beta = MultiIndex(beta)
                if len(beta) != n:
                    raise ValueError(f"multi-index length {len(beta)} != dimension {n}")
                if value.n != n:
                    raise DimensionMismatchError(f"C_{value.n} coefficient in C_{n} expansion")
                if beta in data:
                    raise ValueError(f"duplicate multi-index {tuple(beta)}")
                if value:
                    data[beta] = value
        self._coeffs = data

    def coefficients(self) -> Iterator[tuple[MultiIndex, CliffordNumber]]:
        for beta in sorted(self._coeffs, key=lambda b: (b.degree, b)):
            yield beta, self._coeffs[beta]

    def to_polynomial(self) -> CliffordPolynomial:
        total = CliffordPolynomial.zero(self.n)
        for beta, value in self._coeffs.items():
            total = total + hermite(self.n, beta) * value
        return total

    @classmethod
    def from_polynomial(cls, f: CliffordPolynomial) -> "HermiteExpansion":
        """Expand an x0-free polynomial over the Hermite basis.

        The heat operator carries H_beta to x^beta, so the expansion
        coefficients are just the monomial coefficients of heat(f).
        """
        smoothed = heat(f)
        return cls(f.n, {beta: coeff for _, beta, coeff in smoothed.terms()})

    def norm_sq(self) -> Fraction:
        """sum_beta beta! * |w_beta|^2, the Gaussian squared norm."""
        total = Fraction(0)
        for beta, value in self._coeffs.items():
            total += beta.factorial * value.norm_sq()
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermiteExpansion):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(b)}: {v!r}" for b, v in self.coefficients())
        return f"HermiteExpansion(n={self.n}, {{{inner}}})"


def sb_transform(f: Union[HermiteExpansion, CliffordPolynomial]) -> CliffordPolynomial:
    """The Segal-Bargmann transform in factorized form.

    Accepts either an x0-free polynomial or a Hermite expansion; in
    either case the result is ck_extend(heat(f)), which sends each
    H_beta * w to the monogenic basis element times w.
    """
    if isinstance(f, HermiteExpansion):
        f = f.to_polynomial()
    return ck_extend(heat(f))


def sb_inverse(F: CliffordPolynomial) -> CliffordPolynomial:
    """Inverse transform: restrict to x0 = 0, then apply inverse heat."""
    if not F.is_monogenic():
        raise NotMonogenicError("inverse transform is defined on monogenic polynomials")
    return heat(F.restrict(), inverse=True)
