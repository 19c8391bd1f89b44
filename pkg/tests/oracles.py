"""Independent oracles used by the test suite.

Each oracle deliberately recomputes a quantity by a route the library
does not use: naive generator-by-generator blade reduction, the
per-coordinate Hermite recurrence, the 1-D moment recurrence, and a
direct power-expansion evaluator.
"""

from fractions import Fraction

from monogenic import CliffordNumber, CliffordPolynomial


def naive_blade_product(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Reduce the concatenated generator word left to right.

    Adjacent equal generators annihilate with a -1; out-of-order
    adjacent generators swap with a -1.  Terminates because each pass
    shrinks the word or reduces its inversion count.
    """
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] == word[i + 1]:
                del word[i:i + 2]
                sign = -sign
                changed = True
            elif word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            else:
                i += 1
    return sign, tuple(word)


def hermite_recurrence(n: int, beta: tuple[int, ...]) -> CliffordPolynomial:
    """Product of 1-D probabilists' Hermite polynomials built from
    H_{k+1}(t) = t*H_k(t) - k*H_{k-1}(t), one coordinate at a time."""
    result = CliffordPolynomial.monomial(n, 0, (0,) * n)
    for axis, k in enumerate(beta):
        h_prev = CliffordPolynomial.monomial(n, 0, (0,) * n)  # H_0 = 1
        if k == 0:
            continue
        t = CliffordPolynomial.variable(n, axis + 1)
        h_curr = t  # H_1 = t
        for m in range(1, k):
            h_next = t * h_curr - h_prev * m
            h_prev, h_curr = h_curr, h_next
        result = result * h_curr
    return result


def moment_recurrence(k: int, variance: Fraction) -> Fraction:
    """1-D centered Gaussian moment by integration-by-parts recurrence."""
    if k % 2:
        return Fraction(0)
    value = Fraction(1)
    while k > 0:
        value *= (k - 1) * variance
        k -= 2
    return value


def expand_eval(f: CliffordPolynomial, x0: Fraction, xs: list[Fraction]) -> CliffordNumber:
    """Evaluate by explicit repeated multiplication, term by term."""
    total = CliffordNumber.zero(f.n)
    for k0, beta, coeff in f.terms():
        scale = Fraction(1)
        for _ in range(k0):
            scale = scale * x0
        for x, b in zip(xs, beta):
            for _ in range(b):
                scale = scale * x
        total = total + scale * coeff
    return total
