"""Exact cyclotomic numbers in the power basis modulo the n-th cyclotomic polynomial.

A Cyclotomic of conductor n is a vector of phi(n) Fractions giving the
coordinates in the basis 1, z, ..., z^(phi(n)-1) with z = exp(2*pi*i/n).
Canonical reduction makes equality exact. Rational numbers are the n = 1
case; mixed-conductor arithmetic promotes to the lcm.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_exact(num, den):
    """Division of integer polynomials known to be exact."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("inexact polynomial division")
        q[i] = c // den[-1]
        if q[i]:
            for j, y in enumerate(den):
                num[i + j] -= q[i] * y
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_reductions(n):
    """z^k in the power basis, for 0 <= k < 2n, as tuples of Fractions."""
    phi = len(cyclotomic_polynomial(n)) - 1
    rows = []
    for k in range(phi):
        rows.append(tuple(Fraction(int(i == k)) for i in range(phi)))
    cp = cyclotomic_polynomial(n)
    lead = cp[-1]  # always 1
    # z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
    for k in range(phi, 2 * n):
        prev = rows[k - 1]
        shifted = (Fraction(0),) + prev[:-1]
        top = prev[-1]
        if top:
            shifted = tuple(s - top * Fraction(cp[i], lead) for i, s in enumerate(shifted))
        rows.append(shifted)
    return rows


def _euler_phi(n):
    return len(cyclotomic_polynomial(n)) - 1


class Cyclotomic:
    """Element of Q(zeta_n), canonical power-basis representation."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(self.coeffs) == _euler_phi(n)

    @staticmethod
    def from_rational(r, n=1):
        phi = _euler_phi(n)
        return Cyclotomic(n, (Fraction(r),) + (Fraction(0),) * (phi - 1))

    @staticmethod
    def zeta(n, k=1):
        """zeta_n^k as a Cyclotomic of conductor n."""
        k %= n
        row = _power_reductions(n)[k]
        return Cyclotomic(n, row)

    @staticmethod
    def from_terms(n, terms):
        """sum of coeff * zeta_n^exp over terms dict {exp: coeff}."""
        phi = _euler_phi(n)
        acc = [Fraction(0)] * phi
        red = _power_reductions(n)
        for e, c in terms.items():
            row = red[e % n]
            c = Fraction(c)
            for i in range(phi):
                acc[i] += c * row[i]
        return Cyclotomic(n, acc)

    def promote(self, m):
        """Re-express in conductor m (n must divide m)."""
        if m == self.n:
            return self
        assert m % self.n == 0
        step = m // self.n
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[i * step] = c
        return Cyclotomic.from_terms(m, terms)

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            if other.n == self.n:
                return self, other
            m = self.n * other.n // gcd(self.n, other.n)
            return self.promote(m), other.promote(m)
        return self, Cyclotomic.from_rational(other, self.n)

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyclotomic(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else Cyclotomic.from_rational(-Fraction(other), 1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            c = Fraction(other)
            return Cyclotomic(self.n, tuple(x * c for x in self.coeffs))
        a, b = self._pair(other)
        prod = _poly_mul(a.coeffs, b.coeffs)
        red = _power_reductions(a.n)
        phi = len(a.coeffs)
        acc = [Fraction(0)] * phi
        for e, c in enumerate(prod):
            if c:
                row = red[e]
                for i in range(phi):
                    acc[i] += c * row[i]
        return Cyclotomic(a.n, acc)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via extended Euclid modulo Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.coeffs[0], self.n)
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = list(self.coeffs)

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        def polymod(p, q):
            p = p[:]
            dq = deg(q)
            while deg(p) >= dq:
                dp = deg(p)
                f = p[dp] / q[dq]
                for i in range(dq + 1):
                    p[dp - dq + i] -= f * q[i]
            return p

        # extended euclid: find u with u*a = gcd (mod Phi_n); gcd is a unit
        r0, r1 = mod, a + [Fraction(0)] * (len(mod) - len(a))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while deg(r1) > 0:
            dp, dq = deg(r0), deg(r1)
            q = [Fraction(0)] * (dp - dq + 1)
            rem = r0[:]
            while deg(rem) >= dq:
                dr = deg(rem)
                f = rem[dr] / r1[dq]
                q[dr - dq] += f
                for i in range(dq + 1):
                    rem[dr - dq + i] -= f * r1[i]
            # s_next = s0 - q*s1
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        qs1[i + j] += x * y
            s_next = [ (s0[i] if i < len(s0) else Fraction(0)) - (qs1[i] if i < len(qs1) else Fraction(0))
                       for i in range(max(len(s0), len(qs1))) ]
            r0, r1 = r1, rem
            s0, s1 = s1, s_next
        c = r1[0]
        if c == 0:
            raise ZeroDivisionError("element not invertible")
        inv = [x / c for x in s1]
        inv = polymod(inv, mod)
        phi = _euler_phi(self.n)
        inv = (inv + [Fraction(0)] * phi)[:phi]
        return Cyclotomic(self.n, inv)

    def __truediv__(self, other):
        if not isinstance(other, Cyclotomic):
            c = Fraction(other)
            return Cyclotomic(self.n, tuple(x / c for x in self.coeffs))
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.from_rational(other, self.n) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.n, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"not rational: {self!r}")
        return self.coeffs[0]

    def galois(self, d):
        """Image under zeta -> zeta^d; requires gcd(d, n) = 1."""
        if gcd(d, self.n) != 1:
            raise ValueError(f"galois exponent {d} not coprime to {self.n}")
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[(i * d) % self.n] = terms.get((i * d) % self.n, Fraction(0)) + c
        return Cyclotomic.from_terms(self.n, terms)

    def conjugate(self):
        return self.galois(self.n - 1) if self.n > 1 else self

    def trace(self):
        """Sum over the Galois orbit; always rational."""
        total = Cyclotomic.from_rational(0, self.n)
        for d in range(1, self.n + 1):
            if gcd(d, self.n) == 1:
                total = total + self.galois(d)
        return total.as_fraction()

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z{self.n}^{i}" if i else f"{c}")
        return "Cyc(" + " + ".join(parts) + ")"


def cyclotomic_reduce(terms, n):
    """Canonical representative of sum(coeff * zeta^exp) modulo Phi_n."""
    return Cyclotomic.from_terms(n, dict(terms))


def galois_apply(x, d):
    """Ring automorphism zeta -> zeta^d applied to x (Cyclotomic or rational)."""
    if isinstance(x, Cyclotomic):
        return x.galois(d)
    return Fraction(x)


# ---------------------------------------------------------------------------
# coercion helpers for code that mixes Fractions and Cyclotomics

def cadd(a, b):
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        a = a if isinstance(a, Cyclotomic) else Cyclotomic.from_rational(a)
        return a + b
    return Fraction(a) + Fraction(b)


def cmul(a, b):
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        a = a if isinstance(a, Cyclotomic) else Cyclotomic.from_rational(a)
        return a * b
    return Fraction(a) * Fraction(b)


def cneg(a):
    return -a if isinstance(a, Cyclotomic) else -Fraction(a)


def cdiv(a, b):
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        a = a if isinstance(a, Cyclotomic) else Cyclotomic.from_rational(a)
        b = b if isinstance(b, Cyclotomic) else Cyclotomic.from_rational(b)
        return a / b
    return Fraction(a) / Fraction(b)


def is_zero_value(a):
    return a.is_zero() if isinstance(a, Cyclotomic) else Fraction(a) == 0


def rational_value(a):
    """Fraction value of a, raising if a has an irrational part."""
    if isinstance(a, Cyclotomic):
        return a.as_fraction()
    return Fraction(a)
