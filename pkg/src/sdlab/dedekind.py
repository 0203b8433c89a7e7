"""Dedekind sums and the floor-sum/root-of-unity objects surrounding them.

Covers the classical sum s(a, b), Voronoi power sums V_{m,n}, the Zolotarev
permutation k -> a*k mod b, Dedekind-Carlitz polynomials, their bivariate
relatives, and Mirimanoff / Apostol-Bernoulli polynomials.  Exact rational
arithmetic throughout except where a root of unity forces complex scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import require_coprime
from .polyring import (
    BiLaurent,
    LaurentPoly,
    from_q,
    from_t,
    geom_sum,
    monomial,
    roots_of_unity,
)


@dataclass(frozen=True)
class ZolotarevPerm:
    """The permutation k -> a*k mod b of {0, ..., b-1}, for coprime a, b."""

    b: int
    images: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.images[k]

    def __len__(self) -> int:
        return self.b

    def compose(self, other: "ZolotarevPerm") -> "ZolotarevPerm":
        if self.b != other.b:
            raise ValueError("moduli differ")
        return ZolotarevPerm(self.b, tuple(self.images[other.images[k]] for k in range(self.b)))


def zolotarev(a: int, b: int) -> ZolotarevPerm:
    """Division with remainder a*k = b*floor(a*k/b) + images[k], as a permutation."""
    require_coprime(a, b)
    return ZolotarevPerm(b, tuple(a * k % b for k in range(b)))


def sawtooth(x) -> Fraction:
    """((x)): 0 at integers, x - floor(x) - 1/2 otherwise.  Odd function."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def voronoi_sum(a: int, b: int, m: int, n: int) -> int:
    """V_{m,n}(a, b) = sum_{k=1}^{b-1} k^m * floor(a*k/b)^n, exactly."""
    require_coprime(a, b)
    if m < 0 or n < 0:
        raise ValueError("exponents must be >= 0")
    return sum(k**m * (a * k // b) ** n for k in range(1, b))


def dedekind_sum(a: int, b: int, route: str = "sawtooth"):
    """Classical Dedekind sum s(a, b) = sum_{k=1}^{b-1} ((k/b)) ((a*k/b)).

    Routes:
      sawtooth  - the defining sum, exact Fraction.
      voronoi   - -V_{1,1}(a,b)/b + (b-1)/4 * (4a/3 - 2a/(3b) - 1), exact Fraction.
      cotangent - (1/4b) * sum cot(pi*k/b) cot(pi*a*k/b), float.
    """
    require_coprime(a, b)
    if route == "sawtooth":
        return sum(
            (sawtooth(Fraction(k, b)) * sawtooth(Fraction(a * k, b)) for k in range(1, b)),
            Fraction(0),
        )
    if route == "voronoi":
        correction = Fraction(b - 1, 4) * (Fraction(4 * a, 3) - Fraction(2 * a, 3 * b) - 1)
        return -Fraction(voronoi_sum(a, b, 1, 1), b) + correction
    if route == "cotangent":
        total = 0.0
        for k in range(1, b):
            t1 = math.pi * k / b
            t2 = math.pi * a * k / b
            total += (math.cos(t1) / math.sin(t1)) * (math.cos(t2) / math.sin(t2))
        return total / (4 * b)
    raise ValueError(f"unknown route {route!r}")


# -- Mirimanoff and Apostol-Bernoulli polynomials -------------------------------


def mirimanoff(lam, m: int, b: int):
    """M_{b-1}(lam, m) = sum_{k=0}^{b-1} k^m * lam^k, with 0^0 = 1.

    Exact Fraction for int/Fraction lam, complex for complex lam.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if b < 1:
        raise ValueError("b must be >= 1")
    if isinstance(lam, complex):
        total = 0j
        power = 1 + 0j
        for k in range(b):
            total += (k**m) * power
            power *= lam
        return total
    lam = Fraction(lam)
    total = Fraction(0)
    power = Fraction(1)
    for k in range(b):
        total += (k**m) * power
        power *= lam
    return total


@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n with B_1 = -1/2 (generating function t/(e^t - 1))."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * out[j]
        out.append(-acc / (m + 1))
    return tuple(out)


def apostol_bernoulli(k: int, q, lam):
    """B_k(q, lam): coefficients of t*e^{tq} / (lam*e^t - 1).

    For lam != 1 the values follow the recurrence
        (lam - 1) B_k + lam * sum_{i<k} C(k, i) B_i = k q^{k-1},  B_0 = 0,
    exact for rational inputs.  lam = 1 dispatches to the classical Bernoulli
    polynomial B_k(q) = sum_i C(k, i) B_i q^{k-i}.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if lam == 1:
        numbers = _bernoulli_numbers(k)
        return sum(math.comb(k, i) * numbers[i] * q ** (k - i) for i in range(k + 1))
    vals = [Fraction(0) if not isinstance(lam, complex) else 0j]
    for n in range(1, k + 1):
        rhs = n * q ** (n - 1)
        acc = rhs - lam * sum(math.comb(n, i) * vals[i] for i in range(n))
        vals.append(acc / (lam - 1))
    return vals[k]


def mirimanoff_vs_apostol_check(lam, m: int, b: int) -> float:
    """Residual of M_{b-1}(lam, m) = (lam^b B_{m+1}(b, lam) - B_{m+1}(0, lam)) / (m+1).

    Exact (residual 0.0) for rational lam != 1; float residual for complex lam.
    """
    if lam == 1:
        raise ValueError("lam must differ from 1")
    lhs = mirimanoff(lam, m, b)
    rhs = (lam**b * apostol_bernoulli(m + 1, b, lam) - apostol_bernoulli(m + 1, 0, lam)) / (m + 1)
    return float(abs(lhs - rhs))


# -- Dedekind-Carlitz polynomials and relatives ---------------------------------


def carlitz_poly(a: int, b: int) -> BiLaurent:
    """c(q, t; a, b) = sum_{k=1}^{b-1} q^{floor(a*k/b)} t^{k-1}."""
    require_coprime(a, b)
    return BiLaurent({(a * k // b, k - 1): 1 for k in range(1, b)})


def dj_poly(j: int, a: int, b: int) -> BiLaurent:
    """sum_{k=1}^{b-1} e^{-2*pi*i*j*a*k/b} t^{k-1} / q^{pi(k)} with pi(k) = a*k mod b.

    Exact (all scalars 1) when j = 0 mod b; complex coefficients otherwise.
    """
    require_coprime(a, b)
    if j % b == 0:
        return BiLaurent({(-(a * k % b), k - 1): 1 for k in range(1, b)})
    roots = roots_of_unity(b)
    return BiLaurent({(-(a * k % b), k - 1): roots[(-j * a * k) % b] for k in range(1, b)})


def rt_poly(kind: str, m: int, n: int, a: int, b: int) -> BiLaurent:
    """The bivariate floor-sum polynomials specializing to Voronoi sums at q = t = 1.

    kind "R": sum_k ((q^{floor(ak/b)} - 1)/(q - 1))^n ((t^k - 1)/(t - 1))^m.
    kind "T": same with the q-factor (q^{ak} - q^{pi(k)})/(q^b - 1), which equals
    q^{pi(k)} * (1 + q^b + ... + q^{b(floor(ak/b)-1)}) because ak = b*floor(ak/b) + pi(k).
    """
    require_coprime(a, b)
    if m < 0 or n < 0:
        raise ValueError("exponents must be >= 0")
    total = BiLaurent()
    for k in range(1, b):
        fl = a * k // b
        if kind == "R":
            q_factor = from_q(geom_sum(fl))
        elif kind == "T":
            q_factor = from_q(geom_sum(fl, step=b).shift(a * k % b))
        else:
            raise ValueError("kind must be 'R' or 'T'")
        total = total + q_factor**n * from_t(geom_sum(k)) ** m
    return total


def carlitz_floor_sum(a: int, b: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of sum_{k=1}^{b-1} q^{floor(ak/b)}
    = (b-1) q^{a-1} - (q-1) * sum_{k=1}^{a-1} floor(bk/a) q^{k-1}."""
    require_coprime(a, b)
    lhs = LaurentPoly((a * k // b, 1) for k in range(1, b))
    correction = LaurentPoly({k - 1: b * k // a for k in range(1, a)})
    rhs = (b - 1) * monomial(a - 1) - (monomial(1) - 1) * correction
    return lhs, rhs


def carlitz_sawtooth_poly(a: int, b: int) -> LaurentPoly:
    """sum_{k=0}^{b-1} (a*k/b - floor(a*k/b) - 1/2) q^k, exact rational coefficients."""
    require_coprime(a, b)
    return LaurentPoly({k: Fraction(a * k, b) - (a * k // b) - Fraction(1, 2) for k in range(b)})
