"""Brute-force reference computations used as independent test oracles.

Nothing here goes through the library's multisection or closed-form code
paths: membership is enumerated directly, root-of-unity sums are evaluated
literally in complex arithmetic.
"""

import cmath
from fractions import Fraction


def pair_members(a: int, b: int, bound: int) -> set:
    """All i*a + j*b <= bound with i, j >= 0, by double enumeration."""
    out = set()
    for i in range(bound // a + 1):
        rem = bound - i * a
        for j in range(rem // b + 1):
            out.add(i * a + j * b)
    return out


def pair_gaps(a: int, b: int) -> list:
    bound = a * b  # the largest gap of <a, b> is ab - a - b
    members = pair_members(a, b, bound)
    return [x for x in range(bound + 1) if x not in members]


def closure_members(gens, bound: int) -> set:
    """Members of <gens> up to bound by breadth-first closure under addition."""
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in members:
                members.add(y)
                frontier.append(y)
    return members


def closure_gaps(gens) -> list:
    bound = min(gens) * max(gens) + max(gens)
    members = closure_members(gens, bound)
    return [x for x in range(bound + 1) if x not in members]


def literal_class_avg(terms, n: int, k: int, q: float) -> complex:
    """(1/n) * sum_j e^{-2 pi i jk/n} f(e^{2 pi i j/n} q) evaluated literally."""
    total = 0j
    for j in range(n):
        w = cmath.exp(2j * cmath.pi * j / n)
        phase = cmath.exp(-2j * cmath.pi * j * k / n)
        total += phase * sum(float(c) * (w * q) ** e for e, c in terms)
    return total / n


def dedekind_kb_form(a: int, b: int) -> Fraction:
    """sum_{k=1}^{b-1} (k/b) * ((a*k/b)) — the second displayed form, exact."""
    total = Fraction(0)
    for k in range(1, b):
        x = Fraction(a * k, b)
        st = Fraction(0) if x.denominator == 1 else x - (x.numerator // x.denominator) - Fraction(1, 2)
        total += Fraction(k, b) * st
    return total


def dedekind_root_form(a: int, b: int) -> float:
    """-(1/b) sum_k 1/((eps^{ak}-1)(eps^k-1)) + (b-1)/(4b), literally in complex."""
    total = 0j
    for k in range(1, b):
        ea = cmath.exp(2j * cmath.pi * a * k / b)
        e1 = cmath.exp(2j * cmath.pi * k / b)
        total += 1 / ((ea - 1) * (e1 - 1))
    value = -total / b + (b - 1) / (4 * b)
    return value.real


def dedekind_quotient_form(a: int, b: int) -> float:
    """(1/4b) sum_k (1+eps^k)/(1-eps^k) * (1+eps^{-ak})/(1-eps^{-ak})."""
    total = 0j
    for k in range(1, b):
        e1 = cmath.exp(2j * cmath.pi * k / b)
        ea = cmath.exp(-2j * cmath.pi * a * k / b)
        total += (1 + e1) / (1 - e1) * (1 + ea) / (1 - ea)
    return (total / (4 * b)).real
