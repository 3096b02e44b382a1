"""Brute-force reference values frozen in the C++ tests.

Uses only fractions and integer arithmetic; shares no code with the library.
Run: python3 tests/oracle/derive.py
"""
from fractions import Fraction as Q
from itertools import combinations
import math


def v2(n):
    n = abs(n)
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def hull_slopes(points):
    """Lower hull by checking every pair: an edge is kept if no point lies below its line."""
    edges = []
    for (i, a), (j, b) in combinations(points, 2):
        slope = Q(b - a, j - i)
        if all(c >= a + slope * (k - i) for k, c in points):
            inner = [k for k, c in points if c == a + slope * (k - i)]
            if min(inner) == i and max(inner) == j:
                edges.append((i, j, -slope))
    return sorted((s, j - i) for i, j, s in edges)


def gauss_min(vals, s):
    terms = [v + i * s for i, v in enumerate(vals)]
    m = min(terms)
    return m, [i for i, t in enumerate(terms) if t == m]


def qnorm_exponent(terms):
    """Largest n with T^-n x in A_0, by scanning n downward."""
    def in_a0(ts):
        for d, a in ts.items():
            if d < 0:
                return False
            scale = math.factorial(d) ** d
            if (a * scale).denominator != 1:
                return False
        return True
    n = min(terms)
    while not in_a0({d - n: a for d, a in terms.items()}):
        n -= 1
    return n


def witness(k):
    j = 0
    while j * (j - bin(j).count("1")) < k:
        j += 1
    return j


print("newton t^2+2t+8 over Q_2:", hull_slopes([(0, v2(8)), (1, v2(2)), (2, v2(1))]))
vals = [v2(8), v2(2), v2(1)]
print("gauss s=3/2:", gauss_min(vals, Q(3, 2)))
print("gauss s=2:", gauss_min(vals, Q(2)))

lam = Q(3, 2)
grid = [Q(1) + Q(k, 8) for k in range(9)]
prof = [(s, min(s, lam) - s) for s in grid]
print("profile (t-l)/t, v(l)=3/2:", [(str(s), str(v)) for s, v in prof])
vmin = min(v for _, v in prof)
vmax = max(v for _, v in prof)
print("extrema:", vmin, vmax, "obstruction:", vmax - vmin)

print("qnorm T:", qnorm_exponent({1: Q(1)}))
print("qnorm 1/2:", qnorm_exponent({0: Q(1, 2)}))
print("qnorm T^2/4:", qnorm_exponent({2: Q(1, 4)}))
print("witness:", [(k, witness(k)) for k in (1, 10, 100, 10000)])
print("witness max j up to 1e4 and bound 2+2sqrt(k) holds:",
      max(witness(k) for k in range(1, 10001)),
      all(witness(k) <= 2 + 2 * math.sqrt(k) for k in range(1, 10001)))

# x = T - lambda, v(lambda) = 1, s = sqrt2: x*y - 1 = -(T/lambda)^K has value K(sqrt2 - 1).
K = 0
while not K * (math.sqrt(2) - 1) > 5:
    K += 1
print("annulus terms for residual > 5:", K)

# Cauchy: x_n = t + z^n at s = 0; v(x_n) = min(0, n) = 0, v(x_{n+1} - x_n) = n.
print("cauchy modulus:", [min(n, n + 1) - 0 - 0 for n in range(1, 6)])

# Theorem centers with m = 2: exponents e_i = s + w p^(i-d-1), p = 3, d = 3.
s, w = Q(1), Q(1, 243)
es = [s + w * Q(3) ** (i - 4) for i in range(1, 4)]
sums = [sum(c) for r in range(4) for c in combinations(es, r)]
print("distinct subset sums (m=2):", len(set(sums)) == len(sums), len(sums))

# Decomposition bound for T1 + T2 split as {T1, T2}: max(2^1, 2^2).
print("multivar upper norm:", max(2 ** 1, 2 ** 2))
