"""Brute-force recomputation of the expected values frozen into the unit tests.

Works straight from the definitions (sums over permutations, atoms and
multinomial weights) with Python fractions, sharing no code with the library.
"""
from fractions import Fraction as F
from itertools import permutations, product
from math import factorial, prod
import sys


def seqs(k, n):
    return list(product(range(k), repeat=n))


def counts(x, k):
    return tuple(x.count(i) for i in range(k))


def count_vectors(k, n):
    # (n,0,..) first, like the library order
    return sorted({counts(x, k) for x in seqs(k, n)}, reverse=True)


def indicator(k, n, x):
    return {y: F(int(y == x)) for y in seqs(k, n)}


def apply_perm(pi, x):
    return tuple(x[pi[i]] for i in range(len(x)))


def symmetrize(f, k, n):
    perms = list(permutations(range(n)))
    return {x: sum(f[apply_perm(pi, x)] for pi in perms) / len(perms) for x in seqs(k, n)}


def hy(f, k, n):
    out = {}
    for m in count_vectors(k, n):
        atom = [x for x in seqs(k, n) if counts(x, k) == m]
        out[m] = sum(f[x] for x in atom) / len(atom)
    return out


def multinomial(m):
    return factorial(sum(m)) // prod(factorial(c) for c in m)


def bernstein(m, theta):
    return multinomial(m) * prod(t**c for t, c in zip(theta, m))


def elevate(coeffs, k, n):
    # c'(m) = sum_x m_x/(n+1) c(m - e_x)
    out = {}
    for m in count_vectors(k, n + 1):
        total = F(0)
        for x in range(k):
            if m[x] > 0:
                prev = tuple(c - (i == x) for i, c in enumerate(m))
                total += F(m[x], n + 1) * coeffs[prev]
        out[m] = total
    return out


def rank(rows):
    rows = [list(r) for r in rows]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                q = rows[i][c] / rows[r][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def kernel_dimension(k, n):
    xs = seqs(k, n)
    rows = []
    for pi in permutations(range(n)):
        for x in xs:
            # f - pi^t f for f = 1_x, as a row over xs
            lifted = {y: F(int(apply_perm(pi, y) == x)) for y in xs}
            rows.append([F(int(y == x)) - lifted[y] for y in xs])
    return rank(rows)


failures = []


def expect(name, got, want):
    if got != want:
        failures.append(f"{name}: got {got}, want {want}")


# permutations
expect("cycle on (a,b,c)", apply_perm((1, 2, 0), (0, 1, 2)), (1, 2, 0))
swap_ab = {x: indicator(2, 2, (0, 1))[apply_perm((1, 0), x)] for x in seqs(2, 2)}
expect("swap lift of 1_ab", swap_ab, indicator(2, 2, (1, 0)))
expect("ex(1_ab)", [symmetrize(indicator(2, 2, (0, 1)), 2, 2)[x] for x in seqs(2, 2)], [0, F(1, 2), F(1, 2), 0])
expect("kernel dim {a,b}^2", kernel_dimension(2, 2), 1)
expect("kernel dim {a,b}^3", kernel_dimension(2, 3), 4)
expect("kernel dim {a,b,c}^3", kernel_dimension(3, 3), 17)
expect("kernel dim N=1", kernel_dimension(2, 1), 0)

# counts
expect("atom size (1,1,1)", sum(1 for x in seqs(3, 3) if counts(x, 3) == (1, 1, 1)), 6)
expect("count vectors {a,b,c}^3", len(count_vectors(3, 3)), 10)
expect("hy(1_ab)", list(hy(indicator(2, 2, (0, 1)), 2, 2).values()), [0, F(1, 2), 0])
f = {x: F(0) for x in seqs(3, 3)}
f[(0, 1, 2)] += 1
f[(2, 1, 0)] += 2
f[(0, 0, 1)] -= 1
h = hy(f, 3, 3)
expect("hy abc3 (1,1,1)", h[(1, 1, 1)], F(1, 2))
expect("hy abc3 (2,1,0)", h[(2, 1, 0)], F(-1, 3))
expect("multinomial (2,1,1)", multinomial((2, 1, 1)), 12)

# bernstein
expect("B_(1,1)(1/2,1/2)", bernstein((1, 1), (F(1, 2), F(1, 2))), F(1, 2))
expect("B_(2,1,1)(1/2,1/4,1/4)", bernstein((2, 1, 1), (F(1, 2), F(1, 4), F(1, 4))), F(3, 16))
expect("theta_a^2 at (1/3,2/3)", bernstein((2, 0), (F(1, 3), F(2, 3))), F(1, 9))
expect("Mn(1_ab) at (1/3,2/3)", sum(hy(indicator(2, 2, (0, 1)), 2, 2)[m] * bernstein(m, (F(1, 3), F(2, 3)))
                                     for m in count_vectors(2, 2)), F(2, 9))
b11 = {(2, 0): F(0), (1, 1): F(1), (0, 2): F(0)}
expect("B_(1,1) at degree 3", list(elevate(b11, 2, 2).values()), [0, F(2, 3), F(2, 3), 0])
pos = {(2, 0): F(1), (1, 1): F(-1, 2), (0, 2): F(1)}
expect("(1,-1/2,1) at degree 3", list(elevate(pos, 2, 2).values()), [1, 0, 0, 1])
neg = {(2, 0): F(1), (1, 1): F(-3, 2), (0, 2): F(1)}
expect("negative fixture at (1/2,1/2)", sum(neg[m] * bernstein(m, (F(1, 2), F(1, 2))) for m in neg), F(-1, 4))
q4 = elevate(elevate({(2, 0): F(0), (1, 1): F(1, 2), (0, 2): F(0)}, 2, 2), 2, 3)
q4[(2, 2)] -= F(1, 6)
expect("theta_a theta_b - theta_a^2 theta_b^2 at degree 4", list(q4.values()), [0, F(1, 4), F(1, 6), F(1, 4), 0])

# desirability
sym = {x: F(int(x in [(0, 1), (1, 0)])) - F(1, 2) for x in seqs(2, 2)}
expect("natural extension generator", list(hy(sym, 2, 2).values()), [F(-1, 2), F(1, 2), F(-1, 2)])
kern = {x: indicator(2, 2, (0, 1))[x] - indicator(2, 2, (1, 0))[x] for x in seqs(2, 2)}
expect("hy of kernel direction", list(hy(kern, 2, 2).values()), [0, 0, 0])
c = indicator(2, 2, (0, 1))
expect("separating functional on generator", sum(c[x] * kern[x] for x in c), 1)
expect("separating functional on target", sum(c[x] * -kern[x] for x in c), -1)

# oracles
expect("tables over 3 options", prod(2 ** sum(s) - 1 for r in range(1, 4) for s in
                                     [t for t in product([0, 1], repeat=3) if sum(t) == r]), 189)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("all derived values reproduced")
