"""Shared fixtures and independent oracles for the test suite."""

from fractions import Fraction

import pytest

from cdga.dga import DGA, Differential, TabularDGA
from cdga.gca import Algebra


# -- model builders --------------------------------------------------------

@pytest.fixture
def cp2():
    alg = Algebra([("a", 2), ("x", 5)])
    return DGA(alg, Differential(alg, {"x": alg.gen("a") ** 3}))


@pytest.fixture
def q111():
    from cdga.constructions import q_model
    return q_model((1, 1, 1))


# -- independent oracles ---------------------------------------------------

def naive_rref(rows, ncols):
    """Plain Fraction Gauss-Jordan, written independently of the kernel."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    pr = 0
    for c in range(ncols):
        pivot = next((r for r in range(pr, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[pr], m[pivot] = m[pivot], m[pr]
        inv = 1 / m[pr][c]
        m[pr] = [x * inv for x in m[pr]]
        for r in range(len(m)):
            if r != pr and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[pr])]
        pivots.append(c)
        pr += 1
    return [tuple(r) for r in m[:pr]], pivots


def poincare_coefficient(generator_degrees, k):
    """Coefficient of t^k in prod_even (1-t^d)^-1 * prod_odd (1+t^d)."""
    series = [0] * (k + 1)
    series[0] = 1
    for d in generator_degrees:
        if d % 2:
            nxt = series[:]
            for i in range(k + 1 - d):
                nxt[i + d] += series[i]
            series = nxt
        else:
            for i in range(d, k + 1):   # geometric series in place
                series[i] += series[i - d]
    return series[k]


def sphere_product_tabular(sphere_degrees, cap):
    """(H^*(S^{n_1} x ... x S^{n_m}), 0) truncated above degree cap.

    Basis: square-free subsets of the sphere classes; products are unions
    with Koszul signs, zero on overlap.
    """
    m = len(sphere_degrees)
    subsets = []
    for mask in range(1 << m):
        deg = sum(sphere_degrees[i] for i in range(m) if mask >> i & 1)
        if deg <= cap:
            subsets.append((mask, deg))

    def label(mask):
        if mask == 0:
            return "1"
        return "s" + "".join(str(i) for i in range(m) if mask >> i & 1)

    def mul_sign(mask_a, mask_b):
        # Koszul sign of interleaving the sorted factor lists
        sign = 1
        for i in range(m):
            if not (mask_b >> i & 1) or sphere_degrees[i] % 2 == 0:
                continue
            higher_a = sum(1 for j in range(i + 1, m)
                           if mask_a >> j & 1 and sphere_degrees[j] % 2)
            if higher_a % 2:
                sign = -sign
        return sign

    basis = [(label(mask), deg) for mask, deg in subsets]
    degset = {mask for mask, _ in subsets}
    products = {}
    for mask_a, deg_a in subsets:
        for mask_b, deg_b in subsets:
            if mask_a == 0 or mask_b == 0 or label(mask_a) > label(mask_b):
                continue
            if mask_a & mask_b or deg_a + deg_b > cap:
                products[(label(mask_a), label(mask_b))] = {}
                continue
            union = mask_a | mask_b
            if union not in degset:
                products[(label(mask_a), label(mask_b))] = {}
                continue
            products[(label(mask_a), label(mask_b))] = {
                label(union): mul_sign(mask_a, mask_b)}
    return TabularDGA(basis, products, {})


def gysin_betti(base_summary, euler, cap):
    """Betti numbers of a circle bundle from the Gysin sequence:
    b_r = dim coker(cup e: H^{r-2} -> H^r) + dim ker(cup e: H^{r-1} -> H^{r+1}).
    """
    from cdga import exactla
    from cdga.exactla import Matrix

    s = base_summary

    def cup_matrix(r):
        """Matrix of cup-with-euler from H^r to H^{r+2}."""
        if r < 0 or r > s.max_degree:
            return Matrix([], cols=0)
        if r + 2 > s.max_degree:
            return Matrix([[Fraction(0)] * s.betti[r]], cols=s.betti[r]) \
                if s.betti[r] else Matrix([], cols=0)
        cols = [s.class_coords(rep * euler, degree=r + 2)[1]
                for rep in s.representatives[r]]
        return Matrix([[col[i] for col in cols]
                       for i in range(s.betti[r + 2])], cols=s.betti[r])

    betti = []
    for r in range(cap + 1):
        coker = (s.betti[r] - cup_matrix(r - 2).rank()) if r <= s.max_degree \
            else 0
        kern = 0
        if 0 <= r - 1 <= s.max_degree:
            m = cup_matrix(r - 1)
            kern = s.betti[r - 1] - m.rank()
        betti.append(coker + kern)
    return betti
