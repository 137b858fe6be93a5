#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Classical Eulerian numbers A(n,k) (permutations of 1..n with k ascents) and
# Eulerian polynomials A_n(t) = sum_k A(n,k) t^k, A_0(t) = 1.
#
# construction:
#
#   classical_triangle        - rows 1..max_n by A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)
#   classical_number_closed   - alternating sum of (k-i+1)^n C(n+1,i)
#   classical_poly            - A_n(t) from the triangle, from the binomial
#                               recursion, or from the derivative recursion
#   bernoulli_unsigned        - |B_2r| (Bernoulli's unsigned convention)
#
# identity checks (all return a CheckResult, truthy iff the identity holds):
#
#   faulhaber_check                 - Bernoulli power-sum formula
#   worpitzky_eval                  - x^n = sum_k C(x+k,n) A(n,k)
#   power_sum_check_prop21          - sum i^n = sum_k A(n,k) C(m+k+1,n+1)
#   classical_finite_sum_identity   - sum_{i<=m} i^n t^i, (t-1) and (1-t) forms
#   geometric_series_check_eq5      - sum_j t^j (j+1)^n = A_n(t)/(1-t)^(n+1)
#   egf_check_eq7                   - sum A_n(t) u^n/n! = (t-1)/(t - exp(u(t-1)))

import logging
from fractions import Fraction
from functools import lru_cache
from .tools import ArgumentError, binomial, factorial, scalar_check, poly_check, CheckResult, CACHE_SIZE
from .poly import Poly, USeries, series_exp_linear

logger = logging.getLogger(__name__)

T = Poly.variable('t')
ONE = Poly([1], 't')

POLY_METHODS = ('triangle', 'recursion4', 'derivative23')


class ClassicalTriangle(object):
    '''
    Table of classical Eulerian numbers.

    | triangle.max_n: largest row stored
    | triangle.rows: rows[n] is the tuple (A(n,0), ..., A(n,n-1)); rows[0] is empty
    '''
    def __init__(self, max_n, rows):
        self.max_n = max_n
        self.rows = tuple(tuple(r) for r in rows)

    def row(self, n):
        if n < 0 or n > self.max_n:
            raise ArgumentError('row %d not in triangle of size %d' % (n, self.max_n))
        return self.rows[n]

    def entry(self, n, k):
        '''A(n,k); 0 when k is out of range and for every k at n = 0.'''
        row = self.row(n)
        if 0 <= k < len(row):
            return row[k]
        return 0

    def poly(self, n):
        '''A_n(t); A_0(t) = 1 by convention.'''
        if n == 0:
            return ONE
        return Poly(self.row(n), 't')

    def __repr__(self):
        return 'ClassicalTriangle(max_n=%d)' % self.max_n

    def __str__(self):
        return '\n'.join(' '.join(str(x) for x in r) for r in self.rows[1:])



class BernoulliTable(object):
    '''
    Unsigned Bernoulli numbers: values[r] = |B_2r|, values[0] = 1.
    Signs enter the power-sum formula explicitly as (-1)^(r+1).
    '''
    def __init__(self, values):
        self.values = tuple(values)

    def __getitem__(self, r):
        return self.values[r]

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return 'BernoulliTable(%s)' % ', '.join(str(v) for v in self.values)



@lru_cache(maxsize=CACHE_SIZE)
def classical_triangle(max_n):
    '''
    Eulerian numbers by the recurrence, A(n,0) = 1, A(n,k) = 0 for k >= n.

    :param int max_n: last row to compute (>= 0)
    :return: ClassicalTriangle
    '''
    if max_n < 0:
        raise ArgumentError('max_n must be nonnegative, got %d' % max_n)
    rows = [()]
    prev = ()
    for n in range(1, max_n + 1):
        row = [1]
        for k in range(1, n):
            left = prev[k] if k < len(prev) else 0
            row.append((k + 1) * left + (n - k) * prev[k - 1])
        rows.append(tuple(row))
        prev = row
    return ClassicalTriangle(max_n, rows)



def classical_number_closed(n, k):
    '''
    A(n,k) = sum_{i=0}^{k} (-1)^i (k-i+1)^n C(n+1,i), 0 outside 0 <= k <= n-1.
    '''
    if n < 1:
        raise ArgumentError('closed form needs n >= 1, got %d' % n)
    if k < 0 or k >= n:
        return 0
    return sum((-1) ** i * (k - i + 1) ** n * binomial(n + 1, i) for i in range(k + 1))



@lru_cache(maxsize=CACHE_SIZE)
def _polys_by_recursion4(n):
    # A_n(t) = sum_{k<n} C(n,k) A_k(t) (t-1)^(n-1-k)
    polys = [ONE]
    for j in range(1, n + 1):
        acc = Poly((), 't')
        for k in range(j):
            acc = acc + polys[k] * (T - 1) ** (j - 1 - k) * binomial(j, k)
        polys.append(acc)
    return tuple(polys)


@lru_cache(maxsize=CACHE_SIZE)
def _polys_by_derivative23(n):
    # A_n(t) = (1 + (n-1)t) A_{n-1}(t) + t(1-t) A'_{n-1}(t)
    polys = [ONE]
    for j in range(1, n + 1):
        prev = polys[-1]
        polys.append((1 + (j - 1) * T) * prev + T * (1 - T) * prev.derivative())
    return tuple(polys)



def classical_poly(n, method='triangle'):
    '''
    Eulerian polynomial A_n(t).

    :param int n: degree index, n >= 0
    :param str method: 'triangle' (coefficients from the recurrence),
                       'recursion4' (binomial recursion in (t-1)),
                       'derivative23' (first-order derivative recursion)
    :return: Poly in t; every method yields the same polynomial
    '''
    if n < 0:
        raise ArgumentError('n must be nonnegative, got %d' % n)
    if method == 'triangle':
        return classical_triangle(n).poly(n)
    elif method == 'recursion4':
        return _polys_by_recursion4(n)[n]
    elif method == 'derivative23':
        return _polys_by_derivative23(n)[n]
    else:
        raise ArgumentError('Possible methods are %s, got %r' % (', '.join(POLY_METHODS), method))



@lru_cache(maxsize=CACHE_SIZE)
def bernoulli_unsigned(max_r):
    '''
    |B_2r| for r = 1..max_r, from the signed recurrence
    sum_{j=0}^{m} C(m+1,j) B_j = 0, B_0 = 1.

    :param int max_r: number of even-index values (>= 1)
    :return: BernoulliTable
    '''
    if max_r < 1:
        raise ArgumentError('max_r must be at least 1, got %d' % max_r)
    B = [Fraction(1)]
    for m in range(1, 2 * max_r + 1):
        s = sum(binomial(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return BernoulliTable([abs(B[2 * r]) for r in range(max_r + 1)])



def faulhaber_rhs(n, m):
    '''Right-hand side of the Bernoulli power-sum formula with unsigned B_2r.'''
    table = bernoulli_unsigned(max(1, n // 2))
    m = Fraction(m)
    value = m ** (n + 1) / (n + 1) + m ** n / 2
    tail = Fraction(0)
    for r in range(1, n // 2 + 1):
        tail += binomial(n + 1, 2 * r) * m ** (n - 2 * r + 1) * (-1) ** (r + 1) * table[r]
    return value + tail / (n + 1)



def faulhaber_check(n, m):
    '''sum_{i=1}^m i^n against the Bernoulli formula, exactly.'''
    lhs = sum(Fraction(i) ** n for i in range(1, m + 1))
    return scalar_check('eq1', {'n': n, 'm': m}, lhs, faulhaber_rhs(n, m))



def worpitzky_eval(n, x):
    '''
    Worpitzky's identity x^n = sum_k C(x+k, n) A(n,k) at a nonnegative integer x.
    '''
    tri = classical_triangle(n)
    rhs = sum(binomial(x + k, n) * tri.entry(n, k) for k in range(n))
    return scalar_check('eq17', {'n': n, 'x': x}, x ** n, rhs)



def power_sum_check_prop21(n, m):
    '''sum_{i=1}^m i^n = sum_k A(n,k) C(m+k+1, n+1).'''
    tri = classical_triangle(n)
    lhs = sum(i ** n for i in range(1, m + 1))
    rhs = sum(tri.entry(n, k) * binomial(m + k + 1, n + 1) for k in range(n))
    return scalar_check('prop21', {'n': n, 'm': m}, lhs, rhs)



def classical_finite_sum_identity(variant, n, m):
    '''
    Finite weighted power sum sum_{i=1}^m i^n t^i in cleared-denominator form.

    variant 'eq2' multiplies both sides by (t-1)^(n+1):
        sum_{l=1}^n (-1)^(n+l) C(n,l) m^l t^(m+1) (t-1)^l A_{n-l}(t)
          + (-1)^n t (t^m - 1) A_n(t)
    variant 'eq3' multiplies both sides by (1-t)^(n+1):
        -t^(m+1) sum_{k=0}^n C(n,k) m^(n-k) (1-t)^(n-k) A_k(t) + t A_n(t)

    :return: CheckResult with the first differing coefficient on failure
    '''
    lhs = Poly([0] + [i ** n for i in range(1, m + 1)], 't')
    tm1 = Poly.monomial(m + 1)
    if variant == 'eq2':
        lhs = lhs * (T - 1) ** (n + 1)
        rhs = (-1) ** n * T * (Poly.monomial(m) - 1) * classical_poly(n)
        for l in range(1, n + 1):
            term = tm1 * (T - 1) ** l * classical_poly(n - l)
            rhs = rhs + term * ((-1) ** (n + l) * binomial(n, l) * m ** l)
    elif variant == 'eq3':
        lhs = lhs * (1 - T) ** (n + 1)
        inner = Poly((), 't')
        for k in range(n + 1):
            inner = inner + (1 - T) ** (n - k) * classical_poly(k) * (binomial(n, k) * m ** (n - k))
        rhs = T * classical_poly(n) - tm1 * inner
    else:
        raise ArgumentError("Possible variants are 'eq2', 'eq3', got %r" % variant)
    return poly_check(variant, {'n': n, 'm': m}, lhs, rhs)



def geometric_series_check_eq5(n, J):
    '''
    Truncated form of sum_{j>=0} t^j (j+1)^n = A_n(t)/(1-t)^(n+1).

    The partial sum up to t^J times (1-t)^(n+1) is compared with A_n(t) on
    the coefficients t^0..t^(J-n-1).
    '''
    if J < n + 2:
        raise ArgumentError('J must be at least n+2 (n=%d, J=%d)' % (n, J))
    partial = Poly([(j + 1) ** n for j in range(J + 1)], 't')
    product = partial * (1 - T) ** (n + 1)
    return poly_check('eq5', {'n': n, 'J': J}, product, classical_poly(n), window=J - n - 1)



def series_check(identity, params, lhs, rhs):
    '''Compare two USeries coefficientwise; the index reported is the u-degree.'''
    for i in range(lhs.order + 1):
        a, b = lhs.coefficient(i), rhs.coefficient(i)
        if a != b:
            logger.debug('%s %s: u^%d coefficient differs', identity, params, i)
            return CheckResult(identity, params, False, i, str(a), str(b))
    return CheckResult(identity, params, True)



def egf_check_eq7(N):
    '''
    (t - exp(u(t-1))) * sum_{n<=N} A_n(t) u^n/n! = t - 1 at order N.
    '''
    F = USeries([classical_poly(n) * Fraction(1, factorial(n)) for n in range(N + 1)], N)
    G = USeries.constant(T, N) - series_exp_linear(T - 1, N)
    return series_check('eq7', {'N': N}, G * F, USeries.constant(T - 1, N))
