#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# General Eulerian numbers A(n,k;a,d) and polynomials T_n(t,a,d) attached to
# the arithmetic progression a, a+d, a+2d, ...
#
# Indexing: k runs over -1..n-1 everywhere (row n has n+1 entries), and
# T_n(t,a,d) = sum_{k=-1}^{n-1} A(n,k;a,d) t^(k+1), T_0 = 1. The base row is
# A(0,-1) = 1. At a = d = 1 the k >= 0 entries are the classical numbers and
# the k = -1 entry vanishes, so T_n(t,1,1) = t A_n(t).
#
# construction:
#
#   Progression                  - the pair (a, d)
#   general_triangle             - rows by A(n,k) = (-a+(k+2)d)A(n-1,k) + (a+(n-k-1)d)A(n-1,k-1)
#   general_number_closed        - sum_{i=0}^{k+1} (-1)^i ((k+2-i)d - a)^n C(n+1,i)
#   general_poly                 - T_n from the triangle or by the derivative recursion
#   general_poly_via_classical   - sum_j C(n,j) d^j A_j(t) (at-a)^(n-j)
#   direct_weighted_sum          - sum_{i=start}^m t^i (a+(i-1)d)^n by direct summation
#
# identity checks:
#
#   general_worpitzky_check        - (a+(i-1)d)^n = sum_j A(n,j) C(i+j,n)
#   general_power_sum_check        - sum_{i<=m} (a+(i-1)d)^n = sum_j A(n,j) C(m+j+1,n+1)
#   general_egf_check              - (t - e^{du(t-1)}) sum T_n u^n/n! = (t-1) e^{au(t-1)}
#   geometric_series_check_prop34  - sum_j t^j (a+jd)^n = -T_n(t,a-d,-d)/(t-1)^(n+1)
#   finite_sum_identity_check      - the two finite-sum forms, which equal sum_{i=2}^m
#   full_sum_identity_check        - corrected finite sum starting at i = 1
#   printed_full_sum_check         - the two forms read as sum_{i=1}^m (fails when a != 0)
#   translation_check              - T_n(t,a+c,-d) = sum_l C(n,l)(c(t-1))^l T_{n-l}(t,a,-d)
#   reflection_check               - A(n,k;a,d) = A(n,n-2-k;d-a,d)

import logging
from fractions import Fraction
from functools import lru_cache
from .tools import ArgumentError, CheckResult, binomial, factorial, scalar_check, poly_check, CACHE_SIZE
from .poly import Poly, USeries, series_exp_linear
from .classical import classical_poly, series_check

logger = logging.getLogger(__name__)

T = Poly.variable('t')

FINITE_SUM_VARIANTS = ('eq24', 'eq25')


class Progression(object):
    '''
    Arithmetic progression a, a+d, a+2d, ...

    :param a: first term (int, Fraction or Rat text)
    :param d: common difference (int, Fraction or Rat text)

    Zero, negative and non-integer values are all allowed.
    '''
    __slots__ = ('a', 'd')

    def __init__(self, a, d):
        self.a = Fraction(a)
        self.d = Fraction(d)

    def term(self, i):
        '''The i-th term a + (i-1)d, counting from i = 1.'''
        return self.a + (i - 1) * self.d

    def __eq__(self, other):
        if not isinstance(other, Progression):
            return NotImplemented
        return self.a == other.a and self.d == other.d

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.a, self.d))

    def __repr__(self):
        return 'Progression(%s, %s)' % (self.a, self.d)

    def __str__(self):
        return '%s:%s' % (self.a, self.d)



def direct_weighted_sum(prog, n, m, start=1):
    '''
    Direct summation sum_{i=start}^m t^i (a+(i-1)d)^n, the left-hand side of
    the finite-sum checks.

    :param prog: Progression or (a, d) pair
    :param int n: power, n >= 0
    :param int m: upper limit; empty ranges give the zero polynomial
    :param int start: 1 or 2
    :return: Poly in t
    '''
    if start not in (1, 2):
        raise ArgumentError('start must be 1 or 2, got %r' % (start,))
    prog = _prog(prog)
    coefficients = [Fraction(0)] * max(m + 1, 0)
    for i in range(start, m + 1):
        coefficients[i] = prog.term(i) ** n
    return Poly(coefficients, 't')




class GeneralTriangle(object):
    '''
    Table of general Eulerian numbers for one progression.

    | triangle.progression: the Progression (a, d)
    | triangle.max_n: largest row stored
    | triangle.rows: rows[n][j] holds A(n, j-1), j = 0..n

    The public accessors speak in the mathematical index k = j-1.
    '''
    def __init__(self, progression, max_n, rows):
        self.progression = progression
        self.max_n = max_n
        self.rows = tuple(tuple(r) for r in rows)

    def row(self, n):
        '''Row n as the tuple (A(n,-1), A(n,0), ..., A(n,n-1)).'''
        if n < 0 or n > self.max_n:
            raise ArgumentError('row %d not in triangle of size %d' % (n, self.max_n))
        return self.rows[n]

    def entry(self, n, k):
        '''A(n,k;a,d); 0 for k <= -2 or k >= n.'''
        row = self.row(n)
        if -1 <= k <= n - 1:
            return row[k + 1]
        return Fraction(0)

    def poly(self, n):
        '''T_n(t,a,d) = sum_k A(n,k) t^(k+1).'''
        return Poly(self.row(n), 't')

    def __repr__(self):
        return 'GeneralTriangle(%r, max_n=%d)' % (self.progression, self.max_n)



def _prog(prog):
    if isinstance(prog, Progression):
        return prog
    a, d = prog
    return Progression(a, d)



@lru_cache(maxsize=CACHE_SIZE)
def _general_triangle(prog, max_n):
    a, d = prog.a, prog.d
    rows = [(Fraction(1),)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        # prev[k+1] = A(n-1,k) for -1 <= k <= n-2
        row = []
        for k in range(-1, n):
            same = prev[k + 1] if k <= n - 2 else 0
            lower = prev[k] if k >= 0 else 0
            row.append((-a + (k + 2) * d) * same + (a + (n - k - 1) * d) * lower)
        rows.append(tuple(row))
    return GeneralTriangle(prog, max_n, rows)



def general_triangle(prog, max_n):
    '''
    General Eulerian numbers by the recurrence, for all k = -1..n-1.

    :param prog: Progression or (a, d) pair
    :param int max_n: last row to compute (>= 0)
    :return: GeneralTriangle
    '''
    if max_n < 0:
        raise ArgumentError('max_n must be nonnegative, got %d' % max_n)
    return _general_triangle(_prog(prog), max_n)



def general_number_closed(n, k, prog):
    '''
    Closed form of A(n,k;a,d); 0 for k <= -2 or k >= n.
    '''
    if n < 0:
        raise ArgumentError('n must be nonnegative, got %d' % n)
    prog = _prog(prog)
    if k <= -2 or k >= n:
        return Fraction(0)
    a, d = prog.a, prog.d
    return sum(((-1) ** i * ((k + 2 - i) * d - a) ** n * binomial(n + 1, i)
                for i in range(k + 2)), Fraction(0))



def general_worpitzky_check(n, prog, i):
    '''(a+(i-1)d)^n against sum_{j=-1}^{n-1} A(n,j) C(i+j, n), at an integer i >= 1.'''
    if i < 1:
        raise ArgumentError('i must be at least 1, got %d' % i)
    prog = _prog(prog)
    tri = general_triangle(prog, n)
    rhs = sum((tri.entry(n, j) * binomial(i + j, n) for j in range(-1, n)), Fraction(0))
    return scalar_check('eq19', {'n': n, 'i': i, 'a': prog.a, 'd': prog.d}, prog.term(i) ** n, rhs)



def general_power_sum_check(prog, n, m):
    '''sum_{i=1}^m (a+(i-1)d)^n against sum_j A(n,j) C(m+j+1, n+1).'''
    prog = _prog(prog)
    tri = general_triangle(prog, n)
    lhs = sum((prog.term(i) ** n for i in range(1, m + 1)), Fraction(0))
    rhs = sum((tri.entry(n, j) * binomial(m + j + 1, n + 1) for j in range(-1, n)), Fraction(0))
    return scalar_check('eq20', {'n': n, 'm': m, 'a': prog.a, 'd': prog.d}, lhs, rhs)



@lru_cache(maxsize=CACHE_SIZE)
def _polys_by_derivative(prog, n):
    # T_{j+1} = (a(t-1) + d(jt+1)) T_j + d t(1-t) T_j'
    a, d = prog.a, prog.d
    polys = [Poly([1], 't')]
    for j in range(n):
        prev = polys[-1]
        factor = (T - 1) * a + (T * j + 1) * d
        polys.append(factor * prev + T * (1 - T) * prev.derivative() * d)
    return tuple(polys)



def general_poly(n, prog, method='triangle'):
    '''
    General Eulerian polynomial T_n(t,a,d).

    :param int n: index, n >= 0
    :param prog: Progression or (a, d) pair
    :param str method: 'triangle' (row of the recurrence) or 'derivative'
                       (first-order recursion in T_n and T_n')
    :return: Poly in t of degree <= n, leading coefficient a^n, constant term (d-a)^n
    '''
    if n < 0:
        raise ArgumentError('n must be nonnegative, got %d' % n)
    prog = _prog(prog)
    if method == 'triangle':
        return general_triangle(prog, n).poly(n)
    elif method == 'derivative':
        return _polys_by_derivative(prog, n)[n]
    else:
        raise ArgumentError("Possible methods are 'triangle', 'derivative', got %r" % method)



def general_poly_via_classical(n, prog):
    '''T_n(t,a,d) = sum_{j=0}^n C(n,j) d^j A_j(t) (at-a)^(n-j).'''
    if n < 0:
        raise ArgumentError('n must be nonnegative, got %d' % n)
    prog = _prog(prog)
    a, d = prog.a, prog.d
    base = (T - 1) * a
    acc = Poly((), 't')
    for j in range(n + 1):
        acc = acc + classical_poly(j) * base ** (n - j) * (binomial(n, j) * d ** j)
    return acc



def general_egf_check(prog, N):
    '''
    Cleared-denominator EGF identity at order N:
    (t - exp(du(t-1))) * sum_{n<=N} T_n(t,a,d) u^n/n! = (t-1) exp(au(t-1)).
    '''
    prog = _prog(prog)
    F = USeries([general_poly(n, prog) * Fraction(1, factorial(n)) for n in range(N + 1)], N)
    lhs = (USeries.constant(T, N) - series_exp_linear((T - 1) * prog.d, N)) * F
    rhs = series_exp_linear((T - 1) * prog.a, N) * (T - 1)
    return series_check('lemma33', {'N': N, 'a': prog.a, 'd': prog.d}, lhs, rhs)



def geometric_series_check_prop34(prog, n, J):
    '''
    Truncated form of sum_{j>=0} t^j (a+jd)^n = -T_n(t,a-d,-d)/(t-1)^(n+1).

    The partial sum up to t^J times (t-1)^(n+1) is compared with
    -T_n(t,a-d,-d) on the coefficients t^0..t^(J-n-1).
    '''
    if J < n + 2:
        raise ArgumentError('J must be at least n+2 (n=%d, J=%d)' % (n, J))
    prog = _prog(prog)
    a, d = prog.a, prog.d
    partial = Poly([(a + j * d) ** n for j in range(J + 1)], 't')
    product = partial * (T - 1) ** (n + 1)
    target = -general_poly(n, Progression(a - d, -d))
    return poly_check('prop34', {'n': n, 'J': J, 'a': a, 'd': d}, product, target, window=J - n - 1)



def _finite_sum_rhs(variant, prog, n, m):
    # both printed right-hand sides, multiplied by (t-1)^(n+1)
    a, d = prog.a, prog.d
    reflected = Progression(a, -d)
    tail = general_poly(n, reflected).shift(2)
    if variant == 'eq24':
        head = Poly((), 't')
        for l in range(n + 1):
            coef = binomial(n, l) * (d * m - d) ** l
            head = head + (T - 1) ** l * general_poly(n - l, reflected) * coef
        return head.shift(m + 1) - tail
    elif variant == 'eq25':
        return general_poly(n, Progression(a + d * (m - 1), -d)).shift(m + 1) - tail
    else:
        raise ArgumentError('Possible variants are %s, got %r' % (', '.join(FINITE_SUM_VARIANTS), variant))



def finite_sum_identity_check(variant, prog, n, m):
    '''
    Finite weighted sum of a progression's powers in cleared form.

    Both printed right-hand sides (variant 'eq24' with the (dm-d)^l expansion,
    'eq25' with the shifted progression) equal
    sum_{i=2}^m t^i (a+(i-1)d)^n; the i = 1 term a^n t is not part of them.

    :param str variant: 'eq24' or 'eq25'
    :param int m: upper summation limit, m >= 2
    '''
    if m < 2:
        raise ArgumentError('m must be at least 2, got %d' % m)
    prog = _prog(prog)
    rhs = _finite_sum_rhs(variant, prog, n, m)
    lhs = direct_weighted_sum(prog, n, m, start=2) * (T - 1) ** (n + 1)
    return poly_check(variant, {'n': n, 'm': m, 'a': prog.a, 'd': prog.d}, lhs, rhs)



def printed_full_sum_check(variant, prog, n, m):
    '''
    The two finite-sum forms compared with sum_{i=1}^m, as printed.
    Fails whenever a^n t != 0, e.g. at n = 1, m = 2 for a != 0.
    '''
    if m < 2:
        raise ArgumentError('m must be at least 2, got %d' % m)
    prog = _prog(prog)
    rhs = _finite_sum_rhs(variant, prog, n, m)
    lhs = direct_weighted_sum(prog, n, m, start=1) * (T - 1) ** (n + 1)
    return poly_check(variant + '-printed', {'n': n, 'm': m, 'a': prog.a, 'd': prog.d}, lhs, rhs)



def full_sum_identity_check(prog, n, m):
    '''
    Corrected finite sum from i = 1:
    sum_{i=1}^m t^i (a+(i-1)d)^n
        = [t^(m+1) T_n(t, a+(m-1)d, -d) - t T_n(t, a-d, -d)] / (t-1)^(n+1)
    checked in cleared form against direct summation.
    '''
    if m < 1:
        raise ArgumentError('m must be at least 1, got %d' % m)
    prog = _prog(prog)
    a, d = prog.a, prog.d
    rhs = (general_poly(n, Progression(a + (m - 1) * d, -d)).shift(m + 1)
           - general_poly(n, Progression(a - d, -d)).shift(1))
    lhs = direct_weighted_sum(prog, n, m, start=1) * (T - 1) ** (n + 1)
    return poly_check('fullsum', {'n': n, 'm': m, 'a': a, 'd': d}, lhs, rhs)



def translation_check(prog, c, n):
    '''T_n(t, a+c, -d) = sum_l C(n,l) (c(t-1))^l T_{n-l}(t, a, -d).'''
    prog = _prog(prog)
    c = Fraction(c)
    a, d = prog.a, prog.d
    lhs = general_poly(n, Progression(a + c, -d))
    rhs = Poly((), 't')
    for l in range(n + 1):
        rhs = rhs + ((T - 1) * c) ** l * general_poly(n - l, Progression(a, -d)) * binomial(n, l)
    return poly_check('translation', {'n': n, 'c': c, 'a': a, 'd': d}, lhs, rhs)



def reflection_check(n, prog):
    '''
    A(n,k;a,d) = A(n,n-2-k;d-a,d) for every k = -1..n-1.
    The reported index on failure is k.
    '''
    prog = _prog(prog)
    a, d = prog.a, prog.d
    row = general_triangle(prog, n).row(n)
    mirrored = general_triangle(Progression(d - a, d), n).row(n)[::-1]
    params = {'n': n, 'a': a, 'd': d}
    for j, (x, y) in enumerate(zip(row, mirrored)):
        if x != y:
            return CheckResult('reflection', params, False, j - 1, x, y)
    return CheckResult('reflection', params, True)
