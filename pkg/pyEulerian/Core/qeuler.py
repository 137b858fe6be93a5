#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Carlitz q-Eulerian numbers A(n,k;q), k = 0..n-1, polynomials in q with
# nonnegative integer coefficients that reduce to A(n,k) at q = 1.
#
#   q_bracket               - [x] = 1 + q + ... + q^(x-1)
#   q_binomial              - Gaussian binomial by the q-Pascal recurrence
#   q_triangle              - A(n,k;q) = q^(n-1-k)[k+1]A(n-1,k;q) + [n-k]A(n-1,k-1;q)
#   q_poly                  - A_n(t,q) as the t-indexed tuple of q-polynomials
#   carlitz_identity_check  - [x]^n = sum_k A(n,k;q) qbinom(x+k, n)
#   q_from_statistics       - A(n,k;q) assembled from an (ascents, maj) table
#   q_statistics_check      - that assembly against the recurrence entry
#
# Index conventions. k is 0-based here (row 2 is [q, 1]). The defining
# identity is usually printed with a 1-based index K = k+1, which turns the
# binomial top x+K-1 into x+k. In the same way, with j = n-1-k descents the
# prefactor exponent (n-K+1)(n-K)/2 becomes j(j+1)/2, the smallest major index
# among permutations with j descents, and the inner sum runs over
# i = maj - j(j+1)/2. The literal 0-based readings are kept as
# carlitz_identity_check(shift=-1) and q_from_statistics_printed; both fail
# already at n = 2.

import logging
from functools import lru_cache
from .tools import ArgumentError, CACHE_SIZE, poly_check
from .poly import Poly

logger = logging.getLogger(__name__)

Q = Poly.variable('q')


def q_bracket(x):
    '''
    q-analog of a nonnegative integer: (1-q^x)/(1-q) = 1 + q + ... + q^(x-1).

    :param int x: x >= 0; [0] is the zero polynomial
    :return: Poly in q
    '''
    if x < 0:
        raise ArgumentError('q_bracket needs x >= 0, got %d' % x)
    return Poly([1] * x, 'q')



@lru_cache(maxsize=4096)
def _q_binomial(x, n):
    if n == 0:
        return Poly([1], 'q')
    if n > x:
        return Poly((), 'q')
    return _q_binomial(x - 1, n - 1) + _q_binomial(x - 1, n).shift(n)



def q_binomial(x, n):
    '''
    Gaussian binomial [x choose n] as a polynomial in q.

    q-Pascal: [x, n] = [x-1, n-1] + q^n [x-1, n]; 1 for n = 0, 0 for n > x.
    '''
    if x < 0 or n < 0:
        raise ArgumentError('q_binomial needs x, n >= 0, got (%d, %d)' % (x, n))
    return _q_binomial(x, n)



class QTriangle(object):
    '''
    Table of q-Eulerian numbers.

    | triangle.max_n: largest row stored
    | triangle.rows: rows[n] = (A(n,0;q), ..., A(n,n-1;q)), rows[0] is empty
    '''
    def __init__(self, max_n, rows):
        self.max_n = max_n
        self.rows = tuple(tuple(r) for r in rows)

    def row(self, n):
        if n < 1 or n > self.max_n:
            raise ArgumentError('row %d not in q-triangle of size %d' % (n, self.max_n))
        return self.rows[n]

    def entry(self, n, k):
        row = self.row(n)
        if 0 <= k < n:
            return row[k]
        return Poly((), 'q')

    def at(self, q):
        '''All entries evaluated at an exact q; rows 1..max_n.'''
        return [[p(q) for p in self.rows[n]] for n in range(1, self.max_n + 1)]

    def __repr__(self):
        return 'QTriangle(max_n=%d)' % self.max_n



@lru_cache(maxsize=CACHE_SIZE)
def q_triangle(max_n):
    '''
    q-Eulerian numbers by the recurrence, A(1,0;q) = 1, out-of-range terms 0.

    :param int max_n: last row (>= 1)
    :return: QTriangle
    '''
    if max_n < 1:
        raise ArgumentError('max_n must be at least 1, got %d' % max_n)
    zero = Poly((), 'q')
    rows = [(), (Poly([1], 'q'),)]
    for n in range(2, max_n + 1):
        prev = rows[-1]
        row = []
        for k in range(n):
            same = prev[k] if k < n - 1 else zero
            lower = prev[k - 1] if k >= 1 else zero
            row.append((q_bracket(k + 1) * same).shift(n - 1 - k) + q_bracket(n - k) * lower)
        rows.append(tuple(row))
    return QTriangle(max_n, rows)



def q_poly(n):
    '''
    A_n(t,q) = sum_k A(n,k;q) t^k, as the tuple of q-coefficients indexed by t-power.
    '''
    if n < 1:
        raise ArgumentError('q_poly needs n >= 1, got %d' % n)
    return q_triangle(n).row(n)



def q_poly_at(coefficients, q):
    '''Specialise A_n(t,q) at an exact q; returns a Poly in t.'''
    return Poly([c(q) for c in coefficients], 't')



def carlitz_identity_check(n, x, shift=0):
    '''
    [x]^n = sum_{k=0}^{n-1} A(n,k;q) qbinom(x+k+shift, n), exactly in q.

    :param int n: n >= 1
    :param int x: x >= 1
    :param int shift: 0 for the identity that holds with 0-based k,
                      -1 for the literal x+k-1 reading
    '''
    if x < 1:
        raise ArgumentError('x must be at least 1, got %d' % x)
    lhs = q_bracket(x) ** n
    rhs = Poly((), 'q')
    for k, entry in enumerate(q_poly(n)):
        rhs = rhs + entry * q_binomial(x + k + shift, n)
    identity = 'eq10' if shift == 0 else 'eq10-printed'
    return poly_check(identity, {'n': n, 'x': x}, lhs, rhs)



def _check_k(n, k):
    if not 0 <= k <= n - 1:
        raise ArgumentError('k must be in 0..%d, got %d' % (n - 1, k))



def q_from_statistics(n, k, table):
    '''
    Assemble A(n,k;q) from the joint (ascents, maj) distribution:
    q^(j(j+1)/2) * sum_{i=0}^{k(n-k-1)} a'(i) q^i, with j = n-1-k and
    a'(i) the number of permutations with k ascents and maj = i + j(j+1)/2.

    :param int n: n >= 1
    :param int k: 0 <= k <= n-1
    :param table: dict {(ascents, maj): count} over all permutations of 1..n
    :return: Poly in q
    '''
    _check_k(n, k)
    j = n - 1 - k
    offset = j * (j + 1) // 2
    inner = [0] * (k * (n - k - 1) + 1)
    for (ascents, maj), count in table.items():
        if ascents == k:
            inner[maj - offset] += count
    return Poly(inner, 'q').shift(offset)



def q_from_statistics_printed(n, k, table):
    '''
    Literal 0-based reading: q^((n-k+1)(n-k)/2) * sum_i a(n, n-k, i) q^i with
    a counting (ascents, maj). It does not reproduce the recurrence.
    '''
    _check_k(n, k)
    inner = [0] * (n * (n - 1) // 2 + 1)
    for (ascents, maj), count in table.items():
        if ascents == n - k:
            inner[maj] += count
    return Poly(inner, 'q').shift((n - k + 1) * (n - k) // 2)



def q_statistics_check(n, k, table, printed=False):
    '''Compare the permutation-statistic form with the recurrence entry.'''
    if printed:
        lhs, identity = q_from_statistics_printed(n, k, table), 'eq15-printed'
    else:
        lhs, identity = q_from_statistics(n, k, table), 'eq15'
    return poly_check(identity, {'n': n, 'k': k}, lhs, q_triangle(n).entry(n, k))
