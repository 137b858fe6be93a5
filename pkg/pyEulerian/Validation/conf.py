#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

from fractions import Fraction
from ..Core.tools import ArgumentError
from .oracle import DEFAULT_BOUND, SLOW_BOUND, Q_BOUND, Q_SLOW_BOUND


# default largest n per family of checks, used when max_n is None
FAMILY_LIMITS = {
    'classical': 10,           # recurrence, closed forms, polynomial constructions, q = 1 collapse
    'symmetry': 12,            # symmetry, row sums, boundary values
    'faulhaber': 10,
    'worpitzky': 8,            # Worpitzky identities and power sums
    'finite_sum': 6,           # cleared finite sums, truncated geometric series
    'general_finite_sum': 5,
    'carlitz': 6,
}

# default upper limits of the second parameter (m, x or i)
RANGE_LIMITS = {
    'power_sum': 30,
    'worpitzky': 20,
    'finite_sum': 10,
    'general_finite_sum': 8,
    'carlitz': 8,
}

DEFAULT_GRID = ((1, 1), (2, 3), (0, 1), (-1, 2), (Fraction(1, 2), Fraction(-1, 3)), (3, 3))


class verify_conf(object):
    '''
    Limits of a verification run.

    | conf.max_n: largest n for every family, None for the per-family defaults
    | conf.max_m: cap on the second parameter (m, x, i) of every family
    | conf.order: truncation order of the generating-function checks
    | conf.grid: tuple of (a, d) pairs as Fractions
    | conf.slow: raise the enumeration bounds to 10 (oracle) and 7 (q)
    '''
    def __init__(self, max_n=None, max_m=30, order=10, grid=DEFAULT_GRID, slow=False):
        self.max_n = max_n
        self.max_m = max_m
        self.order = order
        self.grid = grid
        self.slow = slow

    def _getmn(self):
        return self._max_n
    def _setmn(self, value):
        if value is not None and int(value) < 1:
            raise ArgumentError('max_n must be at least 1, got %s' % value)
        self._max_n = None if value is None else int(value)
    max_n = property(_getmn, _setmn)

    def _getmm(self):
        return self._max_m
    def _setmm(self, value):
        if int(value) < 2:
            raise ArgumentError('max_m must be at least 2, got %s' % value)
        self._max_m = int(value)
    max_m = property(_getmm, _setmm)

    def _getor(self):
        return self._order
    def _setor(self, value):
        if int(value) < 1:
            raise ArgumentError('order must be at least 1, got %s' % value)
        self._order = int(value)
    order = property(_getor, _setor)

    def _getgr(self):
        return self._grid
    def _setgr(self, value):
        grid = tuple((Fraction(a), Fraction(d)) for a, d in value)
        if not grid:
            raise ArgumentError('the progression grid is empty')
        self._grid = grid
    grid = property(_getgr, _setgr)

    def _getsl(self):
        return self._slow
    def _setsl(self, value):
        self._slow = bool(value)
    slow = property(_getsl, _setsl)

    @property
    def oracle_bound(self):
        return SLOW_BOUND if self.slow else DEFAULT_BOUND

    @property
    def q_bound(self):
        return Q_SLOW_BOUND if self.slow else Q_BOUND

    def n_limit(self, family):
        '''Largest n checked for a family; max_n overrides every default.'''
        if self.max_n is not None:
            return self.max_n
        if family == 'enumeration':
            return self.oracle_bound
        if family == 'q_enumeration':
            return self.q_bound
        return FAMILY_LIMITS[family]

    def m_limit(self, family):
        return min(RANGE_LIMITS[family], self.max_m)

    def __repr__(self):
        return ('verify_conf(max_n=%s, max_m=%d, order=%d, grid=%s, slow=%s)'
                % (self.max_n, self.max_m, self.order,
                   ';'.join('%s:%s' % p for p in self.grid), self.slow))
