#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Brute-force ground truth, independent of every recurrence in Core:
#
#   Perm                      - a permutation of 1..n, checked on construction
#   ascent_count              - #{j : p_j < p_{j+1}}
#   descent_count             - #{j : p_j > p_{j+1}}
#   major_index               - sum of the descent positions j (1-based)
#   reverse                   - p_n ... p_1
#   eulerian_by_enumeration   - permutations of 1..n counted by ascents
#   maj_ascent_table          - a(n,k,i) = #{perm : k ascents, maj = i}
#   q_combinatorial           - A(n,k;q) from the enumerated (ascents, maj) table
#
# direct_weighted_sum lives in Core.general and is re-exported here as the
# summation oracle.
#
# Permutations are produced in lexicographic order by itertools.permutations
# and processed in blocks of rows of a numpy matrix, so memory stays bounded
# at n = 10.

import itertools
import logging
import numpy as np
from ..Core.tools import ArgumentError, ResourceError
from ..Core.general import direct_weighted_sum
from ..Core.qeuler import q_from_statistics, q_from_statistics_printed, q_statistics_check

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 8
SLOW_BOUND = 10
Q_BOUND = 6
Q_SLOW_BOUND = 7
BLOCK_SIZE = 40320


class Perm(object):
    '''
    A permutation p_1 ... p_n of 1..n.

    :param entries: sequence of the n distinct integers 1..n
    '''
    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ArgumentError('not a permutation of 1..%d: %s' % (len(entries), entries))
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'Perm(%s)' % (self.entries,)



def _entries(p):
    if isinstance(p, Perm):
        return p.entries
    return Perm(p).entries



def ascent_count(p):
    '''Number of positions j with p_j < p_{j+1}.'''
    e = _entries(p)
    return sum(1 for j in range(len(e) - 1) if e[j] < e[j + 1])



def descent_count(p):
    e = _entries(p)
    return sum(1 for j in range(len(e) - 1) if e[j] > e[j + 1])



def major_index(p):
    '''Sum of the (1-based) positions j with p_j > p_{j+1}.'''
    e = _entries(p)
    return sum(j + 1 for j in range(len(e) - 1) if e[j] > e[j + 1])



def reverse(p):
    return Perm(_entries(p)[::-1])



def all_perms(n):
    '''All permutations of 1..n in lexicographic order.'''
    for entries in itertools.permutations(range(1, n + 1)):
        yield Perm(entries)



def check_bound(n, bound):
    '''Validate an enumeration size against its bound.'''
    if n < 1:
        raise ArgumentError('enumeration needs n >= 1, got %d' % n)
    if n > bound:
        raise ResourceError('enumerating %d! permutations exceeds the bound n <= %d' % (n, bound))



def perm_blocks(n, block_size=BLOCK_SIZE):
    '''
    Yield the permutations of 1..n as int8 matrices of at most block_size rows,
    in lexicographic order.
    '''
    it = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(it, block_size))
        if not block:
            return
        yield np.array(block, dtype=np.int8).reshape(len(block), n)



def perm_statistics(n, bound=DEFAULT_BOUND):
    '''
    Yield (ascents, maj) integer vectors block by block for all perms of 1..n.
    '''
    check_bound(n, bound)
    positions = np.arange(1, n, dtype=np.int64)
    for P in perm_blocks(n):
        asc = (P[:, :-1] < P[:, 1:]).sum(axis=1)
        maj = ((P[:, :-1] > P[:, 1:]) * positions).sum(axis=1)
        yield asc, maj



def eulerian_by_enumeration(n, bound=DEFAULT_BOUND):
    '''
    Count the permutations of 1..n by number of ascents.

    :param int n: 1 <= n <= bound
    :param int bound: enumeration bound (DEFAULT_BOUND, or SLOW_BOUND for the slow tier)
    :return: list of n ints, entry k = #{perm with k ascents}
    '''
    counts = np.zeros(n, dtype=np.int64)
    for asc, maj in perm_statistics(n, bound):
        counts += np.bincount(asc, minlength=n)
    logger.debug('enumerated %d permutations of 1..%d', int(counts.sum()), n)
    return [int(c) for c in counts]



def maj_ascent_table(n, bound=DEFAULT_BOUND):
    '''
    The table a(n,k,i): number of permutations of 1..n with k ascents and
    major index i.

    :return: dict {(k, i): count} holding the nonzero entries, ordered by (k, i)
    '''
    table = np.zeros((n, n * (n - 1) // 2 + 1), dtype=np.int64)
    for asc, maj in perm_statistics(n, bound):
        np.add.at(table, (asc, maj), 1)
    ks, iis = np.nonzero(table)
    return dict(((int(k), int(i)), int(table[k, i])) for k, i in zip(ks, iis))



def q_combinatorial(n, k, bound=Q_BOUND):
    '''
    A(n,k;q) from the (ascents, maj) table of all permutations of 1..n.

    :param int n: 1 <= n <= bound
    :param int k: 0 <= k <= n-1
    :param int bound: enumeration bound (Q_BOUND, Q_SLOW_BOUND for the slow tier)
    :return: Poly in q, equal to q_triangle(n).entry(n, k)
    '''
    return q_from_statistics(n, k, maj_ascent_table(n, bound))



def q_combinatorial_printed(n, k, bound=Q_BOUND):
    return q_from_statistics_printed(n, k, maj_ascent_table(n, bound))



def q_combinatorial_check(n, k, bound=Q_BOUND, printed=False):
    return q_statistics_check(n, k, maj_ascent_table(n, bound), printed)
