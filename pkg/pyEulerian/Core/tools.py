#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Small helpers shared by every module:
#
#   ArgumentError   - contract violation in an argument
#   ResourceError   - enumeration bound exceeded
#   binomial        - exact C(n,k), 0 outside 0 <= k <= n
#   factorial       - exact n!
#   parse_rat       - Rat text ("-3/7", "12") to Fraction
#   format_rat      - Fraction to canonical text
#   CheckResult     - outcome of an identity check
#   compare_polys   - first differing coefficient of two polynomials

import re
import logging
from fractions import Fraction
from scipy.special import comb, factorial as _factorial

Rat = Fraction

# entries kept by the memoised tables; their keys come from user input
CACHE_SIZE = 128

_RAT_PATTERN = re.compile(r'^[+-]?\d+(/\d+)?$')


class ArgumentError(ValueError):
    '''Raised when an operation is called outside its contract.'''
    pass



class ResourceError(Exception):
    '''Raised when a brute-force enumeration would exceed its bound.'''
    pass



def binomial(n, k):
    '''
    Exact binomial coefficient C(n,k).

    :param int n: top argument, must be nonnegative
    :param int k: bottom argument, any integer
    :return: C(n,k) as a python int, 0 when k < 0 or k > n
    '''
    if n < 0:
        raise ArgumentError('binomial top argument must be nonnegative, got %d' % n)
    if k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))



def factorial(n):
    '''Exact n! for n >= 0.'''
    if n < 0:
        raise ArgumentError('factorial of negative integer %d' % n)
    return int(_factorial(n, exact=True))



def parse_rat(text):
    '''
    Parse the textual Rat form: optional sign, integer, or "p/q".

    :param str text: e.g. "-3/7", "12", "+4/6"
    :return: Fraction in canonical form
    '''
    text = str(text).strip()
    if not _RAT_PATTERN.match(text):
        raise ArgumentError('not a rational number: %r (expected "p" or "p/q")' % text)
    if '/' in text and int(text.split('/')[1]) == 0:
        raise ArgumentError('zero denominator in %r' % text)
    return Fraction(text)



def format_rat(r):
    '''Canonical text of a Rat: "p/q" with q > 0, or an integer.'''
    return str(Fraction(r))



class CheckResult(object):
    '''
    Outcome of one identity check.

    | result.identity: short name of the identity, e.g. 'eq17'
    | result.params: dict of the parameter point
    | result.passed: True iff both sides agreed exactly
    | result.index: first mismatching coefficient index (None for scalars or on success)
    | result.lhs, result.rhs: the two values at that index (or the two scalars)

    A CheckResult is truthy iff the identity held, so it can be used
    wherever a boolean is expected.
    '''
    def __init__(self, identity, params, passed, index=None, lhs=None, rhs=None):
        self.identity = identity
        self.params = dict(params)
        self.passed = bool(passed)
        self.index = index
        self.lhs = lhs
        self.rhs = rhs

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        return 'CheckResult(%s, %s, passed=%s)' % (self.identity, self.params, self.passed)

    def __str__(self):
        value = self.identity + ' ' + ' '.join('%s=%s' % kv for kv in sorted(self.params.items()))
        if self.passed:
            return value + ': identity holds'
        if self.index is None:
            return value + ': lhs %s != rhs %s' % (self.lhs, self.rhs)
        return value + ': coefficient %d differs, lhs %s != rhs %s' % (self.index, self.lhs, self.rhs)



def compare_polys(lhs, rhs, window=None):
    '''
    Find the first coefficient where two polynomials differ.

    :param lhs: Poly
    :param rhs: Poly
    :param int window: if given, only indices 0..window are compared
    :return: (index, lhs coefficient, rhs coefficient) or None if equal
    '''
    top = max(len(lhs.coefficients), len(rhs.coefficients)) - 1
    if window is not None:
        top = window
    for i in range(top + 1):
        a = lhs.coefficient(i)
        b = rhs.coefficient(i)
        if a != b:
            return i, a, b
    return None



def poly_check(identity, params, lhs, rhs, window=None):
    '''Build a CheckResult from two polynomials (optionally a truncation window).'''
    diff = compare_polys(lhs, rhs, window)
    if diff is None:
        return CheckResult(identity, params, True)
    index, a, b = diff
    logging.getLogger(__name__).debug('%s %s: coefficient %d differs', identity, params, index)
    return CheckResult(identity, params, False, index, a, b)



def scalar_check(identity, params, lhs, rhs):
    '''Build a CheckResult from two exact scalars.'''
    return CheckResult(identity, params, lhs == rhs, None, lhs, rhs)
