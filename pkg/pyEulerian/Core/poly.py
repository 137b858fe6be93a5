#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

# Exact arithmetic substrate. Every other module builds on:
#
#   Poly               - dense univariate polynomial over the rationals
#   USeries            - power series in u truncated at a fixed order,
#                        coefficients are Poly
#
#   poly_mul           - exact convolution
#   poly_eval          - Horner evaluation at a rational point
#   series_mul         - truncated Cauchy product
#   series_exp_linear  - exp(c*u) for c a polynomial, truncated
#
# Scalars are fractions.Fraction everywhere (the Rat type). Values are
# immutable once built; operators always return new objects. There is no
# polynomial division: identities with (t-1)^(n+1) denominators are checked
# in cleared-denominator form by the callers.

import logging
from fractions import Fraction
from .tools import ArgumentError, format_rat

logger = logging.getLogger(__name__)


class Poly(object):
    '''
    Dense polynomial c0 + c1*x + ... with Fraction coefficients.

    :param coefficients: iterable of ints/Fractions, index i is the coefficient of x^i
    :param str var: informational label of the variable ('t' or 'q')

    Trailing zeros are stripped, so the zero polynomial stores an empty tuple
    and has degree None.
    '''
    __slots__ = ('coefficients', 'var')

    def __init__(self, coefficients=(), var='t'):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)
        self.var = var


    @classmethod
    def constant(cls, c, var='t'):
        return cls([c], var)


    @classmethod
    def monomial(cls, k, c=1, var='t'):
        '''c * x^k'''
        if k < 0:
            raise ArgumentError('monomial exponent must be nonnegative, got %d' % k)
        return cls([0] * k + [c], var)


    @classmethod
    def variable(cls, var='t'):
        return cls([0, 1], var)


    def _getDegree(self):
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1
    degree = property(_getDegree)


    def is_zero(self):
        return not self.coefficients


    def coefficient(self, i):
        '''Coefficient of x^i, 0 outside the stored range.'''
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)


    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                logger.warning("mixing polynomials in '%s' and '%s'", self.var, other.var)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        return None


    # overloading
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]), self.var)

    __radd__ = __add__


    # overloading
    def __neg__(self):
        return Poly([-c for c in self.coefficients], self.var)


    # overloading
    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)


    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)


    # overloading
    def __mul__(self, other):
        '''
        Overloading * operator.
        Scalars (int/Fraction) scale the coefficients, Polys are convolved.
        '''
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coefficients], self.var)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out, self.var)

    __rmul__ = __mul__


    # overloading
    def __pow__(self, number):
        '''
        Overloading ** operator for nonnegative integer exponents.
        p**0 is 1, also for the zero polynomial.
        '''
        if not isinstance(number, int) or number < 0:
            raise ArgumentError('only nonnegative integer powers are supported for **')
        result = Poly([1], self.var)
        base = self
        while number:
            if number & 1:
                result = result * base
            number >>= 1
            if number:
                base = base * base
        return result


    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == Poly([other]).coefficients
        return NotImplemented


    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


    def __hash__(self):
        return hash(self.coefficients)


    def __call__(self, x):
        '''Horner evaluation at an exact point.'''
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value


    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coefficients)][1:], self.var)


    def shift(self, k):
        '''Multiply by x^k.'''
        if k < 0:
            raise ArgumentError('shift must be nonnegative, got %d' % k)
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coefficients), self.var)


    def to_strings(self):
        '''Ascending coefficient list in canonical Rat text.'''
        return [format_rat(c) for c in self.coefficients]


    def __repr__(self):
        return 'Poly(%s, var=%r)' % (self.to_strings(), self.var)


    def __str__(self):
        '''Human readable form "c0 + c1*t + c2*t^2 + ...", zero terms omitted.'''
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rat(c))
            elif i == 1:
                terms.append('%s*%s' % (format_rat(c), self.var))
            else:
                terms.append('%s*%s^%d' % (format_rat(c), self.var, i))
        if not terms:
            return '0'
        return ' + '.join(terms)



class USeries(object):
    '''
    Power series in u truncated at u^order; coefficient n is a Poly.

    :param coefficients: iterable of Poly (or scalars), index n is the coefficient of u^n
    :param int order: truncation order N; defaults to len(coefficients)-1.
                      Missing slots are zero, extra slots are discarded.
    :param str var: label for scalar coefficients promoted to Poly
    '''
    __slots__ = ('coefficients', 'order')

    def __init__(self, coefficients, order=None, var='t'):
        coeffs = [c if isinstance(c, Poly) else Poly([c], var) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ArgumentError('series order must be nonnegative, got %d' % order)
        coeffs = coeffs[:order + 1]
        coeffs += [Poly((), var)] * (order + 1 - len(coeffs))
        self.coefficients = tuple(coeffs)
        self.order = order


    @classmethod
    def constant(cls, p, order):
        '''The series p + 0*u + ... at the given order.'''
        if not isinstance(p, Poly):
            p = Poly([p])
        return cls([p], order, p.var)


    def coefficient(self, n):
        return self.coefficients[n]


    def _checkOrder(self, other):
        if self.order != other.order:
            raise ArgumentError('series orders differ: %d and %d' % (self.order, other.order))


    # overloading
    def __add__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        self._checkOrder(other)
        return USeries([x + y for x, y in zip(self.coefficients, other.coefficients)], self.order)


    # overloading
    def __neg__(self):
        return USeries([-c for c in self.coefficients], self.order)


    # overloading
    def __sub__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self + (-other)


    # overloading
    def __mul__(self, other):
        '''
        Overloading * operator.
        A USeries operand gives the truncated Cauchy product, a Poly or
        scalar operand scales every coefficient.
        '''
        if isinstance(other, USeries):
            return series_mul(self, other)
        if isinstance(other, (Poly, int, Fraction)):
            return USeries([c * other for c in self.coefficients], self.order)
        return NotImplemented

    __rmul__ = __mul__


    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients


    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


    def __hash__(self):
        return hash((self.order, self.coefficients))


    def __repr__(self):
        return 'USeries(order=%d, %s)' % (self.order, [str(c) for c in self.coefficients])



def poly_mul(p, q):
    '''
    Exact product of two polynomials.
    A label mismatch is logged as a warning, the product is still formed.
    '''
    return p * q



def poly_eval(p, x):
    '''
    Evaluate p at the exact point x (Horner).

    :param p: Poly
    :param x: int or Fraction
    :return: Fraction
    '''
    return p(Fraction(x))



def series_mul(s1, s2):
    '''
    Cauchy product of two series of the same order, truncated at that order.

    :return: USeries with coefficient n = sum_{i+j=n} s1[i]*s2[j]
    '''
    if s1.order != s2.order:
        raise ArgumentError('series orders differ: %d and %d' % (s1.order, s2.order))
    N = s1.order
    out = []
    for n in range(N + 1):
        acc = Poly((), s1.coefficients[0].var)
        for i in range(n + 1):
            a = s1.coefficients[i]
            b = s2.coefficients[n - i]
            if a.is_zero() or b.is_zero():
                continue
            acc = acc + a * b
        out.append(acc)
    return USeries(out, N)



def series_exp_linear(c, order):
    '''
    exp(c*u) truncated at u^order, for c a polynomial (or scalar).

    :param c: Poly in t
    :param int order: truncation order N >= 0
    :return: USeries with coefficient n = c^n / n!
    '''
    if order < 0:
        raise ArgumentError('series order must be nonnegative, got %d' % order)
    if not isinstance(c, Poly):
        c = Poly([c])
    term = Poly([1], c.var)
    out = [term]
    for n in range(1, order + 1):
        term = term * c * Fraction(1, n)
        out.append(term)
    return USeries(out, order, c.var)
