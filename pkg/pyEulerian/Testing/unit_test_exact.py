#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

import unittest
import numpy as np
from fractions import Fraction
import pyEulerian
from pyEulerian.Core.tools import ArgumentError, binomial, factorial, parse_rat, format_rat
from pyEulerian.Core.tools import compare_polys, poly_check, scalar_check
from pyEulerian.Core.poly import Poly, USeries, poly_mul, poly_eval, series_mul, series_exp_linear

T = Poly.variable('t')


class ExactTests(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(0)


    def randomPoly(self, degree=4):
        coeffs = [Fraction(int(p), int(q)) for p, q in
                  zip(self.rng.randint(-9, 10, degree + 1), self.rng.randint(1, 6, degree + 1))]
        return Poly(coeffs, 't')


    def randomSeries(self, order=4):
        return USeries([self.randomPoly(2) for i in range(order + 1)], order)


    def checkCanonical(self, r):
        self.assertTrue(r.denominator > 0)
        self.assertEqual(Fraction(r.numerator, r.denominator), r)
        self.assertEqual(parse_rat(format_rat(r)), r)


    def test_binomial(self):
        print("testing binomial...")
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(7, -1), 0)
        self.assertEqual(binomial(3, 4), 0)
        self.assertEqual(binomial(30, 15), 155117520)
        for n in range(12):
            for k in range(1, n):
                self.assertEqual(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))
        self.assertRaises(ArgumentError, binomial, -1, 0)
        self.assertEqual(factorial(10), 3628800)


    def test_rat_text(self):
        print("testing Rat text form...")
        self.assertEqual(parse_rat('-3/7'), Fraction(-3, 7))
        self.assertEqual(parse_rat('+4/6'), Fraction(2, 3))
        self.assertEqual(parse_rat('12'), 12)
        self.assertEqual(format_rat(Fraction(4, 6)), '2/3')
        self.assertEqual(format_rat(Fraction(-6, 3)), '-2')
        self.assertEqual(format_rat(Fraction(0)), '0')
        self.assertEqual(format_rat(3), '3')
        for bad in ('1/0', '1.5', 'abc', '', '3/-4', '1/2/3'):
            self.assertRaises(ArgumentError, parse_rat, bad)


    def test_rat_canonical(self):
        print("testing canonical form of rational results...")
        for i in range(50):
            p, q, r, s = [int(v) for v in self.rng.randint(1, 40, 4)]
            x, y = Fraction(p, q), Fraction(-r, s)
            for value in (x + y, x - y, x * y, x / y, Fraction(0) * x):
                self.checkCanonical(value)
        self.assertEqual(Fraction(0).denominator, 1)


    def test_poly_mul(self):
        print("testing poly_mul...")
        self.assertEqual(poly_mul(Poly([1, 1]), Poly([1, -1])), Poly([1, 0, -1]))
        self.assertTrue(poly_mul(Poly([1, 2, 3]), Poly()).is_zero())
        self.assertEqual(poly_mul(Poly([1, 4, 1]), Poly([1, 1])), Poly([1, 5, 5, 1]))
        p, q = self.randomPoly(3), self.randomPoly(2)
        if not p.is_zero() and not q.is_zero():
            self.assertEqual((p * q).degree, p.degree + q.degree)


    def test_poly_eval(self):
        print("testing poly_eval...")
        self.assertEqual(poly_eval(Poly([1, 4, 1]), 1), 6)
        self.assertEqual(poly_eval(Poly(), Fraction(5, 7)), 0)
        self.assertEqual(poly_eval(Poly([1, 13, 4]), 2), 43)
        self.assertEqual(poly_eval(Poly([0, 1]), Fraction(-1, 2)), Fraction(-1, 2))


    def test_poly_structure(self):
        print("testing Poly normal form...")
        self.assertEqual(Poly([1, 2, 0, 0]).coefficients, (1, 2))
        self.assertEqual(Poly([1, 2, 0, 0]).degree, 1)
        self.assertEqual(Poly().coefficients, ())
        self.assertIsNone(Poly([0, 0]).degree)
        self.assertEqual(Poly([3]).degree, 0)
        self.assertEqual(Poly([1, 2]).coefficient(5), 0)
        self.assertEqual((T - 1) ** 2, Poly([1, -2, 1]))
        self.assertEqual(Poly([1, 2]) ** 0, 1)
        self.assertEqual(Poly([1, 3, 3, 1]).derivative(), Poly([3, 6, 3]))
        self.assertEqual(Poly([1, 1]).shift(2), Poly([0, 0, 1, 1]))
        self.assertEqual(Poly.monomial(3, 2), Poly([0, 0, 0, 2]))
        self.assertEqual(str(Poly([1, 4, 1])), '1 + 4*t + 1*t^2')
        self.assertEqual(str(Poly()), '0')
        self.assertEqual(Poly([Fraction(1, 2), -1]).to_strings(), ['1/2', '-1'])
        self.assertRaises(ArgumentError, Poly([1, 1]).__pow__, -1)


    def test_poly_labels(self):
        print("testing variable label mismatch warning...")
        with self.assertLogs('pyEulerian.Core.poly', level='WARNING'):
            s = Poly([1], 't') + Poly([0, 1], 'q')
        self.assertEqual(s, Poly([1, 1]))


    def test_ring_axioms(self):
        print("testing distributivity on random polynomials...")
        for i in range(20):
            a, b, c = self.randomPoly(), self.randomPoly(), self.randomPoly()
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a - b) + b, a)


    def test_series_mul(self):
        print("testing series_mul...")
        s = series_mul(USeries([1, 1], 2), USeries([1, -1], 2))
        self.assertEqual(s, USeries([1, 0, -1], 2))
        r = self.randomSeries()
        self.assertEqual(series_mul(r, USeries.constant(1, 4)), r)
        e = series_mul(series_exp_linear(1, 4), series_exp_linear(-1, 4))
        self.assertEqual(e, USeries.constant(1, 4))
        self.assertRaises(ArgumentError, series_mul, USeries([1], 2), USeries([1], 3))


    def test_series_associativity(self):
        print("testing series_mul associativity...")
        for i in range(5):
            a, b, c = self.randomSeries(), self.randomSeries(), self.randomSeries()
            self.assertEqual((a * b) * c, a * (b * c))


    def test_series_exp_linear(self):
        print("testing series_exp_linear...")
        self.assertEqual(series_exp_linear(Poly(), 3), USeries([1, 0, 0, 0], 3))
        e = series_exp_linear(T - 1, 2)
        self.assertEqual(e.coefficient(0), 1)
        self.assertEqual(e.coefficient(1), T - 1)
        self.assertEqual(e.coefficient(2), (T - 1) ** 2 * Fraction(1, 2))
        e = series_exp_linear((T - 1) * 2, 3)
        self.assertEqual(e.coefficient(3), (T - 1) ** 3 * Fraction(4, 3))


    def test_exp_homomorphism(self):
        print("testing exp(c1 u) exp(c2 u) = exp((c1+c2) u)...")
        for i in range(5):
            c1, c2 = self.randomPoly(2), self.randomPoly(2)
            lhs = series_exp_linear(c1, 5) * series_exp_linear(c2, 5)
            self.assertEqual(lhs, series_exp_linear(c1 + c2, 5))


    def test_compare(self):
        print("testing coefficient comparison...")
        self.assertIsNone(compare_polys(Poly([1, 2]), Poly([1, 2])))
        self.assertEqual(compare_polys(Poly([1, 2, 3]), Poly([1, 5])), (1, 2, 5))
        self.assertIsNone(compare_polys(Poly([1, 2, 3]), Poly([1, 2, 4]), window=1))
        result = poly_check('demo', {'n': 1}, Poly([1, 2, 3]), Poly([1, 2]))
        self.assertFalse(result)
        self.assertEqual((result.index, result.lhs, result.rhs), (2, 3, 0))
        self.assertTrue(scalar_check('demo', {}, Fraction(2, 4), Fraction(1, 2)))



if __name__ == "__main__":
    print("Running unit tests...")
    unittest.main()
