#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

import unittest
from fractions import Fraction
import pyEulerian
from pyEulerian.Core import classical
from pyEulerian.Core.tools import ArgumentError, factorial
from pyEulerian.Core.poly import Poly


class ClassicalTests(unittest.TestCase):

    def setUp(self):
        self.tri = classical.classical_triangle(12)


    def checkIdentity(self, result):
        self.assertTrue(result, str(result))


    def test_triangle(self):
        print("testing classical_triangle...")
        self.assertEqual(self.tri.row(1), (1,))
        self.assertEqual(self.tri.row(3), (1, 4, 1))
        self.assertEqual(self.tri.row(5), (1, 26, 66, 26, 1))
        self.assertEqual(self.tri.entry(3, 1), 4)
        self.assertEqual(self.tri.entry(3, 3), 0)
        self.assertEqual(self.tri.entry(3, -1), 0)
        self.assertEqual(self.tri.entry(0, 0), 0)
        self.assertEqual(classical.classical_triangle(0).max_n, 0)
        self.assertRaises(ArgumentError, classical.classical_triangle, -1)


    def test_triangle_invariants(self):
        print("testing row sums, symmetry and first column...")
        for n in range(1, 13):
            row = self.tri.row(n)
            self.assertEqual(sum(row), factorial(n))
            self.assertEqual(row, row[::-1])
            self.assertEqual(row[0], 1)


    def test_closed_form(self):
        print("testing classical_number_closed...")
        self.assertEqual(classical.classical_number_closed(3, 1), 4)
        self.assertEqual(classical.classical_number_closed(6, 2), 302)
        self.assertEqual(classical.classical_number_closed(4, 4), 0)
        self.assertEqual(classical.classical_number_closed(4, -1), 0)
        for n in range(1, 11):
            self.assertEqual(classical.classical_number_closed(n, 0), 1)
            for k in range(n):
                self.assertEqual(classical.classical_number_closed(n, k), self.tri.entry(n, k))


    def test_poly(self):
        print("testing classical_poly...")
        self.assertEqual(classical.classical_poly(0), 1)
        self.assertEqual(classical.classical_poly(3), Poly([1, 4, 1]))
        self.assertEqual(classical.classical_poly(4), Poly([1, 11, 11, 1]))
        for n in range(11):
            reference = classical.classical_poly(n)
            for method in classical.POLY_METHODS:
                self.assertEqual(classical.classical_poly(n, method), reference)
        self.assertRaises(ArgumentError, classical.classical_poly, 3, 'fft')


    def test_bernoulli(self):
        print("testing bernoulli_unsigned...")
        table = classical.bernoulli_unsigned(5)
        self.assertEqual(table[0], 1)
        self.assertEqual(table[1], Fraction(1, 6))
        self.assertEqual(table[2], Fraction(1, 30))
        self.assertEqual(table[3], Fraction(1, 42))
        self.assertEqual(table[5], Fraction(5, 66))
        for r in range(1, 6):
            self.assertTrue(table[r] > 0)


    def test_faulhaber(self):
        print("testing the Bernoulli power-sum formula...")
        result = classical.faulhaber_check(1, 10)
        self.checkIdentity(result)
        self.assertEqual(result.lhs, 55)
        result = classical.faulhaber_check(4, 5)
        self.checkIdentity(result)
        self.assertEqual(result.rhs, 979)
        for n in range(1, 11):
            for m in range(1, 31):
                self.checkIdentity(classical.faulhaber_check(n, m))


    def test_worpitzky(self):
        print("testing Worpitzky's identity...")
        for n in range(1, 6):
            self.assertEqual(classical.worpitzky_eval(n, 0).lhs, 0)
        result = classical.worpitzky_eval(3, 2)
        self.checkIdentity(result)
        self.assertEqual(result.rhs, 8)
        self.assertEqual(classical.worpitzky_eval(5, 7).lhs, 16807)
        for n in range(1, 9):
            for x in range(21):
                self.checkIdentity(classical.worpitzky_eval(n, x))


    def test_power_sum(self):
        print("testing sum of powers through Eulerian numbers...")
        self.assertEqual(classical.power_sum_check_prop21(1, 1).lhs, 1)
        self.assertEqual(classical.power_sum_check_prop21(2, 3).rhs, 14)
        self.assertEqual(classical.power_sum_check_prop21(3, 10).lhs, 3025)
        for n in range(1, 9):
            for m in range(1, 21):
                self.checkIdentity(classical.power_sum_check_prop21(n, m))


    def test_finite_sums(self):
        print("testing the finite weighted power sums...")
        self.checkIdentity(classical.classical_finite_sum_identity('eq2', 1, 1))
        self.checkIdentity(classical.classical_finite_sum_identity('eq3', 1, 1))
        self.checkIdentity(classical.classical_finite_sum_identity('eq2', 3, 4))
        for variant in ('eq2', 'eq3'):
            for n in range(1, 7):
                for m in range(1, 11):
                    self.checkIdentity(classical.classical_finite_sum_identity(variant, n, m))
        self.assertRaises(ArgumentError, classical.classical_finite_sum_identity, 'eq4', 1, 1)


    def test_finite_sum_small_cases(self):
        print("testing hand-expanded finite sums...")
        # (t + 2t^2)(t-1)^2 = 2t^4 - 3t^3 + t = 2t^3(t-1) - t(t^2-1)
        self.checkIdentity(classical.classical_finite_sum_identity('eq2', 1, 2))
        # t(1-t)^2 = t - 2t^2 + t^3 = t - t^2(1 + (1-t))
        self.checkIdentity(classical.classical_finite_sum_identity('eq3', 1, 1))
        # the t^(m+1) factor
        self.assertEqual(Poly.monomial(3), classical.T ** 3)
        self.assertEqual(classical.T.shift(2), classical.T ** 3)


    def test_geometric_series(self):
        print("testing the truncated geometric series...")
        self.checkIdentity(classical.geometric_series_check_eq5(0, 2))
        self.checkIdentity(classical.geometric_series_check_eq5(1, 5))
        self.checkIdentity(classical.geometric_series_check_eq5(3, 10))
        for n in range(9):
            self.checkIdentity(classical.geometric_series_check_eq5(n, n + 12))
        self.assertRaises(ArgumentError, classical.geometric_series_check_eq5, 3, 4)


    def test_egf(self):
        print("testing the exponential generating function...")
        for N in (1, 4, 8, 10):
            self.checkIdentity(classical.egf_check_eq7(N))



if __name__ == "__main__":
    print("Running unit tests...")
    unittest.main()
