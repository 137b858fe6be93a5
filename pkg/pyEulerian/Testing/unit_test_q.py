#================================================================================
#    This file is part of pyEulerian.
#    The software package is released under the BSD 2-Clause (FreeBSD) License.
#
#    Copyright (c) by the pyEulerian developers
#================================================================================

import os
import unittest
import pyEulerian
from pyEulerian.Core import qeuler, classical
from pyEulerian.Core.tools import ArgumentError, ResourceError, binomial, factorial
from pyEulerian.Core.poly import Poly
from pyEulerian.Validation import oracle


def qpoly(*coefficients):
    return Poly(coefficients, 'q')


class QEulerianTests(unittest.TestCase):

    def setUp(self):
        self.tri = qeuler.q_triangle(10)


    def checkIdentity(self, result):
        self.assertTrue(result, str(result))


    def test_bracket(self):
        print("testing q_bracket...")
        self.assertTrue(qeuler.q_bracket(0).is_zero())
        self.assertEqual(qeuler.q_bracket(1), 1)
        self.assertEqual(qeuler.q_bracket(4), qpoly(1, 1, 1, 1))
        self.assertEqual(qeuler.q_bracket(4).var, 'q')
        self.assertRaises(ArgumentError, qeuler.q_bracket, -1)


    def test_binomial(self):
        print("testing q_binomial...")
        for n in range(6):
            self.assertEqual(qeuler.q_binomial(n, n), 1)
            self.assertEqual(qeuler.q_binomial(n, 0), 1)
        self.assertEqual(qeuler.q_binomial(4, 2), qpoly(1, 1, 2, 1, 1))
        self.assertTrue(qeuler.q_binomial(2, 3).is_zero())
        for x in range(9):
            for n in range(x + 1):
                self.assertEqual(qeuler.q_binomial(x, n)(1), binomial(x, n))
        self.assertRaises(ArgumentError, qeuler.q_binomial, -1, 0)


    def test_triangle(self):
        print("testing q_triangle...")
        self.assertEqual(self.tri.row(1), (qpoly(1),))
        self.assertEqual(self.tri.row(2), (qpoly(0, 1), qpoly(1)))
        self.assertEqual(self.tri.row(3), (qpoly(0, 0, 0, 1), qpoly(0, 2, 2), qpoly(1)))
        self.assertEqual(self.tri.at(1)[2], [1, 4, 1])
        self.assertTrue(self.tri.entry(3, 3).is_zero())
        self.assertRaises(ArgumentError, qeuler.q_triangle, 0)
        self.assertRaises(ArgumentError, self.tri.row, 11)


    def test_triangle_invariants(self):
        print("testing q = 1 collapse and nonnegative coefficients...")
        ctri = classical.classical_triangle(10)
        for n in range(1, 11):
            row = self.tri.row(n)
            self.assertEqual([p(1) for p in row], list(ctri.row(n)))
            self.assertEqual(sum(p(1) for p in row), factorial(n))
            for p in row:
                for c in p.coefficients:
                    self.assertTrue(c >= 0 and c.denominator == 1)


    def test_carlitz(self):
        print("testing the defining identity of the q-Eulerian numbers...")
        for x in range(1, 6):
            self.checkIdentity(qeuler.carlitz_identity_check(1, x))
        self.checkIdentity(qeuler.carlitz_identity_check(2, 2))
        self.checkIdentity(qeuler.carlitz_identity_check(4, 5))
        for n in range(1, 7):
            for x in range(1, 9):
                self.checkIdentity(qeuler.carlitz_identity_check(n, x))
        self.assertRaises(ArgumentError, qeuler.carlitz_identity_check, 2, 0)


    def test_carlitz_printed(self):
        print("testing the x+k-1 reading with 0-based k...")
        result = qeuler.carlitz_identity_check(2, 2, shift=-1)
        self.assertFalse(result)
        self.assertEqual(result.identity, 'eq10-printed')


    def test_poly(self):
        print("testing q_poly...")
        self.assertEqual(qeuler.q_poly(1), (qpoly(1),))
        self.assertEqual(qeuler.q_poly(2), (qpoly(0, 1), qpoly(1)))
        self.assertEqual(qeuler.q_poly_at(qeuler.q_poly(3), 1), Poly([1, 4, 1]))
        self.assertEqual(qeuler.q_poly_at(qeuler.q_poly(2), 2), Poly([2, 1]))
        for n in range(1, 11):
            self.assertEqual(qeuler.q_poly_at(qeuler.q_poly(n), 1), classical.classical_poly(n))
        self.assertRaises(ArgumentError, qeuler.q_poly, 0)


    def test_from_statistics(self):
        print("testing q_from_statistics on hand-counted tables...")
        # 12: no descent; 21: descent at 1
        table2 = {(1, 0): 1, (0, 1): 1}
        self.assertEqual(qeuler.q_from_statistics(2, 0, table2), qpoly(0, 1))
        self.assertEqual(qeuler.q_from_statistics(2, 1, table2), 1)
        # 123 | 213 312 | 132 231 | 321
        table3 = {(2, 0): 1, (1, 1): 2, (1, 2): 2, (0, 3): 1}
        self.assertEqual(qeuler.q_from_statistics(3, 0, table3), qpoly(0, 0, 0, 1))
        self.assertEqual(qeuler.q_from_statistics(3, 1, table3), qpoly(0, 2, 2))
        self.assertEqual(qeuler.q_from_statistics(3, 2, table3), 1)
        for k in range(3):
            self.checkIdentity(qeuler.q_statistics_check(3, k, table3))
        self.assertTrue(qeuler.q_from_statistics_printed(2, 0, table2).is_zero())
        self.assertFalse(qeuler.q_statistics_check(2, 0, table2, printed=True))
        self.assertRaises(ArgumentError, qeuler.q_from_statistics, 3, 3, table3)


    def test_combinatorial(self):
        print("testing q_combinatorial against the recurrence...")
        self.assertEqual(oracle.q_combinatorial(1, 0), 1)
        self.assertEqual(oracle.q_combinatorial(3, 1)(1), 4)
        self.assertEqual(oracle.q_combinatorial(3, 1), qpoly(0, 2, 2))
        for n in range(1, 7):
            for k in range(n):
                self.assertEqual(oracle.q_combinatorial(n, k), self.tri.entry(n, k))
                self.checkIdentity(oracle.q_combinatorial_check(n, k))
        self.assertRaises(ArgumentError, oracle.q_combinatorial, 3, 3)
        self.assertRaises(ResourceError, oracle.q_combinatorial, 7, 0)


    def test_combinatorial_printed(self):
        print("testing the literal prefactor reading...")
        result = oracle.q_combinatorial_check(2, 0, printed=True)
        self.assertFalse(result)
        self.assertEqual(result.identity, 'eq15-printed')
        self.assertTrue(oracle.q_combinatorial_printed(2, 0).is_zero())


    @unittest.skipUnless(os.environ.get('PYEULERIAN_SLOW'), 'slow tier')
    def test_combinatorial_slow(self):
        print("testing q_combinatorial at n = 7...")
        for k in range(7):
            self.checkIdentity(oracle.q_combinatorial_check(7, k, oracle.Q_SLOW_BOUND))



if __name__ == "__main__":
    print("Running unit tests...")
    unittest.main()
