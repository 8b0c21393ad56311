#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <vector>

namespace dickman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// a_{k,n} = sum_{j=0}^k (-1)^{j+1} C(k,j) j^n, for 0 <= k <= n.
BigInt a_coeff(int k, int n);

/// Stirling number of the second kind from the triangle
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
BigInt stirling2(int n, int k);

/// n-th cumulant of Bernoulli(x) as an integer polynomial in x.
struct CumulantPoly {
  int n = 0;
  std::vector<BigInt> coeffs;  // coeffs[i] multiplies x^i

  int degree() const;
  Rational evaluate(const Rational &x) const;
  bool operator==(const CumulantPoly &) const = default;
};

/// c_n(x) = x(1-x) sum_{k=1}^{n-1} a_{k,n-1} x^{k-1}, n >= 2.
CumulantPoly cumulant_explicit(int n);

/// c_1 = x, c_{j+1} = x(1-x) c_j'.
CumulantPoly cumulant_recurrence(int n);

/// Coefficients a_{k,n}/k of x^{k-1}, k = 2..n, in the expansion of
/// c_n(x)/x - 1. Element 0 belongs to k = 2.
std::vector<Rational> cumulant_ratio_series(int n);

/// alpha_j^{(m,n)} = (n-m)^{-1} sum_{k=m+1}^n k^{j-1} (k c_j(1/k) - 1), exact.
Rational alpha_j_exact(int m, int n, int j);
double alpha_j(int m, int n, int j);

/// "n,k,a_kn,stirling2" rows for 1 <= k <= n <= n_max.
void write_a_table_csv(int n_max, std::ostream &out);

/// "n,power,coefficient" rows of c_n for 1 <= n <= n_max.
void write_poly_table_csv(int n_max, std::ostream &out);

} // namespace dickman
