#include "dickman/cumulants.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <ostream>
#include <stdexcept>

namespace dickman {

namespace {

void check_pair(int k, int n, const char *what)
{
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument(fmt::format("{}: need 0 <= k <= n, got k={} n={}", what, k, n));
}

BigInt power(BigInt base, unsigned exp)
{
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1u)
      result *= base;
    exp >>= 1;
    if (exp > 0)
      base *= base;
  }
  return result;
}

void trim(std::vector<BigInt> &c)
{
  while (c.size() > 1 && c.back() == 0)
    c.pop_back();
}

// p(x) * x(1 - x)
std::vector<BigInt> times_x_one_minus_x(const std::vector<BigInt> &p)
{
  std::vector<BigInt> out(p.size() + 2, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i + 2] -= p[i];
  }
  trim(out);
  return out;
}

} // namespace

BigInt a_coeff(int k, int n)
{
  check_pair(k, n, "a_coeff");
  BigInt sum = 0;
  BigInt binom = 1;  // C(k, j)
  for (int j = 0; j <= k; ++j) {
    const BigInt term = binom * power(BigInt(j), static_cast<unsigned>(n));
    if (j % 2 == 0)
      sum -= term;
    else
      sum += term;
    binom = binom * (k - j) / (j + 1);
  }
  return sum;
}

BigInt stirling2(int n, int k)
{
  check_pair(k, n, "stirling2");
  // row[j] = S(i, j) while sweeping i = 0..n
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

int CumulantPoly::degree() const
{
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0)
      return i;
  return -1;
}

Rational CumulantPoly::evaluate(const Rational &x) const
{
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

CumulantPoly cumulant_explicit(int n)
{
  if (n < 2)
    throw std::invalid_argument(fmt::format("cumulant_explicit: need n >= 2, got {}", n));
  std::vector<BigInt> inner(n - 1);
  for (int k = 1; k <= n - 1; ++k)
    inner[k - 1] = a_coeff(k, n - 1);
  return {n, times_x_one_minus_x(inner)};
}

CumulantPoly cumulant_recurrence(int n)
{
  if (n < 1)
    throw std::invalid_argument(fmt::format("cumulant_recurrence: need n >= 1, got {}", n));
  std::vector<BigInt> c = {BigInt(0), BigInt(1)};
  for (int step = 1; step < n; ++step) {
    std::vector<BigInt> deriv(c.size() > 1 ? c.size() - 1 : 1, BigInt(0));
    for (std::size_t i = 1; i < c.size(); ++i)
      deriv[i - 1] = c[i] * static_cast<long long>(i);
    c = times_x_one_minus_x(deriv);
  }
  return {n, std::move(c)};
}

std::vector<Rational> cumulant_ratio_series(int n)
{
  if (n < 2)
    throw std::invalid_argument(fmt::format("cumulant_ratio_series: need n >= 2, got {}", n));
  std::vector<Rational> out;
  out.reserve(n - 1);
  for (int k = 2; k <= n; ++k)
    out.emplace_back(a_coeff(k, n), BigInt(k));
  return out;
}

Rational alpha_j_exact(int m, int n, int j)
{
  if (j < 1)
    throw std::invalid_argument("alpha_j: need j >= 1");
  if (m < 2 || n <= m)
    throw std::invalid_argument(fmt::format("alpha_j: need 2 <= m < n, got m={} n={}", m, n));
  const CumulantPoly c = j == 1 ? cumulant_recurrence(1) : cumulant_explicit(j);
  Rational sum = 0;
  for (int k = m + 1; k <= n; ++k) {
    const Rational cj = c.evaluate(Rational(1, k));
    sum += Rational(power(BigInt(k), static_cast<unsigned>(j - 1))) * (k * cj - 1);
  }
  return sum / (n - m);
}

double alpha_j(int m, int n, int j)
{
  return static_cast<double>(alpha_j_exact(m, n, j));
}

void write_a_table_csv(int n_max, std::ostream &out)
{
  out << "n,k,a_kn,stirling2\n";
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      fmt::print(out, "{},{},{},{}\n", n, k, a_coeff(k, n).str(), stirling2(n, k).str());
}

void write_poly_table_csv(int n_max, std::ostream &out)
{
  out << "n,power,coefficient\n";
  for (int n = 1; n <= n_max; ++n) {
    const CumulantPoly c = n == 1 ? cumulant_recurrence(1) : cumulant_explicit(n);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
      fmt::print(out, "{},{},{}\n", n, i, c.coeffs[i].str());
  }
}

} // namespace dickman
