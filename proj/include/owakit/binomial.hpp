#pragma once

// Exact binomial coefficients and the binomial OWA weight matrix
//   w_ji = C(n-i, j-1) / C(n, j),   i, j = 1..n
// with the convention C(p, q) = 0 when p < q. Entries are exact rationals
// for moderate n; a multiplicative floating-point path covers large n,
// where raw binomials would overflow any fixed-width integer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace owakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest n for which the exact-rational path is the default backing for
// floating-point weight queries. Beyond it the multiplicative path is used.
inline constexpr int kExactWeightLimit = 64;

/// C(p, q) as an arbitrary-precision integer; 0 when p < q.
inline BigInt binomial(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0)
    throw std::invalid_argument("binomial: arguments must be nonnegative, got (" +
                                std::to_string(p) + ", " + std::to_string(q) + ")");
  if (q > p) return 0;
  if (q > p - q) q = p - q;
  BigInt result = 1;
  for (std::int64_t t = 1; t <= q; ++t) {
    result *= (p - q + t);
    result /= t;  // exact: product of t consecutive integers is divisible by t!
  }
  return result;
}

namespace detail {

inline void check_weight_indices(int n, int j, int i) {
  if (n < 2) throw std::invalid_argument("binomial weights: dimension n must be >= 2, got " + std::to_string(n));
  if (j < 1 || j > n)
    throw std::out_of_range("binomial weights: level j=" + std::to_string(j) + " outside 1.." + std::to_string(n));
  if (i < 1 || i > n)
    throw std::out_of_range("binomial weights: index i=" + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace detail

/// w_ji = C(n-i, j-1)/C(n, j) as an exact rational.
inline Rational binomial_weight_exact(int n, int j, int i) {
  detail::check_weight_indices(n, j, i);
  if (i + j > n + 1) return Rational(0);
  return Rational(binomial(n - i, j - 1), binomial(n, j));
}

/// w_ji evaluated in floating point as
///   [j/(n-j+1)] * prod_{t=0}^{j-2} (n-i-t)/(n-t),
/// a product of ratios <= 1 scaled once; never forms a raw binomial.
inline double binomial_weight_fp(int n, int j, int i) {
  detail::check_weight_indices(n, j, i);
  if (i + j > n + 1) return 0.0;
  double acc = 1.0;
  for (int t = 0; t <= j - 2; ++t) acc *= double(n - i - t) / double(n - t);
  return acc * double(j) / double(n - j + 1);
}

/// w_ji as a double: exact rational (correctly rounded) for n <= 64,
/// multiplicative evaluation beyond.
inline double binomial_weight(int n, int j, int i) {
  if (n <= kExactWeightLimit) return binomial_weight_exact(n, j, i).convert_to<double>();
  return binomial_weight_fp(n, j, i);
}

/// Row j of the weight matrix, exact. Uses the in-row recurrence
///   w_j1 = j/n,  w_{j,i+1} = w_ji * (n-i-j+1)/(n-i).
inline std::vector<Rational> binomial_weight_row_exact(int n, int j) {
  detail::check_weight_indices(n, j, 1);
  std::vector<Rational> row(static_cast<std::size_t>(n));
  Rational w(j, n);
  for (int i = 1; i <= n; ++i) {
    row[static_cast<std::size_t>(i - 1)] = w;
    if (i + j >= n + 1) {
      w = 0;  // remaining entries are null
    } else if (i < n) {
      w *= Rational(n - i - j + 1, n - i);
    }
  }
  return row;
}

/// Row j of the weight matrix as doubles; exact-backed for n <= 64.
inline std::vector<double> binomial_weight_row(int n, int j) {
  detail::check_weight_indices(n, j, 1);
  std::vector<double> row(static_cast<std::size_t>(n), 0.0);
  if (n <= kExactWeightLimit) {
    auto exact = binomial_weight_row_exact(n, j);
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = exact[static_cast<std::size_t>(i)].convert_to<double>();
    return row;
  }
  double w = double(j) / double(n);
  for (int i = 1; i <= n; ++i) {
    row[static_cast<std::size_t>(i - 1)] = w;
    if (i + j >= n + 1) {
      w = 0.0;
    } else if (i < n) {
      w *= double(n - i - j + 1) / double(n - i);
    }
  }
  return row;
}

/// Column i of the weight matrix (entries j = 1..n), exact. Uses
///   w_1i = 1/n,  w_{j+1,i} = w_ji * (n-i-j+1)(j+1) / (j(n-j)).
inline std::vector<Rational> binomial_weight_col_exact(int n, int i) {
  detail::check_weight_indices(n, 1, i);
  std::vector<Rational> col(static_cast<std::size_t>(n));
  Rational w(1, n);
  for (int j = 1; j <= n; ++j) {
    col[static_cast<std::size_t>(j - 1)] = w;
    if (i + j >= n + 1) {
      w = 0;
    } else if (j < n) {
      w *= Rational(BigInt(n - i - j + 1) * (j + 1), BigInt(j) * (n - j));
    }
  }
  return col;
}

/// Column i as doubles; exact-backed for n <= 64.
inline std::vector<double> binomial_weight_col(int n, int i) {
  detail::check_weight_indices(n, 1, i);
  std::vector<double> col(static_cast<std::size_t>(n), 0.0);
  if (n <= kExactWeightLimit) {
    auto exact = binomial_weight_col_exact(n, i);
    for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = exact[static_cast<std::size_t>(j)].convert_to<double>();
    return col;
  }
  double w = 1.0 / double(n);
  for (int j = 1; j <= n; ++j) {
    col[static_cast<std::size_t>(j - 1)] = w;
    if (i + j >= n + 1) {
      w = 0.0;
    } else if (j < n) {
      w *= double(n - i - j + 1) * double(j + 1) / (double(j) * double(n - j));
    }
  }
  return col;
}

/// Dense n x n binomial weight matrix with exact rational entries.
/// Row j holds the weights of the binomial OWA function C_j: the first
/// n-j+1 entries are positive and decreasing (constant 1/n for j = 1),
/// the last j-1 are zero, and every row sums to one.
class BinomialWeightMatrix {
 public:
  explicit BinomialWeightMatrix(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("BinomialWeightMatrix: n must be >= 2, got " + std::to_string(n));
    rows_.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) rows_.push_back(binomial_weight_row_exact(n, j));
  }

  int dim() const { return n_; }

  /// w_ji, 1-based indices.
  const Rational& entry(int j, int i) const {
    detail::check_weight_indices(n_, j, i);
    return rows_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
  }

  const std::vector<Rational>& row_exact(int j) const {
    detail::check_weight_indices(n_, j, 1);
    return rows_[static_cast<std::size_t>(j - 1)];
  }

  std::vector<double> row(int j) const {
    const auto& exact = row_exact(j);
    std::vector<double> out(exact.size());
    for (std::size_t t = 0; t < exact.size(); ++t) out[t] = exact[t].convert_to<double>();
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace owakit
