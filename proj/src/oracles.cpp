#include "tatepol/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tatepol::oracles {

std::vector<IntVector> brute_kernel(const IntMatrix& m, std::int64_t box) {
  if (box < 1) throw std::invalid_argument("brute_kernel: box must be at least 1");
  const std::size_t n = m.cols();
  std::vector<IntVector> out;
  std::vector<std::int64_t> x(n, -box);
  for (;;) {
    IntVector v(x.begin(), x.end());
    bool zero = true;
    for (const auto& y : m * v)
      if (y != 0) {
        zero = false;
        break;
      }
    if (zero) out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < n && x[k] == box) x[k++] = -box;
    if (k == n) break;
    ++x[k];
  }
  return out;
}

namespace {

// Counts w in (Z/D)^n with E w = 0 mod D, accumulating E w column by column.
struct KCounter {
  const std::vector<std::vector<std::int64_t>>& cols;
  std::int64_t D;
  std::size_t n;
  std::uint64_t count = 0;

  void run(std::size_t k, std::vector<std::int64_t>& acc) {
    if (k == n) {
      for (auto a : acc)
        if (a % D != 0) return;
      ++count;
      return;
    }
    for (std::int64_t w = 0; w < D; ++w) {
      run(k + 1, acc);
      for (std::size_t i = 0; i < n; ++i) acc[i] += cols[k][i];
    }
    for (std::size_t i = 0; i < n; ++i) acc[i] -= D * cols[k][i];
  }
};

}  // namespace

std::uint64_t brute_k_group(const IntMatrix& E, std::int64_t denominator_bound) {
  if (!E.is_square()) throw std::invalid_argument("brute_k_group: E must be square");
  if (denominator_bound < 1) throw std::invalid_argument("brute_k_group: bound must be positive");
  if (determinant(E) == 0) throw std::invalid_argument("brute_k_group: det E = 0, K(L) is infinite");
  const std::size_t n = E.rows();
  // v = w / D; E(v, e_i) = (E^T w)_i / D, so column k of the walk is row k of E.
  std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!E(k, i).fits_sint_p()) throw std::invalid_argument("brute_k_group: entries too large");
      cols[k][i] = E(k, i).get_si();
    }
  KCounter c{cols, denominator_bound, n};
  std::vector<std::int64_t> acc(n, 0);
  c.run(0, acc);
  return c.count;
}

NumericPositivity numeric_positivity(const RatMatrix& s) {
  const std::size_t n = s.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = s(i, j).get_d();
  std::vector<double> l(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double p = a[k * n + k];
    for (std::size_t j = 0; j < k; ++j) p -= l[k * n + j] * l[k * n + j];
    if (std::fabs(p) < kPivotThreshold) return {p > 0, true};
    if (p < 0) return {false, false};
    l[k * n + k] = std::sqrt(p);
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = a[i * n + k];
      for (std::size_t j = 0; j < k; ++j) v -= l[i * n + j] * l[k * n + j];
      l[i * n + k] = v / l[k * n + k];
    }
  }
  return {true, false};
}

}  // namespace tatepol::oracles
