#include "fpa/combinatorics.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace fpa {

namespace {

const BigInt kZero{0};

}  // namespace

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max) {
  const std::size_t rows = static_cast<std::size_t>(n_max) + 1;
  first_.assign(rows * (rows + 1) / 2, BigInt{0});
  second_.assign(rows * (rows + 1) / 2, BigInt{0});
  first_[index(0, 0)] = 1;
  second_[index(0, 0)] = 1;
  for (unsigned n = 0; n < n_max; ++n) {
    for (unsigned k = 1; k <= n + 1; ++k) {
      const BigInt& prev_diag_first = first_[index(n, k - 1)];
      const BigInt& prev_diag_second = second_[index(n, k - 1)];
      BigInt s = prev_diag_first;
      BigInt S = prev_diag_second;
      if (k <= n) {
        s -= BigInt(n) * first_[index(n, k)];
        S += BigInt(k) * second_[index(n, k)];
      }
      first_[index(n + 1, k)] = std::move(s);
      second_[index(n + 1, k)] = std::move(S);
    }
  }
  first_values_.reserve(first_.size());
  second_values_.reserve(second_.size());
  for (const auto& v : first_) first_values_.push_back(v.convert_to<double>());
  for (const auto& v : second_) second_values_.push_back(v.convert_to<double>());
  first_reals_.reserve(first_.size());
  second_reals_.reserve(second_.size());
  for (const auto& v : first_) first_reals_.push_back(v.convert_to<Real>());
  for (const auto& v : second_) second_reals_.push_back(v.convert_to<Real>());
}

std::size_t StirlingTable::index(unsigned n, unsigned k) const {
  if (n > n_max_ || k > n) {
    throw ArgumentError("StirlingTable: (" + std::to_string(n) + "," + std::to_string(k) +
                        ") outside table of size " + std::to_string(n_max_));
  }
  return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
}

const BigInt& StirlingTable::first(unsigned n, unsigned k) const {
  if (k > n) return kZero;
  return first_[index(n, k)];
}

const BigInt& StirlingTable::second(unsigned n, unsigned k) const {
  if (k > n) return kZero;
  return second_[index(n, k)];
}

std::shared_ptr<const StirlingTable> shared_stirling(unsigned n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const StirlingTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->n_max() < n_max) {
    unsigned size = table ? table->n_max() : 32u;
    while (size < n_max) size *= 2;
    table = std::make_shared<const StirlingTable>(size);
  }
  return table;
}

BigInt stirling_first(unsigned n, unsigned k) {
  if (k > n) return 0;
  return shared_stirling(n)->first(n, k);
}

BigInt stirling_second(unsigned n, unsigned k) {
  if (k > n) return 0;
  return shared_stirling(n)->second(n, k);
}

namespace {

// Walks j_i for i = index..last, tracking remaining block count and weight.
template <class T, class R>
void bell_recurse(unsigned index, unsigned last, unsigned blocks_left, unsigned weight_left, R coeff, T product,
                  const std::vector<T>& scaled, T& total) {
  if (blocks_left == 0 && weight_left == 0) {
    total += coeff * product;
    return;
  }
  if (index > last || blocks_left == 0 || weight_left < index) return;
  // j copies of block size `index`.
  T power{1.0, 0.0};
  R inv_fact = 1.0;
  for (unsigned j = 0; j <= blocks_left && j * index <= weight_left; ++j) {
    if (j > 0) {
      power *= scaled[index - 1];
      inv_fact /= static_cast<double>(j);
    }
    bell_recurse(index + 1, last, blocks_left - j, weight_left - j * index, R(coeff * inv_fact),
                 T(product * power), scaled, total);
  }
}

template <class T, class R>
T bell_partial_impl(unsigned n, unsigned k, std::span<const T> args, R n_factorial,
                    R (*fact)(unsigned)) {
  // B_{0,0} takes no variables; an empty or one-element list is accepted.
  const std::size_t expected = k > n ? 0 : static_cast<std::size_t>(n - k + 1);
  if (args.size() != expected && !(n == 0 && k == 0 && args.empty())) {
    throw ArgumentError("bell_partial: B_{" + std::to_string(n) + "," + std::to_string(k) +
                        "} needs " + std::to_string(expected) + " arguments, got " +
                        std::to_string(args.size()));
  }
  if (k > n) return T{0.0, 0.0};
  if (n == 0) return T{1.0, 0.0};
  if (k == 0) return T{0.0, 0.0};

  std::vector<T> scaled(args.begin(), args.end());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] /= fact(static_cast<unsigned>(i + 1));

  T total{0.0, 0.0};
  bell_recurse<T, R>(1, static_cast<unsigned>(expected), k, n, n_factorial, T{1.0, 0.0}, scaled, total);
  return total;
}

}  // namespace

Complex bell_partial(unsigned n, unsigned k, std::span<const Complex> args) {
  return bell_partial_impl<Complex, double>(n, k, args, factorial(n), &factorial);
}

Scalar bell_partial(unsigned n, unsigned k, std::span<const Scalar> args) {
  return bell_partial_impl<Scalar, Real>(n, k, args, factorial_real(n), &factorial_real);
}

Complex falling_factorial(Complex y, unsigned m) {
  Complex result{1.0, 0.0};
  for (unsigned i = 0; i < m; ++i) result *= (y - static_cast<double>(i));
  return result;
}

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result < 9.0e15 ? std::round(result) : result;
}

double factorial(unsigned n) {
  double result = 1.0;
  for (unsigned i = 2; i <= n; ++i) result *= static_cast<double>(i);
  return result;
}

Real factorial_real(unsigned n) {
  Real result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace fpa
