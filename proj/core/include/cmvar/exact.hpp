#pragma once

// Exact integer and rational arithmetic used wherever a result must not
// depend on floating point: degree formulas, identity checks on small
// matrices.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cmvar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero whenever k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

bool is_integer(const Rational& q);

/// Returns the integer value of q, throwing NonIntegerProduct otherwise.
BigInt to_integer(const Rational& q, const char* what);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by Gaussian elimination over Q. Square input required.
Rational determinant(RationalMatrix m);

/// Rank by Gaussian elimination over Q.
std::size_t rank(RationalMatrix m);

}  // namespace cmvar
