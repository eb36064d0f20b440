#include "cmvar/exact.hpp"

#include "cmvar/errors.hpp"

#include <utility>

namespace cmvar {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt to_integer(const Rational& q, const char* what) {
  if (!is_integer(q)) {
    throw NonIntegerProduct(std::string(what) + " evaluated to the non-integer " + to_string(q));
  }
  return numerator(q);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

// Reduces m to row echelon form in place; returns the rank and the sign /
// pivot product needed for the determinant.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) {
      d = 0;
      continue;
    }
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
      d = -d;
    }
    const Rational p = m(r, c);
    d *= p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / p;
      for (std::size_t k = c; k < cols; ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  if (r < rows) d = 0;
  if (det) *det = d;
  return r;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rational d;
  eliminate(m, &d);
  return d;
}

std::size_t rank(RationalMatrix m) { return eliminate(m, nullptr); }

}  // namespace cmvar
