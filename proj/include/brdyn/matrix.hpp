#pragma once

// Small dense integer matrices. Entries are machine integers; everything that
// can grow (determinants, characteristic polynomials) is computed in Integer.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "brdyn/intpoly.hpp"

namespace brdyn {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  long long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool nonnegative() const;
  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long long> a_;
};

// det(tI - M), exact (Faddeev-LeVerrier over Integer; each division is exact).
IntPolynomial char_poly(const IntMatrix& m);
// Strong connectivity of the digraph i -> j for m(j, i) != 0.
bool is_irreducible(const IntMatrix& m);
// Exact inverse of a unimodular matrix; throws BadBasis otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace brdyn
