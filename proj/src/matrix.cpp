#include "brdyn/matrix.hpp"

#include <sstream>

namespace brdyn {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw BadParameters("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw BadParameters("matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      long long x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool IntMatrix::nonnegative() const {
  for (long long x : a_)
    if (x < 0) return false;
  return true;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw BadParameters("char_poly needs a square matrix");
  const std::size_t n = m.rows();
  using Big = std::vector<Integer>;
  Big a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  Big mk(n * n, Integer(0));
  for (std::size_t k = 1; k <= n; ++k) {
    Big next(n * n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const Integer& x = a[i * n + l];
        if (x == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += x * mk[l * n + j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    mk = std::move(next);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
    c[n - k] = -tr / Integer(k);
  }
  return IntPolynomial(std::move(c));
}

bool is_irreducible(const IntMatrix& m) {
  if (!m.square()) throw BadParameters("is_irreducible needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return false;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        long long x = forward ? m(j, i) : m(i, j);
        if (x != 0 && !seen[j]) {
          seen[j] = 1;
          ++count;
          stack.push_back(j);
        }
      }
    }
    return count == n;
  };
  return reach(true) && reach(false);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.square()) throw BadBasis("basis matrix is not square");
  const std::size_t n = m.rows();
  // Gauss-Jordan over Q; a unimodular input keeps the result integral.
  std::vector<Rational> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * 2 * n + col] == 0) ++piv;
    if (piv == n) throw BadBasis("basis vectors are linearly dependent");
    if (piv != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[col * 2 * n + j]);
    Rational p = a[col * 2 * n + col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col * 2 * n + j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rational f = a[i * 2 * n + col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[col * 2 * n + j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i * 2 * n + n + j];
      if (denominator(x) != 1) throw BadBasis("basis is not unimodular");
      inv(i, j) = static_cast<long long>(numerator(x));
    }
  return inv;
}

}  // namespace brdyn
