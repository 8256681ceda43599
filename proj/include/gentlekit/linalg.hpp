#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace gentlekit {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

// Dense row-major matrix over arbitrary precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const IntVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    check_same(a, b);
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    check_same(a, b);
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
    IntMatrix r = a;
    for (auto& v : r.data_) v *= s;
    return r;
  }
  friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  static void check_same(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

// Polynomial with coefficients in ascending degree; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial monomial(std::size_t degree, const BigInt& coeff = 1) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  BigInt eval(const BigInt& z) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
  }

  // Coefficients reversed: z^deg p(1/z).
  IntPolynomial reciprocal() const { return IntPolynomial(std::vector<BigInt>(c_.rbegin(), c_.rend())); }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial r{1};
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Exact division by a monic divisor; throws when the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& d) const {
    if (d.is_zero() || d.c_.back() != 1) throw std::invalid_argument("divide_exact: divisor must be monic");
    std::vector<BigInt> rem = c_;
    long n = degree(), m = d.degree();
    if (n < m) {
      if (!is_zero()) throw internal_mismatch("polynomial division leaves a remainder");
      return {};
    }
    std::vector<BigInt> q(static_cast<std::size_t>(n - m + 1));
    for (long k = n - m; k >= 0; --k) {
      BigInt lead = rem[static_cast<std::size_t>(k + m)];
      q[static_cast<std::size_t>(k)] = lead;
      for (long j = 0; j <= m; ++j) rem[static_cast<std::size_t>(k + j)] -= lead * d.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
      if (r != 0) throw internal_mismatch("polynomial division leaves a remainder");
    return IntPolynomial(std::move(q));
  }

  std::string str(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
      BigInt a = c_[static_cast<std::size_t>(k)];
      if (a == 0) continue;
      bool neg = a < 0;
      BigInt mag = neg ? BigInt(-a) : a;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (mag != 1 || k == 0) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

struct RankCorank {
  std::size_t rank = 0;
  std::size_t corank = 0;
};

// Fraction-free (Bareiss) elimination; returns rank and the sign-corrected determinant when square.
namespace detail {
inline std::pair<std::size_t, BigInt> bareiss(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  BigInt det = 0;
  if (m == n) det = (r == n) ? BigInt(sign) * (n ? a(n - 1, n - 1) : BigInt(1)) : BigInt(0);
  return {r, det};
}
}  // namespace detail

inline RankCorank rank_corank(const IntMatrix& m) {
  auto [r, det] = detail::bareiss(m);
  (void)det;
  return {r, m.cols() - r};
}

inline std::size_t rank(const IntMatrix& m) { return rank_corank(m).rank; }

inline BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::Validation, "NotSquare", "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return detail::bareiss(m).second;
}

// det(zI - M) by the Faddeev-LeVerrier recursion; every division is exact over the integers.
inline IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Validation, "NotSquare", "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * mk;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    if (tr % BigInt(k) != 0) throw internal_mismatch("Faddeev-LeVerrier trace not divisible");
    c[n - k] = -tr / BigInt(k);
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
  }
  return IntPolynomial(std::move(c));
}

// q(x) = x^tr G x / 2 for an even Gram matrix G.
inline BigInt qform_eval(const IntMatrix& gram, const IntVector& x) {
  if (!gram.is_square() || gram.rows() != x.size()) throw std::invalid_argument("qform_eval: dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    BigInt ri = 0;
    for (std::size_t j = 0; j < x.size(); ++j) ri += gram(i, j) * x[j];
    s += x[i] * ri;
  }
  if (s % 2 != 0) throw Error(ErrorKind::Validation, "OddValue", "x^tr G x is odd; not an even Gram matrix");
  return s / 2;
}

inline IntVector to_int_vector(const std::vector<long long>& v) { return IntVector(v.begin(), v.end()); }

inline std::string vector_str(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline IntVector scaled(const IntVector& a, const BigInt& s) {
  IntVector r = a;
  for (auto& v : r) v *= s;
  return r;
}
inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace gentlekit
