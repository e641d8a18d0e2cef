#include "fprod/lattice.hpp"

#include "fprod/error.hpp"

namespace fprod {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Column operations applied to both H and U.
struct ColumnOps {
  IntMatrix& h;
  IntMatrix& u;

  template <typename F>
  void each(F&& f) {
    f(h);
    f(u);
  }

  // (c_i, c_j) <- (s c_i + t c_j, x c_i + y c_j)
  void combine(std::size_t i, std::size_t j, const Integer& s, const Integer& t, const Integer& x, const Integer& y) {
    each([&](IntMatrix& m) {
      Integer a, b;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        a = s * m(r, i) + t * m(r, j);
        b = x * m(r, i) + y * m(r, j);
        m(r, i) = std::move(a);
        m(r, j) = std::move(b);
      }
    });
  }

  void negate(std::size_t i) {
    each([&](IntMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = -m(r, i);
    });
  }

  // c_i <- c_i - q c_j
  void submul(std::size_t i, std::size_t j, const Integer& q) {
    each([&](IntMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, j) != 0) m(r, i) -= q * m(r, j);
    });
  }
};

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0, {}};
  ColumnOps ops{out.H, out.U};
  std::size_t col = 0;
  Integer g, s, t;
  for (std::size_t row = 0; row < m.rows() && col < m.cols(); ++row) {
    for (std::size_t j = col + 1; j < m.cols(); ++j) {
      if (out.H(row, j) == 0) continue;
      const Integer a = out.H(row, col);
      const Integer b = out.H(row, j);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      // [[s, -b/g], [t, a/g]] has determinant 1.
      ops.combine(col, j, s, t, Integer(-b / g), Integer(a / g));
    }
    if (out.H(row, col) == 0) continue;
    if (out.H(row, col) < 0) ops.negate(col);
    const Integer pivot = out.H(row, col);
    for (std::size_t l = 0; l < col; ++l) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out.H(row, l).get_mpz_t(), pivot.get_mpz_t());
      if (q != 0) ops.submul(l, col, q);
    }
    out.pivot_rows.push_back(row);
    ++col;
  }
  out.rank = col;
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(sel, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace fprod
