#pragma once

#include "clutterlab/common.hpp"

#include <sstream>

namespace clutterlab {

// Dense matrix over unbounded integers. Row-major storage.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::vector<Int> col(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<Int> row(int i) const {
    std::vector<Int> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }
};

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(errc::parse, "matrix product shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

// Matrix built from a list of columns.
inline IntMatrix from_columns(const std::vector<std::vector<Int>>& cs) {
  if (cs.empty()) fail(errc::parse, "empty column list");
  IntMatrix m(int(cs[0].size()), int(cs.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (int(cs[j].size()) != m.rows) fail(errc::parse, "ragged column list");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
  }
  return m;
}

// Text format: first line "rows cols", then one whitespace-separated line per row.
inline IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  long long r = 0, c = 0;
  if (!(in >> r >> c) || r <= 0 || c <= 0 || r > 4096 || c > 4096)
    fail(errc::parse, "matrix header must be 'rows cols' with positive sizes");
  IntMatrix m{int(r), int(c)};
  for (std::size_t k = 0; k < m.a.size(); ++k) {
    std::string tok;
    if (!(in >> tok)) fail(errc::parse, "matrix has fewer entries than rows*cols");
    try {
      m.a[k] = Int(tok);
    } catch (const std::exception&) {
      fail(errc::parse, "bad matrix entry '" + tok + "'");
    }
  }
  std::string extra;
  if (in >> extra) fail(errc::parse, "matrix has more entries than rows*cols");
  return m;
}

inline std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace clutterlab
