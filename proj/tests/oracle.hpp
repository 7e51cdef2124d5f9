// Independent reference arithmetic for the tests. Plain int64 residues mod a
// small prime and textbook Gaussian elimination, sharing no code with the
// library.
#pragma once

#include "hopfo/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  // Fermat; p is small.
  std::int64_t r = 1, b = md(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Mat from(const hopfo::Matrix& m) {
  Mat out(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = static_cast<std::int64_t>(m.at(i, j).residue());
  return out;
}

inline Mat identity(std::size_t n) {
  Mat m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, Row(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
  return c;
}

inline Mat sub(const Mat& a, const Mat& b, std::int64_t p) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] = md(a[i][j] - b[i][j], p);
  return c;
}

// Row reduction in place; returns pivot columns.
inline std::vector<std::size_t> eliminate(Mat& a, std::int64_t p) {
  std::vector<std::size_t> piv;
  if (a.empty()) return piv;
  std::size_t r = 0, cols = a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && md(a[s][c], p) == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[s], a[r]);
    std::int64_t iv = inv(a[r][c], p);
    for (auto& x : a[r]) x = md(x * iv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[r][j], p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(Mat a, std::int64_t p) { return eliminate(a, p).size(); }

// Basis of the right nullspace, one vector per free column.
inline std::vector<Row> nullspace(Mat a, std::size_t cols, std::int64_t p) {
  auto piv = eliminate(a, p);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = md(-a[r][f], p);
    out.push_back(v);
  }
  return out;
}

// Jordan type of a nilpotent matrix from the ranks of its powers, sorted
// decreasingly.
inline std::vector<std::size_t> jordan_type(const Mat& d, std::int64_t p) {
  std::size_t n = d.size();
  std::vector<std::size_t> ranks{n};
  Mat power = identity(n);
  while (ranks.back() > 0) {
    power = mul(power, d, p);
    ranks.push_back(rank(power, p));
    if (ranks.size() > n + 2) break;
  }
  // #blocks of size >= k is rank(d^{k-1}) - rank(d^k).
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (std::size_t c = 0; c < at_least[k] - next; ++c) sizes.push_back(k + 1);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Jordan block J_k for a nilpotent operator: e_i -> e_{i+1}.
inline Mat jordan_block(std::size_t k) {
  Mat m(k, Row(k, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) m[i + 1][i] = 1;
  return m;
}

}  // namespace oracle
