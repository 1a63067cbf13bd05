#include "tropwall/grassmann.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tropwall/linalg.hpp"

namespace tropwall {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return out;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

RingPtr plucker_ring(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("plucker ring needs 1 <= k <= n");
  std::vector<std::string> names;
  for (const auto& s : subsets(n, k)) {
    std::string name = "p";
    for (int i : s) name += std::to_string(i);
    names.push_back(name);
  }
  return make_ring(names);
}

namespace {

// Sign and sorted form of an index list; sign 0 on a repeated index.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

}  // namespace

Ideal plucker_ideal(int k, int n) {
  RingPtr ring = plucker_ring(k, n);
  auto subs = subsets(n, k);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i]] = i;
  const std::size_t N = subs.size();
  auto term = [&](std::vector<int> a, std::vector<int> b, Polynomial& acc, int coef) {
    int sa = sort_with_sign(a), sb = sort_with_sign(b);
    if (sa == 0 || sb == 0) return;
    Monomial m(N, 0);
    ++m[index.at(a)];
    ++m[index.at(b)];
    acc.add_term(m, Rational(coef * sa * sb));
  };
  std::set<std::string> seen;
  std::vector<Polynomial> gens;
  for (const auto& I : subs)
    for (const auto& J : subs) {
      if (I == J) continue;
      for (std::size_t pos = I.size(); pos-- > 0;) {
        Polynomial rel(ring);
        term(I, J, rel, 1);
        for (std::size_t j = 0; j < J.size(); ++j) {
          std::vector<int> a = I, b = J;
          a[pos] = J[j];
          b[j] = I[pos];
          term(a, b, rel, -1);
        }
        if (rel.is_zero()) continue;
        Polynomial norm = rel.monic();
        if (seen.insert(norm.to_string()).second) gens.push_back(norm);
      }
    }
  return Ideal(ring, gens);
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

Vector plucker_coords(const Matrix& M) {
  if (M.empty()) throw std::invalid_argument("plucker coordinates of an empty matrix");
  const int k = static_cast<int>(M.size()), n = static_cast<int>(M[0].size());
  if (k > n || rank(M) != static_cast<std::size_t>(k)) throw std::invalid_argument("matrix is not of full rank");
  Vector out;
  for (const auto& s : subsets(n, k)) {
    Matrix minor(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r)
      for (int c : s) minor[static_cast<std::size_t>(r)].push_back(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    out.push_back(determinant(minor));
  }
  return out;
}

}  // namespace tropwall
