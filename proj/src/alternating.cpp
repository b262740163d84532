#include "alternating.hpp"

#include <algorithm>

namespace tabkey {

std::optional<std::string> validate_asm(const SignMatrix& m) {
  if (m.rows != m.cols) return "matrix is not square";
  if (m.rows < 1) return "size must be at least 1";
  const int n = m.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) < -1 || m.at(i, j) > 1)
        return "entry out of {-1,0,1} at (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ")";
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) {
      s += m.at(i, j);
      if (s < 0 || s > 1)
        return "row " + std::to_string(i + 1) + ": nonzero entries fail to "
               "alternate starting with 1";
    }
    if (s != 1) return "row " + std::to_string(i + 1) + " does not sum to 1";
  }
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += m.at(i, j);
      if (s < 0 || s > 1)
        return "column " + std::to_string(j + 1) + ": nonzero entries fail "
               "to alternate starting with 1";
    }
    if (s != 1) return "column " + std::to_string(j + 1) + " does not sum to 1";
  }
  return std::nullopt;
}

Asm make_asm(SignMatrix m) {
  if (auto diag = validate_asm(m)) fail(Error::Kind::domain, *diag);
  return Asm{std::move(m)};
}

std::optional<std::string> validate_monotone(const YoungTableau& t) {
  if (auto diag = validate_tableau(t)) return diag;
  const int n = t.alphabet;
  if (t.num_columns() != n)
    return "expected " + std::to_string(n) + " columns, got " +
           std::to_string(t.num_columns());
  for (int c = 0; c < n; ++c)
    if (t.columns[c].size() != n - c)
      return "column " + std::to_string(c + 1) + " must have height " +
             std::to_string(n - c);
  // entries must not decrease stepping north-west along diagonals
  for (int c = 1; c < n; ++c)
    for (int r = 1; r <= t.columns[c].size(); ++r)
      if (t.columns[c - 1].from_bottom(r + 1) < t.columns[c].from_bottom(r))
        return "diagonal condition fails between columns " + std::to_string(c) +
               " and " + std::to_string(c + 1) + " at row " + std::to_string(r);
  return std::nullopt;
}

MonotoneTriangle make_monotone(YoungTableau t) {
  if (auto diag = validate_monotone(t)) fail(Error::Kind::domain, *diag);
  return MonotoneTriangle{std::move(t)};
}

MonotoneTriangle asm_to_monotone(const Asm& a) {
  YoungTableau t = to_tableau(a.m);
  if (auto diag = validate_monotone(t))
    fail(Error::Kind::internal, "ASM decoded to a non-triangle: " + *diag);
  return MonotoneTriangle{std::move(t)};
}

Asm monotone_to_asm(const MonotoneTriangle& t) {
  SignMatrix m = from_tableau(t.t);
  if (auto diag = validate_asm(m))
    fail(Error::Kind::internal, "triangle encoded to a non-ASM: " + *diag);
  return Asm{std::move(m)};
}

Permutation key_of_asm(const Asm& a) {
  return permutation_of_matrix(eliminate_minus_ones(a.m));
}

Permutation pseudo_key_of_asm(const Asm& a) {
  return permutation_of_matrix(pseudo_key(a.m));
}

SignMatrix permutation_matrix(const Permutation& p) {
  const int n = p.size();
  SignMatrix m(n, n);
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (p.sigma[i] < 1 || p.sigma[i] > n || seen[p.sigma[i]])
      fail(Error::Kind::domain, "not a permutation of 1.." + std::to_string(n));
    seen[p.sigma[i]] = 1;
    m.set(i, p.sigma[i] - 1, 1);
  }
  return m;
}

Permutation permutation_of_matrix(const SignMatrix& m) {
  if (!is_permutation_matrix(m))
    fail(Error::Kind::domain, "matrix is not a permutation matrix");
  Permutation p;
  p.sigma.resize(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) == 1) p.sigma[i] = j + 1;
  return p;
}

namespace {

MonotoneTriangle boxwise(const MonotoneTriangle& a, const MonotoneTriangle& b,
                         bool take_max) {
  if (a.size() != b.size())
    fail(Error::Kind::domain, "triangles have different sizes");
  YoungTableau out;
  out.alphabet = a.size();
  for (int c = 0; c < a.t.num_columns(); ++c) {
    const auto& ca = a.t.columns[c].entries;
    const auto& cb = b.t.columns[c].entries;
    std::vector<int> col(ca.size());
    for (size_t r = 0; r < ca.size(); ++r)
      col[r] = take_max ? std::max(ca[r], cb[r]) : std::min(ca[r], cb[r]);
    out.columns.emplace_back(std::move(col));
  }
  if (auto diag = validate_monotone(out))
    fail(Error::Kind::internal, "lattice operation left the triangles: " + *diag);
  return MonotoneTriangle{std::move(out)};
}

}  // namespace

MonotoneTriangle mt_sup(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  return boxwise(a, b, true);
}

MonotoneTriangle mt_inf(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  return boxwise(a, b, false);
}

bool triangle_leq(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  if (a.size() != b.size())
    fail(Error::Kind::domain, "triangles have different sizes");
  for (int c = 0; c < a.t.num_columns(); ++c)
    for (size_t r = 0; r < a.t.columns[c].entries.size(); ++r)
      if (a.t.columns[c].entries[r] > b.t.columns[c].entries[r]) return false;
  return true;
}

bool asm_leq(const Asm& a, const Asm& b) {
  return triangle_leq(asm_to_monotone(a), asm_to_monotone(b));
}

}  // namespace tabkey
