#include "signmatrix.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tabkey {

namespace {
std::string pos1(int i, int j) {  // 1-based for diagnostics
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}
}  // namespace

std::optional<std::string> validate_sign_matrix(const SignMatrix& m) {
  if (m.rows < 0 || m.cols < 0) return "negative dimensions";
  if (m.e.size() != size_t(m.rows) * m.cols) return "entry buffer size mismatch";
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) < -1 || m.at(i, j) > 1)
        return "entry out of {-1,0,1} at " + pos1(i, j);
  for (int j = 0; j < m.cols; ++j) {
    int s = 0;
    for (int i = 0; i < m.rows; ++i) {
      s += m.at(i, j);
      if (s < 0 || s > 1)
        return "column prefix sum " + std::to_string(s) + " at " + pos1(i, j);
    }
  }
  for (int i = 0; i < m.rows; ++i) {
    int s = 0;
    for (int j = 0; j < m.cols; ++j) {
      s += m.at(i, j);
      if (s < 0)
        return "row prefix sum negative at " + pos1(i, j);
    }
  }
  if (m.rows > 0) {
    bool any = false;
    for (int j = 0; j < m.cols; ++j) any = any || m.at(0, j) == 1;
    if (!any)
      return "row 1 contains no 1 (would encode an empty tableau column)";
  }
  return std::nullopt;
}

SignMatrix make_sign_matrix(int rows, int cols, std::vector<int> entries) {
  if (entries.size() != size_t(rows) * cols)
    fail(Error::Kind::invalid, "entry count does not match dimensions");
  SignMatrix m(rows, cols);
  for (size_t k = 0; k < entries.size(); ++k) m.e[k] = int8_t(entries[k]);
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  return m;
}

int minus_count(const SignMatrix& m) {
  int n = 0;
  for (int8_t v : m.e) n += v == -1;
  return n;
}

bool is_permutation_matrix(const SignMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i) {
    int s = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j) < 0) return false;
      s += m.at(i, j);
    }
    if (s != 1) return false;
  }
  for (int j = 0; j < m.cols; ++j) {
    int s = 0;
    for (int i = 0; i < m.rows; ++i) s += m.at(i, j);
    if (s != 1) return false;
  }
  return true;
}

SignMatrix sign_matrix_from_columns(const std::vector<Column>& cols,
                                    int alphabet) {
  const int l = static_cast<int>(cols.size());
  SignMatrix m(l, alphabet);
  for (int i = 0; i < l; ++i) {
    const Column& cur = cols[l - 1 - i];
    const Column* next = i == 0 ? nullptr : &cols[l - i];
    for (int j = 1; j <= alphabet; ++j) {
      bool in_cur = cur.contains(j);
      bool in_next = next && next->contains(j);
      if (in_cur && !in_next) m.set(i, j - 1, 1);
      else if (!in_cur && in_next) m.set(i, j - 1, -1);
    }
  }
  return m;
}

SignMatrix from_tableau(const YoungTableau& t) {
  if (auto diag = validate_tableau(t)) fail(Error::Kind::invalid, *diag);
  SignMatrix m = sign_matrix_from_columns(t.columns, t.alphabet);
  if (auto diag = validate_sign_matrix(m))
    fail(Error::Kind::internal, "tableau mapped to invalid sign matrix: " + *diag);
  return m;
}

YoungTableau to_tableau(const SignMatrix& m) {
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  std::set<int> s;  // current column set, 1-based letters
  std::vector<Column> rev;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j) == 1) s.insert(j + 1);
      else if (m.at(i, j) == -1) s.erase(j + 1);
    }
    std::vector<int> col(s.rbegin(), s.rend());
    rev.emplace_back(std::move(col));
  }
  YoungTableau t;
  t.alphabet = m.cols;
  t.columns.assign(rev.rbegin(), rev.rend());
  if (auto diag = validate_tableau(t))
    fail(Error::Kind::internal, "sign matrix decoded to invalid tableau: " + *diag);
  return t;
}

std::optional<Position> find_removable(const SignMatrix& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = m.cols; j-- > 0;)
      if (m.at(i, j) == -1) return Position{i, j};
  return std::nullopt;
}

std::vector<Position> neighbours(const SignMatrix& m, Position p) {
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  auto rem = find_removable(m);
  if (!rem || !(*rem == p))
    fail(Error::Kind::domain, "position " + pos1(p.row, p.col) +
                                  " is not the removable -1");
  std::vector<Position> out;
  for (int i = 0; i <= p.row; ++i) {
    for (int j = 0; j <= p.col; ++j) {
      if (m.at(i, j) != 1) continue;
      bool blocked = false;
      for (int r = i; r <= p.row && !blocked; ++r)
        for (int c = j; c <= p.col && !blocked; ++c)
          blocked = !(r == i && c == j) && m.at(r, c) == 1;
      if (!blocked) out.push_back({i, j});
    }
  }
  // sorted by construction (row loop is outer); columns must strictly decrease
  for (size_t k = 0; k + 1 < out.size(); ++k)
    if (out[k].col <= out[k + 1].col || out[k].row >= out[k + 1].row)
      fail(Error::Kind::internal, "neighbour staircase violated");
  if (out.empty() || out.back().row != p.row)
    fail(Error::Kind::internal, "the -1 row must contribute a neighbour");
  return out;
}

SignMatrix remove_minus_one(const SignMatrix& m, Position p) {
  std::vector<Position> nb = neighbours(m, p);
  SignMatrix r = m;
  r.set(p.row, p.col, 0);
  for (const Position& q : nb) r.set(q.row, q.col, 0);
  for (size_t k = 0; k + 1 < nb.size(); ++k)
    r.set(nb[k].row, nb[k + 1].col, 1);
  if (auto diag = validate_sign_matrix(r))
    fail(Error::Kind::internal, "removal produced invalid sign matrix: " + *diag);
  return r;
}

SignMatrix eliminate_minus_ones(const SignMatrix& m) {
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  SignMatrix cur = m;
  int steps = 0;
  const int expect = minus_count(m);
  while (auto p = find_removable(cur)) {
    cur = remove_minus_one(cur, *p);
    ++steps;
  }
  if (steps != expect)
    fail(Error::Kind::internal, "elimination step count mismatch");
  return cur;
}

YoungTableau left_key_elimination(const YoungTableau& t) {
  return to_tableau(eliminate_minus_ones(from_tableau(t)));
}

YoungTableau right_key_via_complement(const YoungTableau& t) {
  if (auto diag = validate_tableau(t)) fail(Error::Kind::invalid, *diag);
  const int l = t.num_columns();
  int full = 0;
  while (full < l && t.columns[full].size() == t.alphabet) ++full;

  ComplementResult c = complement(t);
  if (c.dropped_columns != full)
    fail(Error::Kind::internal, "complement dropped the wrong column count");
  YoungTableau k = left_key_elimination(c.tableau);
  ComplementResult e = complement(k);
  if (e.dropped_columns != 0)
    fail(Error::Kind::internal, "left key of a complement has no full columns");

  YoungTableau out;
  out.alphabet = t.alphabet;
  std::vector<int> all;
  for (int x = t.alphabet; x >= 1; --x) all.push_back(x);
  for (int i = 0; i < full; ++i) out.columns.emplace_back(all);
  for (auto& col : e.tableau.columns) out.columns.push_back(std::move(col));
  if (auto diag = validate_tableau(out))
    fail(Error::Kind::internal, "right key is not a valid tableau: " + *diag);
  return out;
}

SignMatrix pseudo_remove(const SignMatrix& m, Position p) {
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  if (p.row < 0 || p.row >= m.rows || p.col < 0 || p.col >= m.cols ||
      m.at(p.row, p.col) != -1)
    fail(Error::Kind::domain, "no -1 at " + pos1(p.row, p.col));
  for (int i = 0; i <= p.row; ++i)
    for (int j = 0; j <= p.col; ++j)
      if (m.at(i, j) == -1 && !(i == p.row && j == p.col))
        fail(Error::Kind::domain,
             "another -1 north-west of " + pos1(p.row, p.col));
  int k = -1, l = -1;
  for (int i = p.row; i-- > 0;)
    if (m.at(i, p.col) == 1) { k = i; break; }
  for (int j = p.col; j-- > 0;)
    if (m.at(p.row, j) == 1) { l = j; break; }
  if (k < 0 || l < 0)
    fail(Error::Kind::internal, "validity guarantees the rectangle corners");
  if (m.at(k, l) != 0)
    fail(Error::Kind::internal, "corner entry is forced to be 0");
  SignMatrix r = m;
  r.set(p.row, p.col, 0);
  r.set(k, p.col, 0);
  r.set(p.row, l, 0);
  r.set(k, l, 1);
  if (auto diag = validate_sign_matrix(r))
    fail(Error::Kind::internal,
         "pseudo removal produced invalid sign matrix: " + *diag);
  return r;
}

SignMatrix pseudo_key(const SignMatrix& m) {
  if (auto diag = validate_sign_matrix(m)) fail(Error::Kind::invalid, *diag);
  SignMatrix cur = m;
  for (;;) {
    Position p{-1, -1};
    for (int i = 0; i < cur.rows && p.row < 0; ++i)
      for (int j = 0; j < cur.cols; ++j)
        if (cur.at(i, j) == -1) { p = {i, j}; break; }
    if (p.row < 0) return cur;
    cur = pseudo_remove(cur, p);
  }
}

}  // namespace tabkey
