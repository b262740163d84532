#include "plactic.hpp"

#include <algorithm>

namespace tabkey {

YoungTableau p_tableau(const Word& w, int alphabet) {
  // rows kept bottom-up, each weakly increasing
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    if (x < 1) fail(Error::Kind::invalid, "word letters must be positive");
    int carry = x;
    for (size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
      if (it == rows[r].end()) {
        rows[r].push_back(carry);
        break;
      }
      std::swap(*it, carry);  // bump the first entry greater than carry
    }
  }
  YoungTableau t;
  int maxe = 0;
  for (int x : w) maxe = std::max(maxe, x);
  t.alphabet = alphabet ? alphabet : maxe;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t j = 0; j < ncols; ++j) {
    std::vector<int> col;
    for (size_t r = rows.size(); r-- > 0;)
      if (rows[r].size() > j) col.push_back(rows[r][j]);
    t.columns.emplace_back(std::move(col));
  }
  if (auto diag = validate_tableau(t))
    fail(Error::Kind::internal, "insertion produced invalid tableau: " + *diag);
  return t;
}

bool knuth_equivalent(const Word& w1, const Word& w2) {
  return p_tableau(w1).columns == p_tableau(w2).columns;
}

namespace {

// merge two disjoint descending sets into one descending set
Column merge_desc(const Column& a, const Column& b) {
  std::vector<int> out;
  out.reserve(a.entries.size() + b.entries.size());
  std::merge(a.entries.begin(), a.entries.end(), b.entries.begin(),
             b.entries.end(), std::back_inserter(out), std::greater<int>());
  return Column(std::move(out));
}

Column diff_desc(const Column& a, const Column& b) {
  std::vector<int> out;
  std::set_difference(a.entries.begin(), a.entries.end(), b.entries.begin(),
                      b.entries.end(), std::back_inserter(out),
                      std::greater<int>());
  return Column(std::move(out));
}

Column intersect_desc(const Column& a, const Column& b) {
  std::vector<int> out;
  std::set_intersection(a.entries.begin(), a.entries.end(), b.entries.begin(),
                        b.entries.end(), std::back_inserter(out),
                        std::greater<int>());
  return Column(std::move(out));
}

// Height swap of an actual two-column tableau (p1 taller or equal). Peels the
// exchangeable entries: repeatedly the largest remaining b of p2 - p1 is
// traded against the largest a <= b of p1 - p2; those a join the short output
// column, the untraded part of p1 - p2 joins the tall one.
std::pair<Column, Column> height_swap(const Column& p1, const Column& p2) {
  Column common = intersect_desc(p1, p2);
  Column x = diff_desc(p1, p2);
  Column y = diff_desc(p2, p1);
  std::vector<int> picked;
  std::vector<int> rest = x.entries;  // descending
  for (int b : y.entries) {
    auto it = std::lower_bound(rest.begin(), rest.end(), b,
                               std::greater<int>());
    // first element <= b in a descending list; exists for tableau columns
    if (it == rest.end())
      fail(Error::Kind::internal, "two-column exchange: no entry to trade");
    picked.push_back(*it);
    rest.erase(it);
  }
  std::sort(picked.begin(), picked.end(), std::greater<int>());
  Column a_out = merge_desc(common, Column(picked));
  Column b_out = merge_desc(p2, Column(rest));
  return {a_out, b_out};
}

}  // namespace

std::pair<Column, Column> column_exchange(const Column& a, const Column& b,
                                          ExchangeLog* log) {
  std::pair<Column, Column> result;
  if (a.size() == b.size()) {
    result = {a, b};
  } else {
    Word w = a.entries;
    w.insert(w.end(), b.entries.begin(), b.entries.end());
    YoungTableau p = p_tableau(w);
    if (p.num_columns() > 2)
      fail(Error::Kind::internal, "two-column word rectified to a wider shape");
    Column p1 = p.num_columns() > 0 ? p.columns[0] : Column{};
    Column p2 = p.num_columns() > 1 ? p.columns[1] : Column{};
    if (b.size() == p1.size() && a.size() == p2.size()) {
      result = {p1, p2};
    } else if (b.size() == p2.size() && a.size() == p1.size()) {
      result = height_swap(p1, p2);
    } else {
      fail(Error::Kind::internal,
           "no two-column factorization with the requested heights");
    }
    Word w2 = result.first.entries;
    w2.insert(w2.end(), result.second.entries.begin(),
              result.second.entries.end());
    if (p_tableau(w2).columns != p.columns)
      fail(Error::Kind::internal, "column exchange left the plactic class");
  }
  if (log) log->push_back({a, b, result.first, result.second});
  return result;
}

FrankWord frank_word(const YoungTableau& t, const std::vector<int>& heights,
                     ExchangeLog* log) {
  Shape h = shape(t);
  {
    Shape a = h, b = heights;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(Error::Kind::domain,
           "target heights are not a permutation of the shape");
  }
  std::vector<Column> cols = t.columns;
  const int l = static_cast<int>(cols.size());
  for (int k = 0; k < l; ++k) {
    int j = -1;
    for (int m = k; m < l; ++m)
      if (cols[m].size() == heights[k]) { j = m; break; }
    if (j < 0) fail(Error::Kind::internal, "frank word: height bookkeeping broke");
    for (int m = j; m > k; --m) {
      auto [a2, b2] = column_exchange(cols[m - 1], cols[m], log);
      cols[m - 1] = std::move(a2);
      cols[m] = std::move(b2);
    }
  }
  return {std::move(cols), heights};
}

YoungTableau left_key_classical(const YoungTableau& t, ExchangeLog* log) {
  const Shape h = shape(t);
  const int l = t.num_columns();
  YoungTableau key;
  key.alphabet = t.alphabet;
  for (int k = 0; k < l; ++k) {
    std::vector<int> perm;
    perm.reserve(l);
    perm.push_back(h[k]);
    for (int m = 0; m < l; ++m)
      if (m != k) perm.push_back(h[m]);
    key.columns.push_back(frank_word(t, perm, log).columns.front());
  }
  if (auto diag = validate_tableau(key))
    fail(Error::Kind::internal, "left key is not a valid tableau: " + *diag);
  return key;
}

YoungTableau right_key_classical(const YoungTableau& t, ExchangeLog* log) {
  const Shape h = shape(t);
  const int l = t.num_columns();
  YoungTableau key;
  key.alphabet = t.alphabet;
  for (int k = 0; k < l; ++k) {
    std::vector<int> perm;
    perm.reserve(l);
    for (int m = 0; m < l; ++m)
      if (m != k) perm.push_back(h[m]);
    perm.push_back(h[k]);
    key.columns.push_back(frank_word(t, perm, log).columns.back());
  }
  if (auto diag = validate_tableau(key))
    fail(Error::Kind::internal, "right key is not a valid tableau: " + *diag);
  return key;
}

}  // namespace tabkey
