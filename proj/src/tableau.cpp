#include "tableau.hpp"

#include <algorithm>

namespace tabkey {

bool Column::contains(int x) const {
  // entries are sorted descending
  return std::binary_search(entries.begin(), entries.end(), x,
                            std::greater<int>());
}

bool column_subset(const Column& sub, const Column& sup) {
  return std::includes(sup.entries.begin(), sup.entries.end(),
                       sub.entries.begin(), sub.entries.end(),
                       std::greater<int>());
}

std::optional<std::string> validate_tableau(const YoungTableau& t) {
  if (t.alphabet < 0) return "alphabet must be non-negative";
  const int l = t.num_columns();
  for (int k = 0; k < l; ++k) {
    const auto& c = t.columns[k].entries;
    if (c.empty())
      return "column " + std::to_string(k + 1) + " is empty";
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1)
        return "column " + std::to_string(k + 1) + ", entry " +
               std::to_string(i + 1) + ": entries must be positive";
      if (i > 0 && c[i - 1] <= c[i])
        return "column " + std::to_string(k + 1) +
               " not strictly decreasing at entry " + std::to_string(i + 1);
    }
  }
  for (int k = 0; k + 1 < l; ++k)
    if (t.columns[k].size() < t.columns[k + 1].size())
      return "height monotonicity violated between columns " +
             std::to_string(k + 1) + " and " + std::to_string(k + 2);
  // rows weakly increase left to right when columns are bottom-aligned
  for (int k = 0; k + 1 < l; ++k) {
    const Column& a = t.columns[k];
    const Column& b = t.columns[k + 1];
    for (int r = 1; r <= b.size(); ++r)
      if (a.from_bottom(r) > b.from_bottom(r))
        return "row monotonicity violated between columns " +
               std::to_string(k + 1) + " and " + std::to_string(k + 2) +
               " at row " + std::to_string(r);
  }
  for (int k = 0; k < l; ++k)
    if (!t.columns[k].entries.empty() && t.columns[k].entries.front() > t.alphabet)
      return "entry " + std::to_string(t.columns[k].entries.front()) +
             " in column " + std::to_string(k + 1) + " exceeds alphabet " +
             std::to_string(t.alphabet);
  return std::nullopt;
}

YoungTableau make_tableau(int alphabet, std::vector<std::vector<int>> cols) {
  YoungTableau t;
  t.alphabet = alphabet;
  t.columns.reserve(cols.size());
  for (auto& c : cols) t.columns.emplace_back(std::move(c));
  if (auto diag = validate_tableau(t)) fail(Error::Kind::invalid, *diag);
  return t;
}

Shape shape(const YoungTableau& t) {
  Shape s;
  s.reserve(t.columns.size());
  for (const auto& c : t.columns) s.push_back(c.size());
  return s;
}

std::vector<int> word(const YoungTableau& t) {
  std::vector<int> w;
  for (const auto& c : t.columns)
    w.insert(w.end(), c.entries.begin(), c.entries.end());
  return w;
}

bool is_key(const YoungTableau& t) {
  for (int k = 0; k + 1 < t.num_columns(); ++k)
    if (!column_subset(t.columns[k + 1], t.columns[k])) return false;
  return true;
}

std::vector<Column> complement_columns_padded(const YoungTableau& t) {
  const int l = t.num_columns();
  std::vector<Column> out(l);
  for (int i = 0; i < l; ++i) {
    const Column& src = t.columns[l - 1 - i];
    std::vector<int> d;
    for (int j = t.alphabet; j >= 1; --j)
      if (!src.contains(j)) d.push_back(j);
    out[i] = Column(std::move(d));
  }
  return out;
}

ComplementResult complement(const YoungTableau& t) {
  ComplementResult res;
  res.tableau.alphabet = t.alphabet;
  auto cols = complement_columns_padded(t);
  while (!cols.empty() && cols.back().empty()) {
    cols.pop_back();
    ++res.dropped_columns;
  }
  for (const auto& c : cols)
    if (c.empty())
      fail(Error::Kind::internal, "empty complement column not at the tail");
  res.tableau.columns = std::move(cols);
  if (auto diag = validate_tableau(res.tableau))
    fail(Error::Kind::internal, "complement produced invalid tableau: " + *diag);
  return res;
}

}  // namespace tabkey
