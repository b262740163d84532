#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tabkey {

// Error kinds map onto the C API status codes and the CLI exit codes.
struct Error : std::runtime_error {
  enum class Kind { parse, invalid, domain, internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) {
  throw Error(k, msg);
}

// One column of a tableau in French notation: entries stored top-to-bottom,
// strictly decreasing. Reading a column is reading this vector in order.
struct Column {
  std::vector<int> entries;

  Column() = default;
  explicit Column(std::vector<int> e) : entries(std::move(e)) {}

  int size() const { return static_cast<int>(entries.size()); }
  bool empty() const { return entries.empty(); }
  bool contains(int x) const;
  // r-th entry from the bottom, 1-based; the bottom entry is the smallest.
  int from_bottom(int r) const { return entries[entries.size() - r]; }

  bool operator==(const Column&) const = default;
  bool operator<(const Column& o) const { return entries < o.entries; }
};

// true iff sub is a subset of sup (both strictly decreasing)
bool column_subset(const Column& sub, const Column& sup);

using Shape = std::vector<int>;

// Product of columns C_1..C_l with an explicit alphabet {1..n}. The alphabet
// matters: complement depends on it, and tableaux with equal columns but
// different alphabets are different values.
struct YoungTableau {
  int alphabet = 0;
  std::vector<Column> columns;

  int num_columns() const { return static_cast<int>(columns.size()); }
  bool operator==(const YoungTableau&) const = default;
};

// nullopt when valid, otherwise a diagnostic naming the first violated
// invariant in the order: column order, height monotonicity, row
// monotonicity, alphabet bound.
std::optional<std::string> validate_tableau(const YoungTableau& t);

// Validating constructor; throws Error(invalid) with the diagnostic.
YoungTableau make_tableau(int alphabet, std::vector<std::vector<int>> cols);

Shape shape(const YoungTableau& t);

// Column-by-column reading: C_1 top-to-bottom, then C_2, ...
std::vector<int> word(const YoungTableau& t);

// Key: every column contains the next one.
bool is_key(const YoungTableau& t);

struct ComplementResult {
  YoungTableau tableau;
  int dropped_columns = 0;  // trailing empty columns removed from the result
};

// Column i of the complement is {1..n} minus column l-i+1 of t. Columns of
// height n complement to empty columns; those are dropped and counted.
ComplementResult complement(const YoungTableau& t);

// Same map but keeping empty columns, always length l. Used where the
// row-reversal identity or alphabet-enlargement bookkeeping needs them.
std::vector<Column> complement_columns_padded(const YoungTableau& t);

}  // namespace tabkey
