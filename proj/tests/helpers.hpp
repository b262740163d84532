#pragma once

// Shared fixtures for the unit tests. Frozen values come from the worked
// examples; builders go through the library's own parser, which test_textio
// pins down independently.

#include <string>
#include <vector>

#include "alternating.hpp"
#include "signmatrix.hpp"
#include "tableau.hpp"
#include "textio.hpp"

namespace tt {

inline tabkey::YoungTableau tab(int alphabet,
                                std::vector<std::vector<int>> cols) {
  return tabkey::make_tableau(alphabet, std::move(cols));
}

// Rows of '.', '+', '-', top row first.
inline tabkey::SignMatrix mat(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) {
    s += r;
    s += '\n';
  }
  return tabkey::parse_matrix_compact(s);
}

inline tabkey::Asm asm_of(const std::vector<std::string>& rows) {
  return tabkey::make_asm(mat(rows));
}

// ---- the running three-column example and its keys ----
inline tabkey::YoungTableau running_example() {
  return tab(5, {{4, 2, 1}, {5, 2}, {5}});
}
inline tabkey::YoungTableau running_left_key() {
  return tab(5, {{4, 2, 1}, {4, 2}, {4}});
}
inline tabkey::YoungTableau running_right_key() {
  return tab(5, {{5, 2, 1}, {5, 2}, {5}});
}

// ---- the five-column worked example ----
inline tabkey::YoungTableau worked_t() {
  return tab(6, {{5, 2, 1}, {5, 4, 2}, {5, 4}, {6, 4}, {6}});
}
inline tabkey::YoungTableau worked_left_key() {  // U
  return tab(6, {{5, 2, 1}, {5, 2, 1}, {5, 2}, {5, 2}, {5}});
}
inline tabkey::YoungTableau worked_right_key() {
  return tab(6, {{6, 4, 2}, {6, 4, 2}, {6, 4}, {6, 4}, {6}});
}
inline tabkey::YoungTableau worked_complement() {
  return tab(6, {{5, 4, 3, 2, 1}, {5, 3, 2, 1}, {6, 3, 2, 1}, {6, 3, 1}, {6, 4, 3}});
}

inline tabkey::SignMatrix worked_m() {  // M(T) of the five-column example
  return mat({".....+", "...+..", "....+-", ".+....", "+..-.."});
}
inline tabkey::SignMatrix worked_intermediate() {  // after the first removal
  return mat({"....+.", "...+..", "......", ".+....", "+..-.."});
}
inline tabkey::SignMatrix worked_m_u() {  // M(U), fully eliminated
  return mat({"....+.", ".+....", "......", "+.....", "......"});
}
inline tabkey::SignMatrix worked_pk() {  // pK(M(T))
  return mat({"....+.", "+.....", "......", ".+....", "......"});
}

// ---- ASM fixtures ----
inline tabkey::Asm center_asm3() {  // the one size-3 ASM with a -1
  return asm_of({".+.", "+-+", ".+."});
}
inline tabkey::Asm example_asm5() {
  return asm_of({".+...", "..+..", "+-.+.", ".+-.+", "..+.."});
}
inline tabkey::Asm identity_asm(int n) {
  tabkey::SignMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return tabkey::make_asm(m);
}

}  // namespace tt
