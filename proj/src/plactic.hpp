#pragma once

#include <utility>
#include <vector>

#include "tableau.hpp"

namespace tabkey {

using Word = std::vector<int>;

// Schensted row insertion. The convention is pinned by
// p_tableau(word(t)) == t for every valid tableau. If alphabet is 0 the
// result's alphabet is the maximum letter (0 for the empty word).
YoungTableau p_tableau(const Word& w, int alphabet = 0);

// true iff the words have the same insertion tableau (same columns).
bool knuth_equivalent(const Word& w1, const Word& w2);

struct ExchangeRecord {
  Column a, b;        // input pair
  Column a_out, b_out;  // the unique pair with swapped heights
};
using ExchangeLog = std::vector<ExchangeRecord>;

// The unique pair (A', B') with |A'| = |B|, |B'| = |A| whose two-column word
// is plactic-equivalent to AB (jeu de taquin across two columns). Equal
// heights give (A, B) back.
std::pair<Column, Column> column_exchange(const Column& a, const Column& b,
                                          ExchangeLog* log = nullptr);

struct FrankWord {
  std::vector<Column> columns;
  std::vector<int> target_heights;
};

// The unique word in the plactic class of t that factors into columns of the
// prescribed heights (a permutation of shape(t)); reached by adjacent
// exchanges, route-independent by uniqueness.
FrankWord frank_word(const YoungTableau& t, const std::vector<int>& heights,
                     ExchangeLog* log = nullptr);

// k-th column = first column of the frank word with heights
// (H_k, H_1, .., H_{k-1}, H_{k+1}, .., H_l).
YoungTableau left_key_classical(const YoungTableau& t, ExchangeLog* log = nullptr);

// k-th column = last column of the frank word with heights
// (H_1, .., H_{k-1}, H_{k+1}, .., H_l, H_k).
YoungTableau right_key_classical(const YoungTableau& t, ExchangeLog* log = nullptr);

}  // namespace tabkey
