#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tableau.hpp"

namespace tabkey {

// {-1,0,1} matrix whose column prefix sums stay in {0,1}, whose row prefix
// sums stay >= 0, and whose first row contains a 1 (so every row carries a
// nonempty column set; this makes validity coincide with the image of the
// tableau bijection). Storage is 0-based row-major, row 0 on top;
// serialization prints the top row first.
struct SignMatrix {
  int rows = 0, cols = 0;
  std::vector<int8_t> e;

  SignMatrix() = default;
  SignMatrix(int r, int c) : rows(r), cols(c), e(size_t(r) * c, 0) {}

  int at(int i, int j) const { return e[size_t(i) * cols + j]; }
  void set(int i, int j, int v) { e[size_t(i) * cols + j] = int8_t(v); }

  bool operator==(const SignMatrix&) const = default;
};

struct Position {
  int row = 0, col = 0;  // 0-based
  bool operator==(const Position&) const = default;
};

std::optional<std::string> validate_sign_matrix(const SignMatrix& m);
SignMatrix make_sign_matrix(int rows, int cols, std::vector<int> entries);

int minus_count(const SignMatrix& m);
bool is_permutation_matrix(const SignMatrix& m);

// Generalized direction of the bijection: row i describes column l-i against
// column l-i+1 (1 where an entry appears, -1 where one disappears). Empty
// columns are allowed here; from_tableau is the strict wrapper.
SignMatrix sign_matrix_from_columns(const std::vector<Column>& cols, int alphabet);

SignMatrix from_tableau(const YoungTableau& t);

// Inverse: read each column off the column prefix sums. Fails on matrices
// whose first row has no 1 (they would need an empty tableau column).
YoungTableau to_tableau(const SignMatrix& m);

// The unique -1 with no -1 above it nor to its right in its row: the
// rightmost -1 of the topmost row containing one. nullopt when none.
std::optional<Position> find_removable(const SignMatrix& m);

// 1-entries north-west of p whose rectangle to p holds no other 1, sorted by
// increasing row (their columns then strictly decrease). p must be removable.
std::vector<Position> neighbours(const SignMatrix& m, Position p);

// Zero the -1 and its q neighbours, then put new 1s at the inner corners
// (row of k-th neighbour, column of (k+1)-th) for k = 1..q-1.
SignMatrix remove_minus_one(const SignMatrix& m, Position p);

// Iterate remove_minus_one until no -1 remains; one step per -1.
SignMatrix eliminate_minus_ones(const SignMatrix& m);

YoungTableau left_key_elimination(const YoungTableau& t);

// complement, eliminate, complement back; columns of full height n complement
// to nothing and are reinstated in front (a key column of height n is {1..n}).
YoungTableau right_key_via_complement(const YoungTableau& t);

// Rectangle replacement at a -1 whose north-west quadrant holds no other -1:
// with k the nearest row above carrying a 1 in the same column and l the
// nearest column to the left carrying a 1 in the same row, move the corner
// (the 0 at (k,l) is forced to become the new 1).
SignMatrix pseudo_remove(const SignMatrix& m, Position p);

// Apply pseudo_remove at the topmost, then leftmost, -1 until none remains.
// The result is order-independent; this order is the normative one.
SignMatrix pseudo_key(const SignMatrix& m);

}  // namespace tabkey
