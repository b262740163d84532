#pragma once

#include <optional>
#include <string>

#include "signmatrix.hpp"
#include "tableau.hpp"

namespace tabkey {

// Square sign matrix whose rows and columns each sum to 1 with alternating
// nonzero entries (so every row/column prefix sum is 0 or 1 and ends at 1).
struct Asm {
  SignMatrix m;
  int size() const { return m.rows; }
  bool operator==(const Asm&) const = default;
};

// Staircase tableau (shape n, n-1, .., 1, alphabet n) whose entries are
// non-decreasing along every south-east to north-west diagonal.
struct MonotoneTriangle {
  YoungTableau t;
  int size() const { return t.alphabet; }
  bool operator==(const MonotoneTriangle&) const = default;
};

// sigma[i] = j means a 1 in row i+1, column j (values 1-based, index 0-based).
struct Permutation {
  std::vector<int> sigma;
  int size() const { return static_cast<int>(sigma.size()); }
  bool operator==(const Permutation&) const = default;
};

std::optional<std::string> validate_asm(const SignMatrix& m);
Asm make_asm(SignMatrix m);  // throws Error(domain) with the diagnostic

std::optional<std::string> validate_monotone(const YoungTableau& t);
MonotoneTriangle make_monotone(YoungTableau t);  // throws Error(domain)

// Restriction of the sign-matrix bijection to ASMs.
MonotoneTriangle asm_to_monotone(const Asm& a);
Asm monotone_to_asm(const MonotoneTriangle& t);

// Eliminating every -1 of an ASM leaves a permutation matrix.
Permutation key_of_asm(const Asm& a);
Permutation pseudo_key_of_asm(const Asm& a);

SignMatrix permutation_matrix(const Permutation& p);
Permutation permutation_of_matrix(const SignMatrix& m);  // Error(domain) if not one

// Box-wise max/min of the bottom-aligned triangle entries; monotone
// triangles are closed under both (the lattice operations).
MonotoneTriangle mt_sup(const MonotoneTriangle& a, const MonotoneTriangle& b);
MonotoneTriangle mt_inf(const MonotoneTriangle& a, const MonotoneTriangle& b);

bool triangle_leq(const MonotoneTriangle& a, const MonotoneTriangle& b);
bool asm_leq(const Asm& a, const Asm& b);

}  // namespace tabkey
