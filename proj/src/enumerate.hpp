#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "alternating.hpp"
#include "signmatrix.hpp"
#include "tableau.hpp"

namespace tabkey {

using BigInt = boost::multiprecision::cpp_int;

// Streams every n x n ASM exactly once, in a fixed order: triangles are grown
// upward from the bottom row (1..n), each new row interlacing the one below,
// and the stream is lexicographic on the tuple (row n-1, .., row 1) of
// increasing entry sequences. Two runs always produce identical sequences.
void enumerate_asms(int n, const std::function<void(const Asm&)>& f);
std::vector<Asm> all_asms(int n);

struct MinusOneCensus {
  int n = 0;
  std::vector<BigInt> counts;  // counts[k] = number of ASMs with k entries -1
  BigInt total() const;
};

// jobs <= 0 picks hardware concurrency; the result does not depend on jobs.
MinusOneCensus census(int n, int jobs = 1);

// Closed forms for the number of n x n ASMs with exactly one / exactly two
// -1 entries; terms with a negative factorial argument are zero.
BigInt a_n_1(int n);
BigInt a_n_2(int n);

// Total number of 132 patterns over all permutations of S_n: C(n,3)^2 (n-3)!
BigInt count_132_formula(int n);
BigInt count_132_scan(int n);  // brute force over all permutations

// A permutation with a marked 132 pattern: rows i < j < k (0-based) with
// sigma(i) < sigma(k) < sigma(j). In bijection with one- -1 ASMs.
struct MarkedPattern {
  Permutation sigma;
  int i = 0, j = 0, k = 0;
  bool operator==(const MarkedPattern&) const = default;
};

// For an ASM with exactly one -1: its pseudo-key permutation together with
// the rows of the three 1-entries the removal touched.
MarkedPattern marked_pattern_of(const Asm& a);
Asm asm_of_marked_pattern(const MarkedPattern& p);

// Every valid tableau over {1..alphabet} with at most max_columns columns,
// including the empty one, in a fixed order.
void enumerate_tableaux(int alphabet, int max_columns,
                        const std::function<void(const YoungTableau&)>& f);

std::vector<YoungTableau> random_tableaux(int alphabet, int max_columns,
                                          int count, uint64_t seed);

// Every valid sign matrix with the given dimensions (backtracking over
// entries). definition1_only additionally admits matrices whose leading rows
// encode empty columns (they fail full validation).
void enumerate_sign_matrices(int rows, int cols,
                             const std::function<void(const SignMatrix&)>& f,
                             bool definition1_only = false);

}  // namespace tabkey
