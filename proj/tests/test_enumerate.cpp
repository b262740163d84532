#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "textio.hpp"

using namespace tabkey;

namespace {

std::string key_of(const SignMatrix& m) { return format_matrix_compact(m); }

// all candidate {-1,0,1} fillings of an r x c grid
void brute_matrices(int rows, int cols,
                    const std::function<void(const SignMatrix&)>& f) {
  SignMatrix m(rows, cols);
  const size_t cells = size_t(rows) * cols;
  std::vector<int> v(cells, -1);
  while (true) {
    for (size_t k = 0; k < cells; ++k) m.e[k] = int8_t(v[k]);
    f(m);
    size_t k = 0;
    while (k < cells && v[k] == 1) v[k++] = -1;
    if (k == cells) break;
    ++v[k];
  }
}

bool definition1_valid(const SignMatrix& m) {
  for (int j = 0; j < m.cols; ++j) {
    int s = 0;
    for (int i = 0; i < m.rows; ++i) {
      s += m.at(i, j);
      if (s < 0 || s > 1) return false;
    }
  }
  for (int i = 0; i < m.rows; ++i) {
    int s = 0;
    for (int j = 0; j < m.cols; ++j) {
      s += m.at(i, j);
      if (s < 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ASM streams: counts, validity, determinism") {
  const std::vector<int> totals{1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    auto first = all_asms(n);
    CHECK(int(first.size()) == totals[n - 1]);

    std::set<std::string> seen;
    for (const auto& a : first) {
      CHECK_FALSE(validate_asm(a.m).has_value());
      seen.insert(key_of(a.m));
    }
    CHECK(seen.size() == first.size());

    // a second run yields the identical sequence
    std::vector<Asm> second;
    enumerate_asms(n, [&](const Asm& a) { second.push_back(a); });
    CHECK(second == first);
  }
}

TEST_CASE("census worked values") {
  auto c3 = census(3);
  REQUIRE(c3.counts.size() == 2);
  CHECK(c3.counts[0] == 6);
  CHECK(c3.counts[1] == 1);
  CHECK(c3.total() == 7);

  auto c4 = census(4);
  REQUIRE(c4.counts.size() == 3);
  CHECK(c4.counts[0] == 24);
  CHECK(c4.counts[1] == 16);
  CHECK(c4.counts[2] == 2);

  auto c5 = census(5);
  REQUIRE(c5.counts.size() == 5);
  CHECK(c5.counts[0] == 120);
  CHECK(c5.counts[1] == 200);
  CHECK(c5.counts[2] == 94);
  CHECK(c5.counts[3] == 14);
  CHECK(c5.counts[4] == 1);
}

TEST_CASE("census totals, factorial floor and worker independence") {
  const std::vector<int> totals{1, 2, 7, 42, 429, 7436};
  BigInt factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= n;
    auto c = census(n);
    CHECK(c.n == n);
    CHECK(c.total() == totals[n - 1]);
    CHECK(c.counts[0] == factorial);
  }
  auto serial = census(5, 1);
  for (int jobs : {0, 2, 3, 7})
    CHECK(census(5, jobs).counts == serial.counts);
}

TEST_CASE("closed formulas for one and two -1 entries") {
  CHECK(a_n_1(1) == 0);
  CHECK(a_n_1(2) == 0);
  CHECK(a_n_1(3) == 1);
  CHECK(a_n_1(4) == 16);
  CHECK(a_n_1(5) == 200);
  CHECK(a_n_1(6) == 2400);
  CHECK(a_n_1(7) == 29400);

  CHECK(a_n_2(2) == 0);
  CHECK(a_n_2(3) == 0);
  CHECK(a_n_2(4) == 2);
  CHECK(a_n_2(5) == 94);
  CHECK(a_n_2(6) == 2684);
  CHECK(a_n_2(7) == 63308);

  // against the census
  for (int n = 3; n <= 6; ++n) {
    auto c = census(n);
    CHECK(c.counts[1] == a_n_1(n));
    if (int(c.counts.size()) > 2) CHECK(c.counts[2] == a_n_2(n));
  }
}

TEST_CASE("132 pattern counts") {
  CHECK(count_132_formula(2) == 0);
  CHECK(count_132_formula(3) == 1);
  CHECK(count_132_formula(5) == 200);
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_132_formula(n) == count_132_scan(n));
    CHECK(count_132_formula(n) == a_n_1(n));
  }
  // the only occurrence at n = 3 sits in sigma = 132 itself
  CHECK(count_132_scan(3) == 1);
}

TEST_CASE("marked pattern of the center ASM") {
  auto p = marked_pattern_of(tt::center_asm3());
  CHECK(p.sigma == Permutation{{1, 3, 2}});
  CHECK(p.i == 0);
  CHECK(p.j == 1);
  CHECK(p.k == 2);
  CHECK(asm_of_marked_pattern(p) == tt::center_asm3());

  CHECK_THROWS_AS(marked_pattern_of(tt::identity_asm(3)), Error);
}

TEST_CASE("marked patterns biject with one- -1 ASMs, sizes 3..5") {
  for (int n = 3; n <= 5; ++n) {
    // forward: every one- -1 ASM yields a distinct valid marked pattern
    std::set<std::string> images;
    int ones = 0;
    for (const auto& a : all_asms(n)) {
      if (minus_count(a.m) != 1) continue;
      ++ones;
      auto p = marked_pattern_of(a);
      CHECK(p.sigma.size() == n);
      CHECK(0 <= p.i);
      CHECK(p.i < p.j);
      CHECK(p.j < p.k);
      CHECK(p.k < n);
      CHECK(p.sigma.sigma[p.i] < p.sigma.sigma[p.k]);
      CHECK(p.sigma.sigma[p.k] < p.sigma.sigma[p.j]);
      std::string img;
      for (int v : p.sigma.sigma) img += std::to_string(v) + " ";
      img += std::to_string(p.i) + "," + std::to_string(p.j) + "," +
             std::to_string(p.k);
      images.insert(img);
      CHECK(asm_of_marked_pattern(p) == a);
    }
    CHECK(BigInt(ones) == a_n_1(n));
    CHECK(int(images.size()) == ones);

    // backward: every marked pattern yields a one- -1 ASM that maps back
    int patterns = 0;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    do {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            if (!(sigma[i] < sigma[k] && sigma[k] < sigma[j])) continue;
            ++patterns;
            MarkedPattern p{Permutation{sigma}, i, j, k};
            auto a = asm_of_marked_pattern(p);
            CHECK_FALSE(validate_asm(a.m).has_value());
            CHECK(minus_count(a.m) == 1);
            CHECK(marked_pattern_of(a) == p);
          }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(patterns == ones);
  }

  // a two- -1 ASM is rejected
  for (const auto& a : all_asms(4))
    if (minus_count(a.m) == 2) {
      CHECK_THROWS_AS(marked_pattern_of(a), Error);
      break;
    }
}

TEST_CASE("tableau enumeration equals the brute-force filter") {
  auto brute = [](int alphabet, int max_columns) {
    // grow column sequences depth-first over all nonempty column sets
    std::vector<Column> cols;
    for (int mask = 1; mask < (1 << alphabet); ++mask) {
      std::vector<int> e;
      for (int x = alphabet; x >= 1; --x)
        if (mask & (1 << (x - 1))) e.push_back(x);
      cols.push_back(Column(std::move(e)));
    }
    std::set<std::string> out;
    std::vector<std::vector<int>> stack;
    std::function<void()> rec = [&] {
      YoungTableau t;
      t.alphabet = alphabet;
      for (const auto& c : stack) t.columns.push_back(Column(c));
      if (!validate_tableau(t)) out.insert(format_tableau_text(t));
      if (int(stack.size()) == max_columns) return;
      for (const auto& c : cols) {
        stack.push_back(c.entries);
        rec();
        stack.pop_back();
      }
    };
    rec();
    return out;
  };

  for (int alphabet = 1; alphabet <= 3; ++alphabet) {
    auto expect = brute(alphabet, 2);
    std::set<std::string> got;
    int n = 0;
    enumerate_tableaux(alphabet, 2, [&](const YoungTableau& t) {
      CHECK_FALSE(validate_tableau(t).has_value());
      CHECK(t.alphabet == alphabet);
      CHECK(t.num_columns() <= 2);
      got.insert(format_tableau_text(t));
      ++n;
    });
    CHECK(got == expect);
    CHECK(int(got.size()) == n);  // no duplicates
    CHECK(got.count("n=" + std::to_string(alphabet) + ":") == 1);  // empty one
  }
}

TEST_CASE("random tableaux are seeded and well-formed") {
  auto a = random_tableaux(6, 6, 50, 12345);
  auto b = random_tableaux(6, 6, 50, 12345);
  CHECK(a == b);
  REQUIRE(a.size() == 50);
  for (const auto& t : a) {
    CHECK_FALSE(validate_tableau(t).has_value());
    CHECK(t.alphabet == 6);
    CHECK(t.num_columns() <= 6);
  }
  auto c = random_tableaux(6, 6, 50, 54321);
  CHECK_FALSE(a == c);
}

TEST_CASE("sign matrix enumeration equals the brute-force filter") {
  for (int rows = 1; rows <= 2; ++rows)
    for (int cols = 1; cols <= 3; ++cols) {
      std::set<std::string> strict_expect, def1_expect;
      brute_matrices(rows, cols, [&](const SignMatrix& m) {
        if (!validate_sign_matrix(m)) strict_expect.insert(key_of(m));
        if (definition1_valid(m)) def1_expect.insert(key_of(m));
      });

      std::set<std::string> strict, def1;
      enumerate_sign_matrices(rows, cols,
                              [&](const SignMatrix& m) { strict.insert(key_of(m)); });
      enumerate_sign_matrices(
          rows, cols, [&](const SignMatrix& m) { def1.insert(key_of(m)); },
          /*definition1_only=*/true);

      CHECK(strict == strict_expect);
      CHECK(def1 == def1_expect);
      CHECK(strict.size() < def1.size());  // relaxed reading is a superset
    }
}
