#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "alternating.hpp"
#include "enumerate.hpp"
#include "plactic.hpp"
#include "signmatrix.hpp"
#include "tableau.hpp"

namespace tabkey {
namespace {

// Accumulates sub-checks for one criterion; remembers the first failure only.
struct Check {
  bool pass = true;
  long long checked = 0;
  std::string first_failure;

  template <class F>
  void require(bool ok, F&& describe) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      first_failure = describe();
    }
  }
  void require(bool ok, const char* what) {
    require(ok, [what] { return std::string(what); });
  }
  CheckResult result(int criterion, std::string name, std::string summary) const {
    return {criterion, std::move(name), pass,
            pass ? std::move(summary) : first_failure};
  }
};

std::string show_tableau(const YoungTableau& t) {
  std::ostringstream os;
  os << "n=" << t.alphabet << ":";
  for (size_t c = 0; c < t.columns.size(); ++c) {
    os << (c ? " | " : " ");
    for (size_t i = 0; i < t.columns[c].entries.size(); ++i)
      os << (i ? "," : "") << t.columns[c].entries[i];
  }
  return os.str();
}

std::string show_column(const Column& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.entries.size(); ++i)
    s += (i ? "," : "") + std::to_string(c.entries[i]);
  return s + "}";
}

SignMatrix sm(int rows, int cols, std::vector<int> entries) {
  return make_sign_matrix(rows, cols, std::move(entries));
}

// ---- shared corpus (criteria 2, 3, 5, 10) ----

struct Corpus {
  std::vector<YoungTableau> tableaux;
  long long exhaustive = 0;
  long long random = 0;
};

Corpus build_corpus(const VerifyOptions& opt) {
  Corpus c;
  for (int a = 1; a <= opt.tableau_alphabet; ++a)
    enumerate_tableaux(a, 4, [&](const YoungTableau& t) {
      c.tableaux.push_back(t);
      ++c.exhaustive;
    });
  for (auto& t : random_tableaux(6, 6, 1000, opt.seed)) {
    c.tableaux.push_back(std::move(t));
    ++c.random;
  }
  return c;
}

using ColumnPair = std::pair<std::vector<int>, std::vector<int>>;

// ---- criterion 1: the displayed worked examples ----

CheckResult worked_examples() {
  Check ck;

  auto t3 = make_tableau(5, {{4, 2, 1}, {5, 2}, {5}});
  ck.require(left_key_classical(t3) == make_tableau(5, {{4, 2, 1}, {4, 2}, {4}}),
             "left key of (421,52,5)");
  ck.require(right_key_classical(t3) == make_tableau(5, {{5, 2, 1}, {5, 2}, {5}}),
             "right key of (421,52,5)");

  auto t5 = make_tableau(6, {{5, 2, 1}, {5, 4, 2}, {5, 4}, {6, 4}, {6}});
  auto mt = from_tableau(t5);
  auto m_expected = sm(5, 6,
                       {0, 0, 0, 0, 0, 1,
                        0, 0, 0, 1, 0, 0,
                        0, 0, 0, 0, 1, -1,
                        0, 1, 0, 0, 0, 0,
                        1, 0, 0, -1, 0, 0});
  ck.require(mt == m_expected, "sign matrix of the five-column tableau");

  auto p1 = find_removable(mt);
  ck.require(p1 && p1->row == 2 && p1->col == 5, "first removable -1 at row 3, col 6");
  auto step1 = remove_minus_one(mt, *p1);
  ck.require(step1 == sm(5, 6,
                         {0, 0, 0, 0, 1, 0,
                          0, 0, 0, 1, 0, 0,
                          0, 0, 0, 0, 0, 0,
                          0, 1, 0, 0, 0, 0,
                          1, 0, 0, -1, 0, 0}),
             "matrix after the first removal");
  auto p2 = find_removable(step1);
  ck.require(p2 && p2->row == 4 && p2->col == 3, "second removable -1 at row 5, col 4");
  auto step2 = remove_minus_one(step1, *p2);
  auto mu = sm(5, 6,
               {0, 0, 0, 0, 1, 0,
                0, 1, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0,
                1, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0});
  ck.require(step2 == mu, "matrix after the second removal");
  ck.require(eliminate_minus_ones(mt) == mu, "full elimination = two removals");

  auto u = make_tableau(6, {{5, 2, 1}, {5, 2, 1}, {5, 2}, {5, 2}, {5}});
  ck.require(to_tableau(mu) == u, "tableau of the eliminated matrix");
  ck.require(left_key_elimination(t5) == u, "left key of the five-column tableau");

  ck.require(pseudo_key(mt) == sm(5, 6,
                                  {0, 0, 0, 0, 1, 0,
                                   1, 0, 0, 0, 0, 0,
                                   0, 0, 0, 0, 0, 0,
                                   0, 1, 0, 0, 0, 0,
                                   0, 0, 0, 0, 0, 0}),
             "pseudo-key of the five-column matrix");

  auto comp = complement(t5);
  ck.require(comp.dropped_columns == 0 &&
                 comp.tableau == make_tableau(6, {{5, 4, 3, 2, 1},
                                                  {5, 3, 2, 1},
                                                  {6, 3, 2, 1},
                                                  {6, 3, 1},
                                                  {6, 4, 3}}),
             "complement of the five-column tableau");
  ck.require(right_key_via_complement(t5) ==
                 make_tableau(6, {{6, 4, 2}, {6, 4, 2}, {6, 4}, {6, 4}, {6}}),
             "right key of the five-column tableau");

  return ck.result(1, "worked examples",
                   std::to_string(ck.checked) + " displayed values reproduced");
}

// ---- criteria 2 + 3: the two key theorems over the corpus ----

CheckResult left_key_theorem(const Corpus& corpus, std::set<ColumnPair>& pairs) {
  Check ck;
  for (const auto& t : corpus.tableaux) {
    ExchangeLog log;
    auto classical = left_key_classical(t, &log);
    for (auto& rec : log) pairs.insert({rec.a.entries, rec.b.entries});
    ck.require(left_key_elimination(t) == classical, [&] {
      return "left keys disagree on " + show_tableau(t);
    });
    ck.require(is_key(classical),
               [&] { return "left key is not a key on " + show_tableau(t); });
  }
  std::ostringstream os;
  os << "keys agree on " << corpus.exhaustive << " exhaustive + " << corpus.random
     << " random tableaux";
  return ck.result(2, "left key: elimination = classical", os.str());
}

CheckResult right_key_theorem(const Corpus& corpus, std::set<ColumnPair>& pairs) {
  Check ck;
  for (const auto& t : corpus.tableaux) {
    ExchangeLog log;
    auto classical = right_key_classical(t, &log);
    for (auto& rec : log) pairs.insert({rec.a.entries, rec.b.entries});
    ck.require(right_key_via_complement(t) == classical, [&] {
      return "right keys disagree on " + show_tableau(t);
    });
    auto lhs = complement(classical);
    auto rhs = left_key_classical(complement(t).tableau);
    ck.require(lhs.tableau == rhs, [&] {
      return "complement of right key != left key of complement on " +
             show_tableau(t);
    });
  }
  std::ostringstream os;
  os << "both identities hold on " << corpus.tableaux.size() << " tableaux";
  return ck.result(3, "right key: complement route = classical", os.str());
}

// ---- criterion 4: key of an ASM = key of its monotone triangle ----

CheckResult asm_key_corollary(int max_size) {
  Check ck;
  long long swept = 0;
  for (int n = 1; n <= max_size; ++n) {
    enumerate_asms(n, [&](const Asm& a) {
      ++swept;
      auto elim = eliminate_minus_ones(a.m);
      ck.require(is_permutation_matrix(elim), "elimination left a non-permutation");
      auto triangle = asm_to_monotone(a);
      auto key_triangle = to_tableau(elim);
      ck.require(validate_monotone(key_triangle) == std::nullopt,
                 "key triangle is not a monotone triangle");
      ck.require(key_triangle == left_key_elimination(triangle.t),
                 "key of ASM != elimination key of its triangle");
      ck.require(key_triangle == left_key_classical(triangle.t),
                 "key of ASM != classical key of its triangle");
      ck.require(permutation_matrix(key_of_asm(a)) == elim,
                 "key permutation does not reproduce the eliminated matrix");
    });
  }
  std::ostringstream os;
  os << swept << " matrices up to size " << max_size << " swept";
  return ck.result(4, "ASM key = key of its triangle", os.str());
}

// ---- criterion 5: exchange output is the unique plactic pair ----

CheckResult exchange_uniqueness(const std::set<ColumnPair>& pairs) {
  Check ck;

  // all strictly decreasing columns over {1..6}, grouped by height
  std::vector<std::vector<Column>> by_height(7);
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<int> entries;
    for (int v = 6; v >= 1; --v)
      if (mask & (1 << (v - 1))) entries.push_back(v);
    by_height[entries.size()].push_back(Column{entries});
  }

  for (const auto& [ae, be] : pairs) {
    Column a{ae}, b{be};
    auto target = column_exchange(a, b);
    Word w0 = ae;
    w0.insert(w0.end(), be.begin(), be.end());
    auto p0 = p_tableau(w0, 6);
    int found = 0;
    std::pair<Column, Column> unique_pair;
    for (const auto& x : by_height[be.size()])
      for (const auto& y : by_height[ae.size()]) {
        Word w = x.entries;
        w.insert(w.end(), y.entries.begin(), y.entries.end());
        if (p_tableau(w, 6).columns == p0.columns) {
          ++found;
          unique_pair = {x, y};
        }
      }
    ck.require(found == 1, [&] {
      return "pair " + show_column(a) + "," + show_column(b) + " has " +
             std::to_string(found) + " plactic-equivalent pairs of the swapped heights";
    });
    ck.require(found == 1 && unique_pair.first == target.first &&
                   unique_pair.second == target.second,
               [&] {
                 return "exchange of " + show_column(a) + "," + show_column(b) +
                        " is not the brute-force pair";
               });
  }
  std::ostringstream os;
  os << pairs.size() << " distinct adjacent pairs checked against exhaustive search";
  return ck.result(5, "two-column exchange uniqueness", os.str());
}

// ---- criterion 6: the sign-matrix bijection is a bijection ----

CheckResult signmatrix_bijection() {
  Check ck;
  long long swept = 0, keys = 0;
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 5; ++c)
      enumerate_sign_matrices(r, c, [&](const SignMatrix& m) {
        ++swept;
        auto t = to_tableau(m);
        ck.require(validate_tableau(t) == std::nullopt,
                   "matrix maps to an invalid tableau");
        ck.require(t.alphabet == c && t.num_columns() == r,
                   "matrix maps to a tableau of the wrong dimensions");
        ck.require(from_tableau(t) == m, "matrix round trip failed");
        bool key = is_key(t);
        if (key) ++keys;
        ck.require(key == (minus_count(m) == 0), [&] {
          return "key <=> no -1 fails on " + show_tableau(t);
        });
      });
  std::ostringstream os;
  os << swept << " matrices (rows<=4, cols<=5) round-tripped, " << keys
     << " of them keys";
  return ck.result(6, "sign-matrix bijection", os.str());
}

// ---- criterion 7: pseudo-key order-independence and lattice bounds ----

// pseudo_key with the elimination order chosen at random; any -1 with a
// -1-free north-west quadrant is eligible.
SignMatrix pseudo_key_random(SignMatrix m, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Position> eligible;
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        if (m.at(i, j) != -1) continue;
        bool ok = true;
        for (int i2 = 0; ok && i2 <= i; ++i2)
          for (int j2 = 0; ok && j2 <= j; ++j2)
            if (m.at(i2, j2) == -1 && !(i2 == i && j2 == j)) ok = false;
        if (ok) eligible.push_back({i, j});
      }
    if (eligible.empty()) break;
    m = pseudo_remove(m, eligible[rng() % eligible.size()]);
  }
  return m;
}

CheckResult pseudo_key_properties(int max_size, std::uint64_t seed) {
  Check ck;
  std::mt19937_64 rng(seed ^ 0x706bULL);
  long long swept = 0;
  for (int n = 1; n <= max_size; ++n) {
    enumerate_asms(n, [&](const Asm& a) {
      ++swept;
      auto normative = pseudo_key(a.m);
      for (int trial = 0; trial < 20; ++trial)
        ck.require(pseudo_key_random(a.m, rng) == normative,
                   "pseudo-key depends on the elimination order");
      Asm key{permutation_matrix(key_of_asm(a))};
      Asm pseudo{permutation_matrix(pseudo_key_of_asm(a))};
      ck.require(asm_leq(pseudo, key), "pseudo-key above key in the lattice");
      ck.require(asm_leq(key, a), "key above its ASM in the lattice");
    });
  }
  std::ostringstream os;
  os << swept << " matrices, 20 random orders each";
  return ck.result(7, "pseudo-key order-independence and pK <= K <= M", os.str());
}

// ---- criterion 8: enumeration against the closed formulas ----

BigInt count_at(const MinusOneCensus& c, size_t k) {
  return k < c.counts.size() ? c.counts[k] : BigInt(0);
}

CheckResult enumeration_formulas(const VerifyOptions& opt) {
  Check ck;
  const BigInt totals[] = {1, 2, 7, 42, 429, 7436};
  const BigInt ones[] = {1, 16, 200, 2400};  // n = 3..6
  const BigInt twos[] = {2, 94, 2684};       // n = 4..6

  for (int n = 1; n <= 6; ++n) {
    auto c = census(n, opt.jobs);
    ck.require(c.total() == totals[n - 1], [&] {
      return "census total wrong at size " + std::to_string(n);
    });
    if (n >= 3)
      ck.require(count_at(c, 1) == ones[n - 3] && count_at(c, 1) == a_n_1(n), [&] {
        return "one--1 count wrong at size " + std::to_string(n);
      });
    if (n >= 4)
      ck.require(count_at(c, 2) == twos[n - 4] && count_at(c, 2) == a_n_2(n), [&] {
        return "two--1 count wrong at size " + std::to_string(n);
      });
    ck.require(count_at(c, 1) == count_132_scan(n) &&
                   count_at(c, 1) == count_132_formula(n),
               [&] {
                 return "132-pattern total disagrees at size " + std::to_string(n);
               });
  }

  // the marked-pattern map is a two-sided bijection up to size 5
  long long mapped = 0;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    long long with_one = 0;
    enumerate_asms(n, [&](const Asm& a) {
      if (minus_count(a.m) != 1) return;
      ++with_one;
      ++mapped;
      auto p = marked_pattern_of(a);
      images.insert({p.sigma.sigma, {p.i, p.j, p.k}});
      ck.require(asm_of_marked_pattern(p) == a, "marked pattern does not invert");
    });
    ck.require(BigInt(with_one) == a_n_1(n), "one--1 matrix count off");
    ck.require(BigInt(images.size()) == a_n_1(n), "marked-pattern map not injective");

    // reverse direction: every marked pattern comes from exactly one such ASM
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    do {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            if (!(sigma[i] < sigma[k] && sigma[k] < sigma[j])) continue;
            ++mapped;
            MarkedPattern p{Permutation{sigma}, i, j, k};
            auto a = asm_of_marked_pattern(p);
            ck.require(minus_count(a.m) == 1, "pattern image has wrong -1 count");
            ck.require(marked_pattern_of(a) == p, "pattern round trip failed");
          }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  std::string extra;
  if (opt.slow) {
    auto c7 = census(7, opt.jobs);
    ck.require(c7.total() == 218348, "census total wrong at size 7");
    ck.require(count_at(c7, 1) == 29400 && count_at(c7, 1) == a_n_1(7),
               "one--1 count wrong at size 7");
    ck.require(count_at(c7, 2) == a_n_2(7), "two--1 count wrong at size 7");
    ck.require(count_at(c7, 1) == count_132_scan(7), "132 total wrong at size 7");
    extra = " (including size 7)";
  }

  std::ostringstream os;
  os << "censuses up to size " << (opt.slow ? 7 : 6) << " match the formulas" << extra
     << "; bijection checked both ways on " << mapped << " cases";
  return ck.result(8, "enumeration formulas", os.str());
}

// ---- criterion 9: lattice closure and laws ----

void lattice_laws(Check& ck, const MonotoneTriangle& a, const MonotoneTriangle& b,
                  const MonotoneTriangle& c) {
  ck.require(validate_monotone(mt_sup(a, b).t) == std::nullopt, "sup not monotone");
  ck.require(validate_monotone(mt_inf(a, b).t) == std::nullopt, "inf not monotone");
  ck.require(mt_sup(a, a) == a && mt_inf(a, a) == a, "idempotence fails");
  ck.require(mt_sup(a, b) == mt_sup(b, a) && mt_inf(a, b) == mt_inf(b, a),
             "commutativity fails");
  ck.require(mt_sup(a, mt_inf(a, b)) == a && mt_inf(a, mt_sup(a, b)) == a,
             "absorption fails");
  ck.require(mt_sup(mt_sup(a, b), c) == mt_sup(a, mt_sup(b, c)) &&
                 mt_inf(mt_inf(a, b), c) == mt_inf(a, mt_inf(b, c)),
             "associativity fails");
  ck.require(triangle_leq(mt_inf(a, b), a) && triangle_leq(a, mt_sup(a, b)),
             "meet/join do not bound their arguments");
}

CheckResult lattice_closure(std::uint64_t seed) {
  Check ck;
  long long exhaustive_pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<MonotoneTriangle> ts;
    for (auto& a : all_asms(n)) ts.push_back(asm_to_monotone(a));
    for (const auto& a : ts)
      for (const auto& b : ts) {
        ++exhaustive_pairs;
        lattice_laws(ck, a, b, a);
        // order transported to matrices agrees with the triangle order
        ck.require(asm_leq(monotone_to_asm(a), monotone_to_asm(b)) ==
                       triangle_leq(a, b),
                   "matrix order disagrees with triangle order");
      }
  }
  for (int n = 5; n <= 6; ++n) {
    std::vector<MonotoneTriangle> ts;
    for (auto& a : all_asms(n)) ts.push_back(asm_to_monotone(a));
    std::mt19937_64 rng(seed ^ (0x1a77ULL + n));
    for (int trial = 0; trial < 10000; ++trial) {
      const auto& a = ts[rng() % ts.size()];
      const auto& b = ts[rng() % ts.size()];
      const auto& c = ts[rng() % ts.size()];
      lattice_laws(ck, a, b, c);
    }
  }
  std::ostringstream os;
  os << exhaustive_pairs << " exhaustive pairs (sizes 1-4) + 10000 random triples"
     << " each at sizes 5 and 6";
  return ck.result(9, "lattice closure and laws", os.str());
}

// ---- criterion 10: complement involution and the row-reversal identity ----

CheckResult complement_identities(const Corpus& corpus) {
  Check ck;
  for (const auto& t : corpus.tableaux) {
    auto c1 = complement(t);
    int full = 0;
    for (const auto& col : t.columns)
      if (col.size() == t.alphabet) ++full;
    ck.require(c1.dropped_columns == full,
               "dropped count != number of full columns");
    auto c2 = complement(c1.tableau);
    ck.require(c2.dropped_columns == 0, "double complement dropped a column");
    YoungTableau trimmed{t.alphabet,
                         {t.columns.begin() + c1.dropped_columns, t.columns.end()}};
    ck.require(c2.tableau == trimmed, [&] {
      return "complement is not an involution on " + show_tableau(t);
    });

    // rows 2..l of the complement's sign matrix are rows 2..l of the
    // tableau's matrix in reverse order: M[i][j] = M'[l-i+2][j] for i > 1.
    // (The padded complement keeps empty columns so both matrices have l rows.)
    int l = t.num_columns();
    if (l < 2) continue;
    auto m = from_tableau(t);
    auto m2 = sign_matrix_from_columns(complement_columns_padded(t), t.alphabet);
    for (int i = 1; i < l; ++i)
      for (int j = 0; j < t.alphabet; ++j)
        ck.require(m.at(i, j) == m2.at(l - i, j), [&] {
          return "row-reversal identity fails on " + show_tableau(t);
        });
  }
  std::ostringstream os;
  os << "involution and M[i] = M'[l-i+2] (i > 1) hold on " << corpus.tableaux.size()
     << " tableaux";
  return ck.result(10, "complement identities", os.str());
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt,
                                          const ProgressFn& progress) {
  auto report = [&](const std::string& line) {
    if (progress) progress(line);
  };

  report("building tableau corpus");
  auto corpus = build_corpus(opt);

  std::vector<CheckResult> results;
  std::set<ColumnPair> pairs;

  report("1: worked examples");
  results.push_back(worked_examples());
  report("2: left key theorem");
  results.push_back(left_key_theorem(corpus, pairs));
  report("3: right key theorem");
  results.push_back(right_key_theorem(corpus, pairs));
  report("4: ASM key corollary");
  results.push_back(asm_key_corollary(opt.max_size));
  report("5: exchange uniqueness (" + std::to_string(pairs.size()) + " pairs)");
  results.push_back(exchange_uniqueness(pairs));
  report("6: sign-matrix bijection");
  results.push_back(signmatrix_bijection());
  report("7: pseudo-key properties");
  results.push_back(pseudo_key_properties(opt.max_size, opt.seed));
  report("8: enumeration formulas");
  results.push_back(enumeration_formulas(opt));
  report("9: lattice closure");
  results.push_back(lattice_closure(opt.seed));
  report("10: complement identities");
  results.push_back(complement_identities(corpus));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace tabkey
