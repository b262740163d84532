#include "enumerate.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace tabkey {

namespace {

// rows of the triangle from the bottom up: out[0] = (1..n), out.back() on top
using RowStack = std::vector<std::vector<int>>;

// enumerate, in ascending lexicographic order, the rows interlacing b from
// above: a has one entry less and b[i] <= a[i] <= b[i+1], strictly increasing
template <typename Fn>
void for_each_interlacing(const std::vector<int>& b, Fn&& fn) {
  const int s = static_cast<int>(b.size()) - 1;
  std::vector<int> a(s);
  if (s == 0) { fn(a); return; }
  int i = 0;
  a[0] = b[0];
  for (;;) {
    if (i == s) {
      fn(a);
      --i;
      ++a[i];
    }
    int lo = i > 0 ? std::max(b[i], a[i - 1] + 1) : b[0];
    if (a[i] < lo) a[i] = lo;
    if (a[i] > b[i + 1]) {
      if (i == 0) return;
      --i;
      ++a[i];
      continue;
    }
    ++i;
    if (i < s) a[i] = 0;  // reset; lower bound clamps on entry
  }
}

int new_entries(const std::vector<int>& a, const std::vector<int>& b) {
  // |a - b| for sorted sequences: the -1 count of the matrix row between them
  int cnt = 0;
  size_t ib = 0;
  for (int x : a) {
    while (ib < b.size() && b[ib] < x) ++ib;
    if (ib == b.size() || b[ib] != x) ++cnt;
  }
  return cnt;
}

Asm asm_from_rows(const RowStack& rows) {
  const int n = static_cast<int>(rows.size());
  SignMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    // matrix row r compares the set of size r+1 with the one of size r
    const std::vector<int>& cur = rows[n - 1 - r];
    const std::vector<int>* prev = r == 0 ? nullptr : &rows[n - r];
    for (int x : cur) m.set(r, x - 1, 1);
    if (prev)
      for (int x : *prev) m.set(r, x - 1, m.at(r, x - 1) - 1);
  }
  return Asm{std::move(m)};
}

template <typename Leaf>
void grow(RowStack& rows, const Leaf& leaf) {
  if (rows.back().size() == 1) {
    leaf(rows);
    return;
  }
  for_each_interlacing(rows.back(), [&](const std::vector<int>& a) {
    rows.push_back(a);
    grow(rows, leaf);
    rows.pop_back();
  });
}

int normalize_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

void enumerate_asms(int n, const std::function<void(const Asm&)>& f) {
  if (n < 1) fail(Error::Kind::domain, "size must be at least 1");
  RowStack rows;
  rows.reserve(n);  // growing must not reallocate under the interlacing iterator
  std::vector<int> bottom(n);
  for (int i = 0; i < n; ++i) bottom[i] = i + 1;
  rows.push_back(std::move(bottom));
  grow(rows, [&](const RowStack& r) { f(asm_from_rows(r)); });
}

std::vector<Asm> all_asms(int n) {
  std::vector<Asm> out;
  enumerate_asms(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

BigInt MinusOneCensus::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts) t += c;
  return t;
}

MinusOneCensus census(int n, int jobs) {
  if (n < 1) fail(Error::Kind::domain, "size must be at least 1");
  jobs = normalize_jobs(jobs);
  MinusOneCensus out;
  out.n = n;

  std::vector<int> bottom(n);
  for (int i = 0; i < n; ++i) bottom[i] = i + 1;
  if (n == 1) {
    out.counts = {BigInt(1)};
    return out;
  }
  // partition by the first grown row, then count each subtree independently
  std::vector<std::vector<int>> level1;
  for_each_interlacing(bottom, [&](const std::vector<int>& a) {
    level1.push_back(a);
  });
  const int workers = std::min<int>(jobs, static_cast<int>(level1.size()));
  std::vector<std::vector<uint64_t>> tallies(level1.size());
  auto run = [&](size_t from, size_t to) {
    for (size_t idx = from; idx < to; ++idx) {
      std::vector<uint64_t>& tally = tallies[idx];
      RowStack rows;
      rows.reserve(bottom.size());  // no reallocation under the iterator
      rows.push_back(bottom);
      rows.push_back(level1[idx]);
      int minus0 = new_entries(level1[idx], bottom);
      struct Rec {
        std::vector<uint64_t>& tally;
        void walk(RowStack& rows, int minus) {
          if (rows.back().size() == 1) {
            if (tally.size() <= size_t(minus)) tally.resize(minus + 1, 0);
            ++tally[minus];
            return;
          }
          for_each_interlacing(rows.back(), [&](const std::vector<int>& a) {
            int add = new_entries(a, rows.back());
            rows.push_back(a);
            walk(rows, minus + add);
            rows.pop_back();
          });
        }
      } rec{tally};
      rec.walk(rows, minus0);
    }
  };
  if (workers <= 1) {
    run(0, level1.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (level1.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      size_t from = w * chunk;
      size_t to = std::min(level1.size(), from + chunk);
      if (from >= to) break;
      pool.emplace_back(run, from, to);
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& tally : tallies) {
    if (out.counts.size() < tally.size()) out.counts.resize(tally.size(), 0);
    for (size_t k = 0; k < tally.size(); ++k) out.counts[k] += tally[k];
  }
  while (!out.counts.empty() && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) fail(Error::Kind::internal, "formula division is not exact");
  return q;
}

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return exact_div(factorial(n), factorial(k) * factorial(n - k));
}

}  // namespace

BigInt a_n_1(int n) {
  if (n < 3) return 0;
  return exact_div(factorial(n) * factorial(n), BigInt(36) * factorial(n - 3));
}

BigInt a_n_2(int n) {
  BigInt sum = 0;
  const BigInt sq = factorial(n) * factorial(n);
  if (n >= 6) sum += exact_div(sq, BigInt(2592) * factorial(n - 6));
  if (n >= 5) sum += exact_div(BigInt(11) * sq, BigInt(3600) * factorial(n - 5));
  if (n >= 4) sum += exact_div(sq, BigInt(288) * factorial(n - 4));
  return sum;
}

BigInt count_132_formula(int n) {
  if (n < 3) return 0;
  return binom(n, 3) * binom(n, 3) * factorial(n - 3);
}

BigInt count_132_scan(int n) {
  if (n < 1) return 0;
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  BigInt total = 0;
  do {
    long local = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          if (s[i] < s[k] && s[k] < s[j]) ++local;
    total += local;
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

MarkedPattern marked_pattern_of(const Asm& a) {
  if (auto diag = validate_asm(a.m)) fail(Error::Kind::domain, *diag);
  if (minus_count(a.m) != 1)
    fail(Error::Kind::domain, "matrix must have exactly one -1");
  const int n = a.size();
  int r = -1, c = -1;
  for (int i = 0; i < n && r < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (a.m.at(i, j) == -1) { r = i; c = j; break; }
  int above = -1, below = -1;
  for (int i = r; i-- > 0;)
    if (a.m.at(i, c) == 1) { above = i; break; }
  for (int i = r + 1; i < n; ++i)
    if (a.m.at(i, c) == 1) { below = i; break; }
  MarkedPattern p{pseudo_key_of_asm(a), above, r, below};
  if (!(p.i < p.j && p.j < p.k) ||
      !(p.sigma.sigma[p.i] < p.sigma.sigma[p.k] &&
        p.sigma.sigma[p.k] < p.sigma.sigma[p.j]))
    fail(Error::Kind::internal, "marked rows do not form a 132 pattern");
  return p;
}

Asm asm_of_marked_pattern(const MarkedPattern& p) {
  const int n = p.sigma.size();
  if (!(0 <= p.i && p.i < p.j && p.j < p.k && p.k < n))
    fail(Error::Kind::domain, "marked rows must satisfy i < j < k");
  SignMatrix m = permutation_matrix(p.sigma);  // validates sigma
  const int ci = p.sigma.sigma[p.i] - 1;
  const int cj = p.sigma.sigma[p.j] - 1;
  const int ck = p.sigma.sigma[p.k] - 1;
  if (!(ci < ck && ck < cj))
    fail(Error::Kind::domain, "marked rows must form a 132 pattern");
  m.set(p.i, ci, 0);
  m.set(p.i, ck, 1);
  m.set(p.j, ci, 1);
  m.set(p.j, ck, -1);
  if (auto diag = validate_asm(m))
    fail(Error::Kind::internal, "marked pattern mapped to a non-ASM: " + *diag);
  if (minus_count(m) != 1)
    fail(Error::Kind::internal, "marked pattern must map to a single -1");
  return Asm{std::move(m)};
}

namespace {

bool columns_compatible(const Column& prev, const Column& next) {
  if (next.size() > prev.size()) return false;
  for (int r = 1; r <= next.size(); ++r)
    if (prev.from_bottom(r) > next.from_bottom(r)) return false;
  return true;
}

std::vector<Column> all_columns(int alphabet) {
  std::vector<Column> out;
  for (unsigned mask = 1; mask < (1u << alphabet); ++mask) {
    std::vector<int> e;
    for (int x = alphabet; x >= 1; --x)
      if (mask & (1u << (x - 1))) e.push_back(x);
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

void enumerate_tableaux(int alphabet, int max_columns,
                        const std::function<void(const YoungTableau&)>& f) {
  if (alphabet < 1 || alphabet > 20)
    fail(Error::Kind::domain, "alphabet out of range");
  const std::vector<Column> cols = all_columns(alphabet);
  YoungTableau t;
  t.alphabet = alphabet;
  struct Rec {
    const std::vector<Column>& cols;
    const std::function<void(const YoungTableau&)>& f;
    int max_columns;
    void walk(YoungTableau& t) {
      f(t);
      if (t.num_columns() == max_columns) return;
      for (const Column& c : cols) {
        if (!t.columns.empty() && !columns_compatible(t.columns.back(), c))
          continue;
        t.columns.push_back(c);
        walk(t);
        t.columns.pop_back();
      }
    }
  } rec{cols, f, max_columns};
  rec.walk(t);
}

std::vector<YoungTableau> random_tableaux(int alphabet, int max_columns,
                                          int count, uint64_t seed) {
  const std::vector<Column> cols = all_columns(alphabet);
  std::mt19937_64 rng(seed);
  std::vector<YoungTableau> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    YoungTableau t;
    t.alphabet = alphabet;
    const int l = 1 + static_cast<int>(rng() % max_columns);
    for (int k = 0; k < l; ++k) {
      std::vector<const Column*> cand;
      for (const Column& c : cols)
        if (t.columns.empty() || columns_compatible(t.columns.back(), c))
          cand.push_back(&c);
      t.columns.push_back(*cand[rng() % cand.size()]);
    }
    if (auto diag = validate_tableau(t))
      fail(Error::Kind::internal, "random tableau invalid: " + *diag);
    out.push_back(std::move(t));
  }
  return out;
}

void enumerate_sign_matrices(int rows, int cols,
                             const std::function<void(const SignMatrix&)>& f,
                             bool definition1_only) {
  if (rows < 0 || cols < 0) fail(Error::Kind::domain, "negative dimensions");
  SignMatrix m(rows, cols);
  std::vector<int> colpref(cols, 0);
  struct Rec {
    SignMatrix& m;
    std::vector<int>& colpref;
    const std::function<void(const SignMatrix&)>& f;
    bool definition1_only;
    void walk(int i, int j, int rowpref) {
      if (j == m.cols) {
        if (i == 0 && !definition1_only) {
          bool any = false;
          for (int c = 0; c < m.cols; ++c) any = any || m.at(0, c) == 1;
          if (!any) return;  // would encode an empty tableau column
        }
        if (i + 1 == m.rows) f(m);
        else walk(i + 1, 0, 0);
        return;
      }
      for (int v = -1; v <= 1; ++v) {
        if (v == -1 && (colpref[j] != 1 || rowpref < 1)) continue;
        if (v == 1 && colpref[j] != 0) continue;
        m.set(i, j, v);
        colpref[j] += v;
        walk(i, j + 1, rowpref + v);
        colpref[j] -= v;
        m.set(i, j, 0);
      }
    }
  } rec{m, colpref, f, definition1_only};
  if (rows == 0) { f(m); return; }
  rec.walk(0, 0, 0);
}

}  // namespace tabkey
