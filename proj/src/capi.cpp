#include "tabkey/tabkey.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "alternating.hpp"
#include "enumerate.hpp"
#include "plactic.hpp"
#include "signmatrix.hpp"
#include "tableau.hpp"
#include "textio.hpp"
#include "verify.hpp"

struct tk_tableau {
  tabkey::YoungTableau v;
};
struct tk_matrix {
  tabkey::SignMatrix v;
};

namespace {

thread_local std::string g_last_error;

tk_status status_of(tabkey::Error::Kind k) {
  using Kind = tabkey::Error::Kind;
  switch (k) {
    case Kind::parse:
    case Kind::invalid:
      return TK_ERR_PARSE;
    case Kind::domain:
      return TK_ERR_DOMAIN;
    case Kind::internal:
      return TK_ERR_INTERNAL;
  }
  return TK_ERR_INTERNAL;
}

template <class F>
tk_status guarded(F&& f) {
  try {
    f();
    return TK_OK;
  } catch (const tabkey::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

tabkey::Asm as_asm(const tk_matrix* m) { return tabkey::make_asm(m->v); }

tabkey::MonotoneTriangle as_triangle(const tk_tableau* t) {
  return tabkey::make_monotone(t->v);
}

std::string census_json_string(const tabkey::MinusOneCensus& c) {
  std::string s = "{\"n\": " + std::to_string(c.n) +
                  ", \"total\": " + c.total().str() + ", \"by_minus_ones\": {";
  for (size_t k = 0; k < c.counts.size(); ++k) {
    if (k) s += ",";
    s += "\"" + std::to_string(k) + "\":" + c.counts[k].str();
  }
  return s + "}}";
}

std::string census_csv_string(const tabkey::MinusOneCensus& c) {
  std::string s = "n,k,count\n";
  for (size_t k = 0; k < c.counts.size(); ++k)
    s += std::to_string(c.n) + "," + std::to_string(k) + "," +
         c.counts[k].str() + "\n";
  return s;
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "1.0.0"; }

const char* tk_last_error(void) { return g_last_error.c_str(); }

void tk_string_free(char* s) { std::free(s); }
void tk_tableau_free(tk_tableau* t) { delete t; }
void tk_matrix_free(tk_matrix* m) { delete m; }

tk_status tk_tableau_new(int alphabet, int num_columns, const int* heights,
                         const int* entries, tk_tableau** out) {
  return guarded([&] {
    std::vector<std::vector<int>> cols;
    const int* p = entries;
    for (int c = 0; c < num_columns; ++c) {
      cols.emplace_back(p, p + heights[c]);
      p += heights[c];
    }
    *out = new tk_tableau{tabkey::make_tableau(alphabet, std::move(cols))};
  });
}

tk_status tk_matrix_new(int rows, int cols, const int* entries, tk_matrix** out) {
  return guarded([&] {
    std::vector<int> e(entries, entries + size_t(rows) * size_t(cols));
    *out = new tk_matrix{tabkey::make_sign_matrix(rows, cols, std::move(e))};
  });
}

tk_status tk_parse(const char* text, tk_kind* kind, tk_tableau** t, tk_matrix** m) {
  return guarded([&] {
    auto obj = tabkey::parse_any(text ? text : "");
    if (obj.kind == tabkey::ObjectKind::tableau) {
      if (kind) *kind = TK_KIND_TABLEAU;
      if (t) *t = new tk_tableau{std::move(obj.t)};
    } else {
      if (kind) *kind = TK_KIND_MATRIX;
      if (m) *m = new tk_matrix{std::move(obj.m)};
    }
  });
}

tk_status tk_tableau_format(const tk_tableau* t, tk_format f, char** out) {
  return guarded([&] {
    switch (f) {
      case TK_FORMAT_TEXT:
        *out = dup_string(tabkey::format_tableau_text(t->v));
        return;
      case TK_FORMAT_JSON:
        *out = dup_string(tabkey::tableau_to_json(t->v));
        return;
      case TK_FORMAT_COMPACT:
        break;
    }
    tabkey::fail(tabkey::Error::Kind::domain,
                 "compact format applies to sign matrices only");
  });
}

tk_status tk_matrix_format(const tk_matrix* m, tk_format f, char** out) {
  return guarded([&] {
    switch (f) {
      case TK_FORMAT_TEXT:
        *out = dup_string(tabkey::format_matrix_text(m->v));
        return;
      case TK_FORMAT_JSON:
        *out = dup_string(tabkey::matrix_to_json(m->v));
        return;
      case TK_FORMAT_COMPACT:
        *out = dup_string(tabkey::format_matrix_compact(m->v));
        return;
    }
    tabkey::fail(tabkey::Error::Kind::domain, "unknown format");
  });
}

tk_status tk_tableau_render(const tk_tableau* t, char** out) {
  return guarded([&] { *out = dup_string(tabkey::render_french(t->v)); });
}

int tk_tableau_alphabet(const tk_tableau* t) { return t->v.alphabet; }
int tk_tableau_num_columns(const tk_tableau* t) { return t->v.num_columns(); }
int tk_tableau_column_height(const tk_tableau* t, int col) {
  return t->v.columns[col].size();
}
int tk_tableau_entry(const tk_tableau* t, int col, int row) {
  return t->v.columns[col].entries[row];
}
int tk_tableau_is_key(const tk_tableau* t) { return tabkey::is_key(t->v) ? 1 : 0; }

int tk_matrix_rows(const tk_matrix* m) { return m->v.rows; }
int tk_matrix_cols(const tk_matrix* m) { return m->v.cols; }
int tk_matrix_entry(const tk_matrix* m, int i, int j) { return m->v.at(i, j); }
int tk_matrix_minus_count(const tk_matrix* m) {
  return tabkey::minus_count(m->v);
}
int tk_matrix_is_asm(const tk_matrix* m) {
  return tabkey::validate_asm(m->v) ? 0 : 1;
}

tk_status tk_left_key(const tk_tableau* t, tk_method method, tk_tableau** out) {
  return guarded([&] {
    auto key = (method == TK_METHOD_CLASSICAL)
                   ? tabkey::left_key_classical(t->v)
                   : tabkey::left_key_elimination(t->v);
    *out = new tk_tableau{std::move(key)};
  });
}

tk_status tk_right_key(const tk_tableau* t, tk_method method, tk_tableau** out) {
  return guarded([&] {
    auto key = (method == TK_METHOD_CLASSICAL)
                   ? tabkey::right_key_classical(t->v)
                   : tabkey::right_key_via_complement(t->v);
    *out = new tk_tableau{std::move(key)};
  });
}

tk_status tk_complement(const tk_tableau* t, tk_tableau** out,
                        int* dropped_columns) {
  return guarded([&] {
    auto r = tabkey::complement(t->v);
    if (dropped_columns) *dropped_columns = r.dropped_columns;
    *out = new tk_tableau{std::move(r.tableau)};
  });
}

tk_status tk_tableau_to_matrix(const tk_tableau* t, tk_matrix** out) {
  return guarded([&] { *out = new tk_matrix{tabkey::from_tableau(t->v)}; });
}

tk_status tk_matrix_to_tableau(const tk_matrix* m, tk_tableau** out) {
  return guarded([&] { *out = new tk_tableau{tabkey::to_tableau(m->v)}; });
}

tk_status tk_matrix_eliminate(const tk_matrix* m, tk_matrix** out) {
  return guarded(
      [&] { *out = new tk_matrix{tabkey::eliminate_minus_ones(m->v)}; });
}

tk_status tk_matrix_pseudo_key(const tk_matrix* m, tk_matrix** out) {
  return guarded([&] { *out = new tk_matrix{tabkey::pseudo_key(m->v)}; });
}

tk_status tk_asm_to_triangle(const tk_matrix* m, tk_tableau** out) {
  return guarded([&] {
    *out = new tk_tableau{tabkey::asm_to_monotone(as_asm(m)).t};
  });
}

tk_status tk_triangle_to_asm(const tk_tableau* t, tk_matrix** out) {
  return guarded([&] {
    *out = new tk_matrix{tabkey::monotone_to_asm(as_triangle(t)).m};
  });
}

tk_status tk_asm_key(const tk_matrix* m, tk_matrix** out) {
  return guarded([&] {
    *out = new tk_matrix{
        tabkey::permutation_matrix(tabkey::key_of_asm(as_asm(m)))};
  });
}

tk_status tk_asm_pseudo_key(const tk_matrix* m, tk_matrix** out) {
  return guarded([&] {
    *out = new tk_matrix{
        tabkey::permutation_matrix(tabkey::pseudo_key_of_asm(as_asm(m)))};
  });
}

tk_status tk_asm_meet(const tk_matrix* a, const tk_matrix* b, tk_matrix** out) {
  return guarded([&] {
    auto r = tabkey::mt_inf(tabkey::asm_to_monotone(as_asm(a)),
                            tabkey::asm_to_monotone(as_asm(b)));
    *out = new tk_matrix{tabkey::monotone_to_asm(r).m};
  });
}

tk_status tk_asm_join(const tk_matrix* a, const tk_matrix* b, tk_matrix** out) {
  return guarded([&] {
    auto r = tabkey::mt_sup(tabkey::asm_to_monotone(as_asm(a)),
                            tabkey::asm_to_monotone(as_asm(b)));
    *out = new tk_matrix{tabkey::monotone_to_asm(r).m};
  });
}

tk_status tk_asm_leq(const tk_matrix* a, const tk_matrix* b, int* out) {
  return guarded(
      [&] { *out = tabkey::asm_leq(as_asm(a), as_asm(b)) ? 1 : 0; });
}

tk_status tk_triangle_meet(const tk_tableau* a, const tk_tableau* b,
                           tk_tableau** out) {
  return guarded([&] {
    *out = new tk_tableau{tabkey::mt_inf(as_triangle(a), as_triangle(b)).t};
  });
}

tk_status tk_triangle_join(const tk_tableau* a, const tk_tableau* b,
                           tk_tableau** out) {
  return guarded([&] {
    *out = new tk_tableau{tabkey::mt_sup(as_triangle(a), as_triangle(b)).t};
  });
}

tk_status tk_triangle_leq(const tk_tableau* a, const tk_tableau* b, int* out) {
  return guarded([&] {
    *out = tabkey::triangle_leq(as_triangle(a), as_triangle(b)) ? 1 : 0;
  });
}

tk_status tk_census_json(int n, int jobs, char** out) {
  return guarded([&] {
    *out = dup_string(census_json_string(tabkey::census(n, jobs)));
  });
}

tk_status tk_census_csv(int n, int jobs, char** out) {
  return guarded([&] {
    *out = dup_string(census_csv_string(tabkey::census(n, jobs)));
  });
}

tk_status tk_count_one_minus(int n, char** out) {
  return guarded([&] { *out = dup_string(tabkey::a_n_1(n).str()); });
}

tk_status tk_count_two_minus(int n, char** out) {
  return guarded([&] { *out = dup_string(tabkey::a_n_2(n).str()); });
}

tk_status tk_count_132(int n, char** out) {
  return guarded([&] { *out = dup_string(tabkey::count_132_formula(n).str()); });
}

tk_status tk_verify(int max_size, int tableau_alphabet, int jobs, int slow,
                    tk_report_fn report, void* user) {
  bool ok = false;
  std::string first_fail;
  tk_status st = guarded([&] {
    tabkey::VerifyOptions opt;
    if (max_size > 0) opt.max_size = max_size;
    if (tableau_alphabet > 0) opt.tableau_alphabet = tableau_alphabet;
    opt.jobs = jobs;
    opt.slow = slow != 0;
    auto results = tabkey::run_verification(opt);
    for (const auto& r : results) {
      std::string line = "criterion " + std::to_string(r.criterion) + " " +
                         (r.pass ? "PASS" : "FAIL") + " " + r.name + ": " +
                         r.detail;
      if (report) report(line.c_str(), user);
      if (!r.pass && first_fail.empty()) first_fail = line;
    }
    ok = tabkey::all_passed(results);
  });
  if (st != TK_OK) return st;
  if (!ok) {
    g_last_error = "verification failed: " + first_fail;
    return TK_ERR_VERIFY;
  }
  return TK_OK;
}

}  // extern "C"
