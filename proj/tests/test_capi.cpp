// Exercises the shared library through its public C surface only.

#include <tabkey/tabkey.h>

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  tk_string_free(s);
  return out;
}

struct Obj {
  tk_tableau* t = nullptr;
  tk_matrix* m = nullptr;
  tk_kind kind = TK_KIND_TABLEAU;
  ~Obj() {
    tk_tableau_free(t);
    tk_matrix_free(m);
  }
};

void parse_ok(const char* text, Obj& o) {
  REQUIRE(tk_parse(text, &o.kind, &o.t, &o.m) == TK_OK);
}

std::string tableau_text(const tk_tableau* t) {
  char* s = nullptr;
  REQUIRE(tk_tableau_format(t, TK_FORMAT_TEXT, &s) == TK_OK);
  return take(s);
}

std::string matrix_compact(const tk_matrix* m) {
  char* s = nullptr;
  REQUIRE(tk_matrix_format(m, TK_FORMAT_COMPACT, &s) == TK_OK);
  return take(s);
}

constexpr const char* kRunning = "n=5: 4,2,1 | 5,2 | 5";
constexpr const char* kWorked = "n=6: 5,2,1 | 5,4,2 | 5,4 | 6,4 | 6";
constexpr const char* kWorkedM = ".....+\n...+..\n....+-\n.+....\n+..-..\n";
constexpr const char* kCenter = ".+.\n+-+\n.+.\n";

}  // namespace

TEST_CASE("version and error text") {
  CHECK(tk_version() != nullptr);
  CHECK(std::strlen(tk_version()) > 0);
  CHECK(tk_last_error() != nullptr);
}

TEST_CASE("constructors validate") {
  const int heights[] = {3, 2, 1};
  const int entries[] = {4, 2, 1, 5, 2, 5};
  tk_tableau* t = nullptr;
  REQUIRE(tk_tableau_new(5, 3, heights, entries, &t) == TK_OK);
  CHECK(tableau_text(t) == kRunning);
  CHECK(tk_tableau_alphabet(t) == 5);
  CHECK(tk_tableau_num_columns(t) == 3);
  CHECK(tk_tableau_column_height(t, 0) == 3);
  CHECK(tk_tableau_column_height(t, 2) == 1);
  CHECK(tk_tableau_entry(t, 0, 0) == 4);
  CHECK(tk_tableau_entry(t, 1, 1) == 2);
  CHECK(tk_tableau_is_key(t) == 0);
  tk_tableau_free(t);

  // invalid: height monotonicity
  const int bad_heights[] = {2, 3};
  const int bad_entries[] = {5, 2, 4, 2, 1};
  tk_tableau* bad = nullptr;
  CHECK(tk_tableau_new(5, 2, bad_heights, bad_entries, &bad) == TK_ERR_PARSE);
  CHECK(std::strlen(tk_last_error()) > 0);

  const int m_entries[] = {0, 1, 1, -1};
  tk_matrix* m = nullptr;
  REQUIRE(tk_matrix_new(2, 2, m_entries, &m) == TK_OK);
  CHECK(tk_matrix_rows(m) == 2);
  CHECK(tk_matrix_cols(m) == 2);
  CHECK(tk_matrix_entry(m, 1, 1) == -1);
  CHECK(tk_matrix_minus_count(m) == 1);
  CHECK(tk_matrix_is_asm(m) == 0);
  tk_matrix_free(m);

  const int bad_m[] = {0, 2, 1, 0};
  tk_matrix* badm = nullptr;
  CHECK(tk_matrix_new(2, 2, bad_m, &badm) == TK_ERR_PARSE);
}

TEST_CASE("parse detects kinds and reports errors") {
  Obj a;
  parse_ok(kRunning, a);
  CHECK(a.kind == TK_KIND_TABLEAU);
  CHECK(a.t != nullptr);
  CHECK(a.m == nullptr);

  Obj b;
  parse_ok(kCenter, b);
  CHECK(b.kind == TK_KIND_MATRIX);
  CHECK(tk_matrix_is_asm(b.m) == 1);

  tk_kind kind;
  tk_tableau* t = nullptr;
  tk_matrix* m = nullptr;
  CHECK(tk_parse("not anything", &kind, &t, &m) == TK_ERR_PARSE);
  CHECK(std::strlen(tk_last_error()) > 0);
  CHECK(tk_parse("n=5: 2,4", &kind, &t, &m) == TK_ERR_PARSE);
}

TEST_CASE("formats round trip") {
  Obj o;
  parse_ok(kRunning, o);
  CHECK(tableau_text(o.t) == kRunning);

  char* s = nullptr;
  REQUIRE(tk_tableau_format(o.t, TK_FORMAT_JSON, &s) == TK_OK);
  CHECK(take(s) == "{\"alphabet\":5,\"columns\":[[4,2,1],[5,2],[5]]}");

  // compact is matrix-only
  CHECK(tk_tableau_format(o.t, TK_FORMAT_COMPACT, &s) == TK_ERR_DOMAIN);

  REQUIRE(tk_tableau_render(o.t, &s) == TK_OK);
  CHECK(take(s) == "4\n2 5\n1 2 5\n");

  Obj w;
  parse_ok(kWorkedM, w);
  CHECK(matrix_compact(w.m) == kWorkedM);
  REQUIRE(tk_matrix_format(w.m, TK_FORMAT_TEXT, &s) == TK_OK);
  std::string text = take(s);
  Obj again;
  parse_ok(text.c_str(), again);
  CHECK(matrix_compact(again.m) == kWorkedM);
}

TEST_CASE("keys through the C API") {
  Obj o;
  parse_ok(kWorked, o);

  for (tk_method m : {TK_METHOD_DEFAULT, TK_METHOD_ELIMINATION, TK_METHOD_CLASSICAL}) {
    tk_tableau* key = nullptr;
    REQUIRE(tk_left_key(o.t, m, &key) == TK_OK);
    CHECK(tableau_text(key) == "n=6: 5,2,1 | 5,2,1 | 5,2 | 5,2 | 5");
    CHECK(tk_tableau_is_key(key) == 1);
    tk_tableau_free(key);

    tk_tableau* rkey = nullptr;
    REQUIRE(tk_right_key(o.t, m, &rkey) == TK_OK);
    CHECK(tableau_text(rkey) == "n=6: 6,4,2 | 6,4,2 | 6,4 | 6,4 | 6");
    tk_tableau_free(rkey);
  }
}

TEST_CASE("complement and the tableau-matrix bijection") {
  Obj o;
  parse_ok(kWorked, o);

  tk_tableau* c = nullptr;
  int dropped = -1;
  REQUIRE(tk_complement(o.t, &c, &dropped) == TK_OK);
  CHECK(dropped == 0);
  CHECK(tableau_text(c) == "n=6: 5,4,3,2,1 | 5,3,2,1 | 6,3,2,1 | 6,3,1 | 6,4,3");
  tk_tableau_free(c);

  Obj full;
  parse_ok("n=3: 3,2,1", full);
  REQUIRE(tk_complement(full.t, &c, &dropped) == TK_OK);
  CHECK(dropped == 1);
  CHECK(tableau_text(c) == "n=3:");
  tk_tableau_free(c);

  tk_matrix* m = nullptr;
  REQUIRE(tk_tableau_to_matrix(o.t, &m) == TK_OK);
  CHECK(matrix_compact(m) == kWorkedM);

  tk_tableau* back = nullptr;
  REQUIRE(tk_matrix_to_tableau(m, &back) == TK_OK);
  CHECK(tableau_text(back) == kWorked);
  tk_tableau_free(back);

  tk_matrix* elim = nullptr;
  REQUIRE(tk_matrix_eliminate(m, &elim) == TK_OK);
  CHECK(matrix_compact(elim) == "....+.\n.+....\n......\n+.....\n......\n");
  CHECK(tk_matrix_minus_count(elim) == 0);
  tk_matrix_free(elim);

  tk_matrix* pk = nullptr;
  REQUIRE(tk_matrix_pseudo_key(m, &pk) == TK_OK);
  CHECK(matrix_compact(pk) == "....+.\n+.....\n......\n.+....\n......\n");
  tk_matrix_free(pk);
  tk_matrix_free(m);
}

TEST_CASE("ASM operations and the lattice") {
  Obj center;
  parse_ok(kCenter, center);

  tk_tableau* tri = nullptr;
  REQUIRE(tk_asm_to_triangle(center.m, &tri) == TK_OK);
  CHECK(tableau_text(tri) == "n=3: 3,2,1 | 3,1 | 2");

  tk_matrix* back = nullptr;
  REQUIRE(tk_triangle_to_asm(tri, &back) == TK_OK);
  CHECK(matrix_compact(back) == kCenter);
  tk_matrix_free(back);

  tk_matrix* key = nullptr;
  REQUIRE(tk_asm_key(center.m, &key) == TK_OK);
  CHECK(matrix_compact(key) == "+..\n..+\n.+.\n");  // sigma = (1,3,2)
  tk_matrix* pkey = nullptr;
  REQUIRE(tk_asm_pseudo_key(center.m, &pkey) == TK_OK);
  CHECK(matrix_compact(pkey) == matrix_compact(key));
  tk_matrix_free(pkey);

  Obj id;
  parse_ok("+..\n.+.\n..+\n", id);

  int below = -1;
  REQUIRE(tk_asm_leq(id.m, center.m, &below) == TK_OK);
  CHECK(below == 1);
  REQUIRE(tk_asm_leq(center.m, id.m, &below) == TK_OK);
  CHECK(below == 0);

  tk_matrix* meet = nullptr;
  REQUIRE(tk_asm_meet(center.m, id.m, &meet) == TK_OK);
  CHECK(matrix_compact(meet) == "+..\n.+.\n..+\n");
  tk_matrix_free(meet);
  tk_matrix* join = nullptr;
  REQUIRE(tk_asm_join(center.m, id.m, &join) == TK_OK);
  CHECK(matrix_compact(join) == kCenter);
  tk_matrix_free(join);

  // triangle flavours agree
  tk_tableau* id_tri = nullptr;
  REQUIRE(tk_asm_to_triangle(id.m, &id_tri) == TK_OK);
  REQUIRE(tk_triangle_leq(id_tri, tri, &below) == TK_OK);
  CHECK(below == 1);
  tk_tableau* tmeet = nullptr;
  REQUIRE(tk_triangle_meet(tri, id_tri, &tmeet) == TK_OK);
  CHECK(tableau_text(tmeet) == tableau_text(id_tri));
  tk_tableau_free(tmeet);
  tk_tableau* tjoin = nullptr;
  REQUIRE(tk_triangle_join(tri, id_tri, &tjoin) == TK_OK);
  CHECK(tableau_text(tjoin) == tableau_text(tri));
  tk_tableau_free(tjoin);
  tk_tableau_free(id_tri);
  tk_tableau_free(tri);

  // domain errors: not an ASM / not a triangle / size mismatch
  Obj notasm;
  parse_ok(kWorkedM, notasm);
  tk_matrix* out = nullptr;
  CHECK(tk_asm_key(notasm.m, &out) == TK_ERR_DOMAIN);
  CHECK(std::strlen(tk_last_error()) > 0);

  Obj running;
  parse_ok(kRunning, running);
  tk_matrix* out2 = nullptr;
  CHECK(tk_triangle_to_asm(running.t, &out2) == TK_ERR_DOMAIN);

  Obj id4;
  parse_ok("+...\n.+..\n..+.\n...+\n", id4);
  tk_matrix* out3 = nullptr;
  CHECK(tk_asm_meet(id.m, id4.m, &out3) == TK_ERR_DOMAIN);
}

TEST_CASE("enumeration endpoints") {
  char* s = nullptr;
  REQUIRE(tk_census_json(4, 1, &s) == TK_OK);
  CHECK(take(s) ==
        "{\"n\": 4, \"total\": 42, \"by_minus_ones\": {\"0\":24,\"1\":16,\"2\":2}}");

  REQUIRE(tk_census_json(4, 3, &s) == TK_OK);  // worker count is invisible
  CHECK(take(s) ==
        "{\"n\": 4, \"total\": 42, \"by_minus_ones\": {\"0\":24,\"1\":16,\"2\":2}}");

  REQUIRE(tk_census_csv(3, 1, &s) == TK_OK);
  CHECK(take(s) == "n,k,count\n3,0,6\n3,1,1\n");

  REQUIRE(tk_count_one_minus(6, &s) == TK_OK);
  CHECK(take(s) == "2400");
  REQUIRE(tk_count_two_minus(6, &s) == TK_OK);
  CHECK(take(s) == "2684");
  REQUIRE(tk_count_132(5, &s) == TK_OK);
  CHECK(take(s) == "200");
  REQUIRE(tk_count_132(2, &s) == TK_OK);
  CHECK(take(s) == "0");
}

TEST_CASE("the verification suite reports ten criteria") {
  std::vector<std::string> lines;
  auto status = tk_verify(
      3, 3, 1, 0,
      [](const char* line, void* user) {
        static_cast<std::vector<std::string>*>(user)->push_back(line);
      },
      &lines);
  CHECK(status == TK_OK);
  REQUIRE(lines.size() == 10);
  for (size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines[i].rfind("criterion " + std::to_string(i + 1) + " PASS", 0) ==
          0);
  }
}
