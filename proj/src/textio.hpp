#pragma once

#include <string>

#include "signmatrix.hpp"
#include "tableau.hpp"

namespace tabkey {

// Canonical text forms:
//   tableau  "n=5: 4,2,1 | 5,2 | 5"      (empty tableau: "n=5:")
//   matrix   one row per line, entries space-separated, top row first
//   compact  one row per line, '.' for 0, '+' for 1, '-' for -1
// JSON forms:
//   tableau  {"alphabet":5,"columns":[[4,2,1],[5,2],[5]]}
//   matrix   {"rows":2,"cols":3,"entries":[[0,1,0],[1,-1,1]]}
// format(parse(x)) == x for canonical input; parse is whitespace-tolerant.

YoungTableau parse_tableau_text(const std::string& s);
std::string format_tableau_text(const YoungTableau& t);

YoungTableau tableau_from_json(const std::string& s);
std::string tableau_to_json(const YoungTableau& t);

SignMatrix parse_matrix_text(const std::string& s);
std::string format_matrix_text(const SignMatrix& m);

SignMatrix parse_matrix_compact(const std::string& s);
std::string format_matrix_compact(const SignMatrix& m);

SignMatrix matrix_from_json(const std::string& s);
std::string matrix_to_json(const SignMatrix& m);

enum class ObjectKind { tableau, matrix };
enum class Format { text, json, compact };

struct ParsedObject {
  ObjectKind kind = ObjectKind::tableau;
  Format source_format = Format::text;
  YoungTableau t;
  SignMatrix m;
};

// Auto-detecting parse: JSON when it starts with '{' (keys decide the kind),
// "n=" starts a tableau, rows of '.'/'+'/'-' are a compact matrix, rows of
// numbers a matrix.
ParsedObject parse_any(const std::string& s);

// Human-oriented French rendering (rows bottom-up); not a parseable format.
std::string render_french(const YoungTableau& t);

}  // namespace tabkey
