// tabkey CLI: conversions, key computations, lattice operations, enumeration
// and the verification suite, all through the public C API.

#include <tabkey/tabkey.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

struct TableauDeleter {
  void operator()(tk_tableau* t) const { tk_tableau_free(t); }
};
struct MatrixDeleter {
  void operator()(tk_matrix* m) const { tk_matrix_free(m); }
};
using TableauPtr = std::unique_ptr<tk_tableau, TableauDeleter>;
using MatrixPtr = std::unique_ptr<tk_matrix, MatrixDeleter>;

struct ParsedInput {
  tk_kind kind = TK_KIND_TABLEAU;
  TableauPtr t;
  MatrixPtr m;
};

int fail(tk_status st) {
  std::fprintf(stderr, "tabkey: %s\n", tk_last_error());
  return static_cast<int>(st);
}

int fail_domain(const std::string& msg) {
  std::fprintf(stderr, "tabkey: %s\n", msg.c_str());
  return static_cast<int>(TK_ERR_DOMAIN);
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Splits a stream into two objects at the first blank line; canonical
// serializations never contain one.
bool split_two(const std::string& text, std::string& first, std::string& second) {
  std::istringstream in(text);
  std::string line;
  std::ostringstream a, b;
  bool seen_content = false, split = false;
  while (std::getline(in, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!split && blank && seen_content) {
      split = true;
      continue;
    }
    if (blank && !seen_content) continue;
    (split ? b : a) << line << "\n";
    if (!blank) seen_content = true;
  }
  first = a.str();
  second = b.str();
  return split && second.find_first_not_of(" \t\r\n") != std::string::npos;
}

tk_status parse_input(const std::string& text, ParsedInput& out) {
  tk_tableau* t = nullptr;
  tk_matrix* m = nullptr;
  tk_status st = tk_parse(text.c_str(), &out.kind, &t, &m);
  if (st != TK_OK) return st;
  out.t.reset(t);
  out.m.reset(m);
  return TK_OK;
}

void print_string(char* s) {
  std::string out(s);
  tk_string_free(s);
  if (out.empty() || out.back() != '\n') out += '\n';
  std::fputs(out.c_str(), stdout);
}

int emit_tableau(const tk_tableau* t, tk_format fmt, bool pretty) {
  char* s = nullptr;
  tk_status st = pretty ? tk_tableau_render(t, &s) : tk_tableau_format(t, fmt, &s);
  if (st != TK_OK) return fail(st);
  print_string(s);
  return 0;
}

int emit_matrix(const tk_matrix* m, tk_format fmt) {
  char* s = nullptr;
  tk_status st = tk_matrix_format(m, fmt, &s);
  if (st != TK_OK) return fail(st);
  print_string(s);
  return 0;
}

tk_format format_of(const std::string& name) {
  if (name == "json") return TK_FORMAT_JSON;
  if (name == "compact") return TK_FORMAT_COMPACT;
  return TK_FORMAT_TEXT;
}

tk_method method_of(const std::string& name) {
  if (name == "classical") return TK_METHOD_CLASSICAL;
  if (name.empty()) return TK_METHOD_DEFAULT;
  return TK_METHOD_ELIMINATION;  // elimination / complement
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young tableaux, sign matrices and alternating sign matrices:\n"
               "keys by -1 elimination, complement duality, the ASM lattice,\n"
               "and exact enumeration."};
  app.require_subcommand(1);

  std::string in_path, with_path;
  std::string format = "text", method;
  bool pretty = false;
  int jobs = 0;

  // one deferred action per subcommand; CLI11 runs the matching callback
  std::function<int()> run;

  auto add_io = [&](CLI::App* cmd, bool binary = false) {
    cmd->add_option("--in", in_path, "read input from a file instead of stdin");
    if (binary)
      cmd->add_option("--with", with_path,
                      "second operand (otherwise: blank-line separated on the "
                      "input stream)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "compact"}))
        ->capture_default_str();
  };

  auto read_one = [&](ParsedInput& obj) -> int {
    tk_status st = parse_input(slurp(in_path), obj);
    return st == TK_OK ? 0 : fail(st);
  };
  auto read_two = [&](ParsedInput& a, ParsedInput& b) -> int {
    std::string first, second;
    if (!with_path.empty()) {
      first = slurp(in_path);
      second = slurp(with_path);
    } else if (!split_two(slurp(in_path), first, second)) {
      std::fprintf(stderr,
                   "tabkey: expected two objects separated by a blank line "
                   "(or use --with)\n");
      return static_cast<int>(TK_ERR_PARSE);
    }
    tk_status st = parse_input(first, a);
    if (st != TK_OK) return fail(st);
    st = parse_input(second, b);
    return st == TK_OK ? 0 : fail(st);
  };

  auto need_tableau = [&](ParsedInput& obj, const char* cmd) -> int {
    if (obj.kind != TK_KIND_TABLEAU)
      return fail_domain(std::string(cmd) + " expects a tableau");
    return 0;
  };
  auto need_matrix = [&](ParsedInput& obj, const char* cmd) -> int {
    if (obj.kind != TK_KIND_MATRIX)
      return fail_domain(std::string(cmd) + " expects a sign matrix");
    return 0;
  };

  // ---- convert ----
  auto* convert = app.add_subcommand("convert", "re-serialize an object");
  add_io(convert);
  add_format(convert);
  convert->add_flag("--pretty", pretty, "render tableaux as a diagram");
  convert->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      if (obj.kind == TK_KIND_TABLEAU)
        return emit_tableau(obj.t.get(), format_of(format), pretty);
      return emit_matrix(obj.m.get(), format_of(format));
    };
  });

  // ---- leftkey / rightkey ----
  auto add_key_cmd = [&](const char* name, const char* help,
                         const std::vector<std::string>& methods, auto fn) {
    auto* cmd = app.add_subcommand(name, help);
    add_io(cmd);
    add_format(cmd);
    cmd->add_flag("--pretty", pretty, "render the key as a diagram");
    cmd->add_option("--method", method, "algorithm")->check(CLI::IsMember(methods));
    cmd->callback([&, fn, name] {
      run = [&, fn, name]() -> int {
        ParsedInput obj;
        if (int rc = read_one(obj)) return rc;
        if (int rc = need_tableau(obj, name)) return rc;
        tk_tableau* out = nullptr;
        tk_status st = fn(obj.t.get(), method_of(method), &out);
        if (st != TK_OK) return fail(st);
        TableauPtr key(out);
        return emit_tableau(key.get(), format_of(format), pretty);
      };
    });
  };
  add_key_cmd("leftkey", "left key of a tableau",
              {"elimination", "classical"}, tk_left_key);
  add_key_cmd("rightkey", "right key of a tableau",
              {"complement", "elimination", "classical"}, tk_right_key);

  // ---- complement ----
  auto* comp = app.add_subcommand("complement", "complement of a tableau");
  add_io(comp);
  add_format(comp);
  comp->add_flag("--pretty", pretty, "render the result as a diagram");
  comp->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      if (int rc = need_tableau(obj, "complement")) return rc;
      tk_tableau* out = nullptr;
      int dropped = 0;
      tk_status st = tk_complement(obj.t.get(), &out, &dropped);
      if (st != TK_OK) return fail(st);
      TableauPtr result(out);
      if (dropped > 0)
        std::fprintf(stderr, "tabkey: %d full column%s complemented away\n",
                     dropped, dropped == 1 ? "" : "s");
      return emit_tableau(result.get(), format_of(format), pretty);
    };
  });

  // ---- pseudokey ----
  auto* pseudo = app.add_subcommand(
      "pseudokey", "pseudo-key of a sign matrix (tableaux go through M(T))");
  add_io(pseudo);
  add_format(pseudo);
  pseudo->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      MatrixPtr input;
      if (obj.kind == TK_KIND_TABLEAU) {
        tk_matrix* m = nullptr;
        tk_status st = tk_tableau_to_matrix(obj.t.get(), &m);
        if (st != TK_OK) return fail(st);
        input.reset(m);
      } else {
        input = std::move(obj.m);
      }
      tk_matrix* out = nullptr;
      tk_status st = tk_matrix_pseudo_key(input.get(), &out);
      if (st != TK_OK) return fail(st);
      MatrixPtr result(out);
      return emit_matrix(result.get(), format_of(format));
    };
  });

  // ---- asm2mt / mt2asm / keyasm ----
  auto* a2m = app.add_subcommand("asm2mt", "monotone triangle of an ASM");
  add_io(a2m);
  add_format(a2m);
  a2m->add_flag("--pretty", pretty, "render the triangle as a diagram");
  a2m->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      if (int rc = need_matrix(obj, "asm2mt")) return rc;
      tk_tableau* out = nullptr;
      tk_status st = tk_asm_to_triangle(obj.m.get(), &out);
      if (st != TK_OK) return fail(st);
      TableauPtr result(out);
      return emit_tableau(result.get(), format_of(format), pretty);
    };
  });

  auto* m2a = app.add_subcommand("mt2asm", "ASM of a monotone triangle");
  add_io(m2a);
  add_format(m2a);
  m2a->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      if (int rc = need_tableau(obj, "mt2asm")) return rc;
      tk_matrix* out = nullptr;
      tk_status st = tk_triangle_to_asm(obj.t.get(), &out);
      if (st != TK_OK) return fail(st);
      MatrixPtr result(out);
      return emit_matrix(result.get(), format_of(format));
    };
  });

  auto* keyasm = app.add_subcommand(
      "keyasm", "key of an ASM, as a permutation matrix");
  add_io(keyasm);
  add_format(keyasm);
  keyasm->callback([&] {
    run = [&]() -> int {
      ParsedInput obj;
      if (int rc = read_one(obj)) return rc;
      if (int rc = need_matrix(obj, "keyasm")) return rc;
      tk_matrix* out = nullptr;
      tk_status st = tk_asm_key(obj.m.get(), &out);
      if (st != TK_OK) return fail(st);
      MatrixPtr result(out);
      return emit_matrix(result.get(), format_of(format));
    };
  });

  // ---- meet / join / leq ----
  auto add_lattice_cmd = [&](const char* name, const char* help, auto asm_fn,
                             auto tri_fn) {
    auto* cmd = app.add_subcommand(name, help);
    add_io(cmd, /*binary=*/true);
    add_format(cmd);
    cmd->callback([&, asm_fn, tri_fn, name] {
      run = [&, asm_fn, tri_fn, name]() -> int {
        ParsedInput a, b;
        if (int rc = read_two(a, b)) return rc;
        if (a.kind != b.kind)
          return fail_domain(std::string(name) +
                             " expects two objects of the same kind");
        if (a.kind == TK_KIND_MATRIX) {
          tk_matrix* out = nullptr;
          tk_status st = asm_fn(a.m.get(), b.m.get(), &out);
          if (st != TK_OK) return fail(st);
          MatrixPtr result(out);
          return emit_matrix(result.get(), format_of(format));
        }
        tk_tableau* out = nullptr;
        tk_status st = tri_fn(a.t.get(), b.t.get(), &out);
        if (st != TK_OK) return fail(st);
        TableauPtr result(out);
        return emit_tableau(result.get(), format_of(format), false);
      };
    });
  };
  add_lattice_cmd("meet", "lattice meet of two ASMs or two monotone triangles",
                  tk_asm_meet, tk_triangle_meet);
  add_lattice_cmd("join", "lattice join of two ASMs or two monotone triangles",
                  tk_asm_join, tk_triangle_join);

  auto* leq = app.add_subcommand(
      "leq", "is the first ASM (or triangle) below the second?");
  add_io(leq, /*binary=*/true);
  leq->callback([&] {
    run = [&]() -> int {
      ParsedInput a, b;
      if (int rc = read_two(a, b)) return rc;
      if (a.kind != b.kind)
        return fail_domain("leq expects two objects of the same kind");
      int below = 0;
      tk_status st = a.kind == TK_KIND_MATRIX
                         ? tk_asm_leq(a.m.get(), b.m.get(), &below)
                         : tk_triangle_leq(a.t.get(), b.t.get(), &below);
      if (st != TK_OK) return fail(st);
      std::puts(below ? "true" : "false");
      return 0;
    };
  });

  // ---- census ----
  int size = 0;
  auto* census = app.add_subcommand("census", "count n x n ASMs by -1 entries");
  census->add_option("--size", size, "matrix size n")->required();
  census->add_option("--jobs", jobs, "parallel workers (0 = all cores)")
      ->envname("TABKEY_JOBS");
  census->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  census->callback([&] {
    run = [&]() -> int {
      char* s = nullptr;
      tk_status st = format == "csv" ? tk_census_csv(size, jobs, &s)
                                     : tk_census_json(size, jobs, &s);
      if (st != TK_OK) return fail(st);
      print_string(s);
      return 0;
    };
  });

  // ---- patterns132 ----
  auto* patterns = app.add_subcommand(
      "patterns132", "total number of 132 patterns over all permutations");
  patterns->add_option("--size", size, "permutation size n")->required();
  patterns->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  patterns->callback([&] {
    run = [&]() -> int {
      char* s = nullptr;
      tk_status st = tk_count_132(size, &s);
      if (st != TK_OK) return fail(st);
      std::string count(s);
      tk_string_free(s);
      if (format == "json")
        std::printf("{\"n\": %d, \"count\": %s}\n", size, count.c_str());
      else
        std::printf("%s\n", count.c_str());
      return 0;
    };
  });

  // ---- verify ----
  int max_size = 5, tableau_alphabet = 4;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-size", max_size, "ASM sweep bound")
      ->capture_default_str();
  verify->add_option("--tableau-alphabet", tableau_alphabet, "corpus bound")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "parallel workers (0 = all cores)")
      ->envname("TABKEY_JOBS");
  verify->add_flag("--slow", slow, "include the size-7 census");
  verify->callback([&] {
    run = [&]() -> int {
      tk_status st = tk_verify(
          max_size, tableau_alphabet, jobs, slow ? 1 : 0,
          [](const char* line, void*) { std::printf("%s\n", line); }, nullptr);
      if (st == TK_OK) return 0;
      if (st == TK_ERR_VERIFY) {
        std::fprintf(stderr, "tabkey: %s\n", tk_last_error());
        return static_cast<int>(TK_ERR_VERIFY);
      }
      return fail(st);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tabkey: %s\n", e.what());
    return 1;
  }
}
