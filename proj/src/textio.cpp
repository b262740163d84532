#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace tabkey {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) { out.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& tok, const std::string& where) {
  const std::string t = trim(tok);
  if (t.empty()) fail(Error::Kind::parse, "missing number " + where);
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    fail(Error::Kind::parse, "bad number '" + t + "' " + where);
  }
  if (pos != t.size())
    fail(Error::Kind::parse, "bad number '" + t + "' " + where);
  return v;
}

std::vector<std::string> nonblank_lines(const std::string& s) {
  std::vector<std::string> out;
  for (const std::string& raw : split(s, '\n')) {
    std::string l = trim(raw);
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

}  // namespace

YoungTableau parse_tableau_text(const std::string& s) {
  std::string body = trim(s);
  if (body.rfind("n=", 0) != 0)
    fail(Error::Kind::parse, "tableau text must start with 'n='");
  size_t colon = body.find(':');
  if (colon == std::string::npos)
    fail(Error::Kind::parse, "expected ':' after the alphabet");
  int alphabet = parse_int(body.substr(2, colon - 2), "as alphabet");
  std::string rest = trim(body.substr(colon + 1));
  std::vector<std::vector<int>> cols;
  if (!rest.empty()) {
    const auto parts = split(rest, '|');
    for (size_t k = 0; k < parts.size(); ++k) {
      std::vector<int> col;
      for (const std::string& tok : split(parts[k], ','))
        col.push_back(parse_int(tok, "in column " + std::to_string(k + 1)));
      cols.push_back(std::move(col));
    }
  }
  return make_tableau(alphabet, std::move(cols));
}

std::string format_tableau_text(const YoungTableau& t) {
  std::ostringstream os;
  os << "n=" << t.alphabet << ":";
  for (int k = 0; k < t.num_columns(); ++k) {
    os << (k == 0 ? " " : " | ");
    const auto& e = t.columns[k].entries;
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  }
  return os.str();
}

YoungTableau tableau_from_json(const std::string& s) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::exception& e) {
    fail(Error::Kind::parse, e.what());
  }
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("columns"))
    fail(Error::Kind::parse, "expected object with 'alphabet' and 'columns'");
  if (!j["alphabet"].is_number_integer())
    fail(Error::Kind::parse, "'alphabet' must be an integer");
  if (!j["columns"].is_array())
    fail(Error::Kind::parse, "'columns' must be an array of arrays");
  std::vector<std::vector<int>> cols;
  for (const auto& jc : j["columns"]) {
    if (!jc.is_array())
      fail(Error::Kind::parse, "'columns' must be an array of arrays");
    std::vector<int> col;
    for (const auto& je : jc) {
      if (!je.is_number_integer())
        fail(Error::Kind::parse, "column entries must be integers");
      col.push_back(je.get<int>());
    }
    cols.push_back(std::move(col));
  }
  return make_tableau(j["alphabet"].get<int>(), std::move(cols));
}

std::string tableau_to_json(const YoungTableau& t) {
  ordered_json j;
  j["alphabet"] = t.alphabet;
  auto cols = ordered_json::array();
  for (const auto& c : t.columns) cols.push_back(c.entries);
  j["columns"] = std::move(cols);
  return j.dump();
}

SignMatrix parse_matrix_text(const std::string& s) {
  const auto lines = nonblank_lines(s);
  std::vector<int> entries;
  int cols = -1;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    std::vector<int> row;
    std::string tok;
    while (is >> tok)
      row.push_back(parse_int(tok, "in row " + std::to_string(i + 1)));
    if (cols < 0) cols = static_cast<int>(row.size());
    else if (cols != static_cast<int>(row.size()))
      fail(Error::Kind::parse, "row " + std::to_string(i + 1) +
                                   " has a different number of entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (cols < 0) cols = 0;
  return make_sign_matrix(static_cast<int>(lines.size()), cols, std::move(entries));
}

std::string format_matrix_text(const SignMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
    os << '\n';
  }
  return os.str();
}

SignMatrix parse_matrix_compact(const std::string& s) {
  const auto lines = nonblank_lines(s);
  std::vector<int> entries;
  int cols = -1;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::vector<int> row;
    for (char ch : lines[i]) {
      if (ch == '.') row.push_back(0);
      else if (ch == '+') row.push_back(1);
      else if (ch == '-') row.push_back(-1);
      else if (ch == ' ' || ch == '\t') continue;
      else
        fail(Error::Kind::parse, std::string("unexpected character '") + ch +
                                     "' in row " + std::to_string(i + 1));
    }
    if (cols < 0) cols = static_cast<int>(row.size());
    else if (cols != static_cast<int>(row.size()))
      fail(Error::Kind::parse, "row " + std::to_string(i + 1) +
                                   " has a different number of entries");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (cols < 0) cols = 0;
  return make_sign_matrix(static_cast<int>(lines.size()), cols, std::move(entries));
}

std::string format_matrix_compact(const SignMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j)
      os << (m.at(i, j) == 0 ? '.' : m.at(i, j) == 1 ? '+' : '-');
    os << '\n';
  }
  return os.str();
}

SignMatrix matrix_from_json(const std::string& s) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::exception& e) {
    fail(Error::Kind::parse, e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    fail(Error::Kind::parse,
         "expected object with 'rows', 'cols' and 'entries'");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
      !j["entries"].is_array())
    fail(Error::Kind::parse, "'rows'/'cols' integers and 'entries' array");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (static_cast<int>(j["entries"].size()) != rows)
    fail(Error::Kind::parse, "'entries' must have 'rows' rows");
  std::vector<int> entries;
  for (const auto& jr : j["entries"]) {
    if (!jr.is_array() || static_cast<int>(jr.size()) != cols)
      fail(Error::Kind::parse, "each row must have 'cols' integer entries");
    for (const auto& je : jr) {
      if (!je.is_number_integer())
        fail(Error::Kind::parse, "entries must be integers");
      entries.push_back(je.get<int>());
    }
  }
  return make_sign_matrix(rows, cols, std::move(entries));
}

std::string matrix_to_json(const SignMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  auto rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = ordered_json::array();
    for (int jx = 0; jx < m.cols; ++jx) row.push_back(m.at(i, jx));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

ParsedObject parse_any(const std::string& s) {
  ParsedObject out;
  const std::string body = trim(s);
  if (body.empty()) fail(Error::Kind::parse, "empty input");
  if (body[0] == '{') {
    out.source_format = Format::json;
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      fail(Error::Kind::parse, e.what());
    }
    if (j.is_object() && j.contains("alphabet")) {
      out.kind = ObjectKind::tableau;
      out.t = tableau_from_json(body);
    } else {
      out.kind = ObjectKind::matrix;
      out.m = matrix_from_json(body);
    }
    return out;
  }
  if (body.rfind("n=", 0) == 0) {
    out.kind = ObjectKind::tableau;
    out.source_format = Format::text;
    out.t = parse_tableau_text(body);
    return out;
  }
  if (body.find_first_not_of(".+- \t\r\n") == std::string::npos) {
    out.kind = ObjectKind::matrix;
    out.source_format = Format::compact;
    out.m = parse_matrix_compact(body);
    return out;
  }
  out.kind = ObjectKind::matrix;
  out.source_format = Format::text;
  out.m = parse_matrix_text(body);
  return out;
}

std::string render_french(const YoungTableau& t) {
  if (t.columns.empty()) return "(empty)\n";
  int width = 1;
  for (const auto& c : t.columns)
    for (int e : c.entries)
      width = std::max(width, static_cast<int>(std::to_string(e).size()));
  std::ostringstream os;
  for (int r = t.columns[0].size(); r >= 1; --r) {
    std::string line;
    for (const auto& c : t.columns) {
      if (c.size() >= r) {
        std::string e = std::to_string(c.from_bottom(r));
        line += std::string(width - e.size(), ' ') + e + " ";
      } else {
        break;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace tabkey
