#include "smx/textio.hpp"

#include <vector>

namespace smx {

namespace {

void print_into(Value v, std::string& out) {
  if (v.is_set()) {
    out += '{';
    bool first = true;
    for (const Value& e : v.elems()) {
      if (!first) out += ',';
      first = false;
      print_into(e, out);
    }
    out += '}';
    return;
  }
  Shape s = v.shape();
  out += '[';
  std::size_t i = 0;
  for (int r = 0; r < s.rows; ++r) {
    if (r > 0) out += ';';
    for (int c = 0; c < s.cols; ++c, ++i) {
      if (c > 0) out += ',';
      print_into(v.entries()[i], out);
    }
  }
  out += ']';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Value run() {
    skip_ws();
    Value v = parse_term();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  Value parse_term() {
    if (eof()) fail("expected term");
    char c = peek();
    if (c == '{') return parse_set();
    if (c == '[') return parse_matrix();
    fail(std::string("unexpected character '") + c + "'");
  }

  Value parse_set() {
    advance();  // '{'
    std::vector<Value> elems;
    skip_ws();
    if (!eof() && peek() == '}') {
      advance();
      return mk_set(elems);
    }
    while (true) {
      elems.push_back(parse_term());
      skip_ws();
      if (eof()) fail("unbalanced '{': expected ',' or '}'");
      if (peek() == ',') {
        advance();
        skip_ws();
        continue;
      }
      if (peek() == '}') {
        advance();
        return mk_set(elems);
      }
      fail("expected ',' or '}'");
    }
  }

  Value parse_matrix() {
    advance();  // '['
    std::vector<Value> entries;
    std::size_t row_len = 0;
    int rows = 0;
    skip_ws();
    if (!eof() && peek() == ']') fail("empty matrix '[]' is not a term");
    while (true) {
      std::size_t len = 0;
      while (true) {  // one row
        entries.push_back(parse_term());
        ++len;
        skip_ws();
        if (eof()) fail("unbalanced '[': expected ',', ';' or ']'");
        if (peek() == ',') {
          advance();
          skip_ws();
          continue;
        }
        break;
      }
      ++rows;
      if (rows == 1) {
        row_len = len;
      } else if (len != row_len) {
        fail("ragged rows: row " + std::to_string(rows) + " has " + std::to_string(len) +
             " entries, expected " + std::to_string(row_len));
      }
      if (peek() == ';') {
        advance();
        skip_ws();
        continue;
      }
      if (peek() == ']') {
        advance();
        return mk_matrix(Shape{rows, static_cast<int>(row_len)}, entries);
      }
      fail("expected ',', ';' or ']'");
    }
  }
};

}  // namespace

std::string print(Value v) {
  std::string out;
  print_into(v, out);
  return out;
}

Value parse(std::string_view src) { return Parser(src).run(); }

nlohmann::json to_json(Value v) {
  nlohmann::json j;
  if (v.is_set()) {
    j["kind"] = "set";
    nlohmann::json elems = nlohmann::json::array();
    for (const Value& e : v.elems()) elems.push_back(to_json(e));
    j["elems"] = std::move(elems);
    return j;
  }
  j["kind"] = "matrix";
  j["rows"] = v.shape().rows;
  j["cols"] = v.shape().cols;
  nlohmann::json entries = nlohmann::json::array();
  for (const Value& e : v.entries()) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

Value from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("value must be a JSON object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string())
    throw ValidationError("missing or non-string 'kind' field");
  const std::string kind = kind_it->get<std::string>();
  if (kind == "set") {
    auto elems_it = j.find("elems");
    if (elems_it == j.end() || !elems_it->is_array())
      throw ValidationError("set needs an 'elems' array");
    std::vector<Value> elems;
    elems.reserve(elems_it->size());
    for (const auto& e : *elems_it) elems.push_back(from_json(e));
    return mk_set(elems);
  }
  if (kind == "matrix") {
    auto rows_it = j.find("rows");
    auto cols_it = j.find("cols");
    auto entries_it = j.find("entries");
    if (rows_it == j.end() || !rows_it->is_number_integer() || cols_it == j.end() ||
        !cols_it->is_number_integer())
      throw ValidationError("matrix needs integer 'rows' and 'cols'");
    if (entries_it == j.end() || !entries_it->is_array())
      throw ValidationError("matrix needs an 'entries' array");
    const long long rows = rows_it->get<long long>();
    const long long cols = cols_it->get<long long>();
    if (rows < 1 || cols < 1) throw ValidationError("matrix rows and cols must be positive");
    if (static_cast<unsigned long long>(rows) * static_cast<unsigned long long>(cols) !=
        entries_it->size())
      throw ValidationError("matrix entries length must equal rows*cols");
    std::vector<Value> entries;
    entries.reserve(entries_it->size());
    for (const auto& e : *entries_it) entries.push_back(from_json(e));
    return mk_matrix(Shape{static_cast<int>(rows), static_cast<int>(cols)}, entries);
  }
  throw ValidationError("unknown kind '" + kind + "'");
}

}  // namespace smx
