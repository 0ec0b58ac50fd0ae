#include "expander/set_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace expander {

namespace {

void add_value(FpSet& s, std::int64_t v, std::vector<std::string>* warnings) {
  const Elem x = s.field().reduce(v);
  if (s.contains(x)) {
    if (warnings) warnings->push_back("duplicate element " + std::to_string(v) + " (= " + std::to_string(x) + " mod p) ignored");
    return;
  }
  s.insert(x);
}

}  // namespace

FpSet parse_set(const FieldPtr& F, std::string_view text, std::vector<std::string>* warnings) {
  FpSet s(F);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, std::string("set JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error(Errc::ParseError, "set JSON must be an array of integers");
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw Error(Errc::ParseError, "set JSON must contain only integers");
      add_value(s, v.get<std::int64_t>(), warnings);
    }
    return s;
  }
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.front() == '+') line.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": not an integer: '" + std::string(line) + "'");
    }
    add_value(s, v, warnings);
  }
  return s;
}

FpSet load_set_file(const FieldPtr& F, const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigInvalid, "cannot read set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set(F, buf.str(), warnings);
}

std::string format_set(const FpSet& s) {
  std::string out;
  for (Elem x : s.elements()) {
    out += std::to_string(x);
    out += '\n';
  }
  return out;
}

}  // namespace expander
