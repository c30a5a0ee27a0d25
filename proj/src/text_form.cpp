#include "topocount/text_form.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace topocount {

namespace {

void append_hex(std::ostringstream& os, std::uint32_t v) {
  os << std::hex << v << std::dec;
}

[[noreturn]] void bad(std::string_view line, const std::string& why) {
  throw Error(Errc::parse_error,
              "bad topology line: " + why + " in \"" + std::string(line) + "\"");
}

std::uint32_t parse_hex(std::string_view line, std::string_view token) {
  std::uint32_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v, 16);
  if (ec != std::errc() || ptr != last || token.empty()) {
    bad(line, "invalid hex mask \"" + std::string(token) + "\"");
  }
  return v;
}

std::string_view expect_field(std::string_view line, std::string_view& rest,
                              std::string_view key, char terminator) {
  if (rest.substr(0, key.size()) != key) {
    bad(line, "expected \"" + std::string(key) + "\"");
  }
  rest.remove_prefix(key.size());
  std::size_t end = terminator == '\0' ? rest.size() : rest.find(terminator);
  if (end == std::string_view::npos) {
    bad(line, std::string("missing '") + terminator + "' separator");
  }
  std::string_view value = rest.substr(0, end);
  rest.remove_prefix(terminator == '\0' ? end : end + 1);
  return value;
}

}  // namespace

std::string to_text(const Topology& t) {
  std::ostringstream os;
  os << "n=" << t.size() << ";ground=";
  append_hex(os, t.ground().mask());
  os << ";opens=";
  bool first = true;
  for (PointSet o : t.opens()) {
    if (!first) os << ",";
    append_hex(os, o.mask());
    first = false;
  }
  return os.str();
}

Topology parse_topology(std::string_view line) {
  std::string_view rest = line;
  while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r')) {
    rest.remove_suffix(1);
  }

  const std::string_view n_tok = expect_field(line, rest, "n=", ';');
  int n = -1;
  {
    auto [ptr, ec] = std::from_chars(n_tok.data(), n_tok.data() + n_tok.size(), n);
    if (ec != std::errc() || ptr != n_tok.data() + n_tok.size()) {
      bad(line, "invalid point count \"" + std::string(n_tok) + "\"");
    }
  }
  const PointSet ground(parse_hex(line, expect_field(line, rest, "ground=", ';')));
  if (ground.size() != n) {
    bad(line, "point count " + std::to_string(n) + " does not match the ground set");
  }

  const std::string_view opens_tok = expect_field(line, rest, "opens=", '\0');
  std::vector<PointSet> opens;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = opens_tok.find(',', pos);
    std::string_view item = opens_tok.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    opens.emplace_back(parse_hex(line, item));
    if (opens.size() >= 2 && !(opens[opens.size() - 2] < opens.back())) {
      bad(line, "opens are not strictly ascending");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return validate(opens, ground);
}

}  // namespace topocount
