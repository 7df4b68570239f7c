#include "z4kit/codes_db.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "z4kit/error.hpp"

namespace z4kit {

namespace detail {
struct EmbeddedCode {
  std::string_view name;
  std::string_view text;
};
// Generated at build time from data/codes.
extern const EmbeddedCode kEmbeddedCodes[];
extern const std::size_t kEmbeddedCodeCount;
}  // namespace detail

namespace {

const detail::EmbeddedCode* find_embedded(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedCodeCount; ++i) {
    if (detail::kEmbeddedCodes[i].name == name) return &detail::kEmbeddedCodes[i];
  }
  return nullptr;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kEmbeddedCodeCount; ++i) out.emplace_back(detail::kEmbeddedCodes[i].name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view builtin_text(std::string_view name) {
  const auto* e = find_embedded(name);
  if (!e) throw PreconditionError("unknown built-in code '" + std::string(name) + "'");
  return e->text;
}

NamedCode builtin_code(std::string_view name) {
  const std::string text(builtin_text(name));
  NamedCode out;
  out.name = std::string(name);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] != '#') continue;
    const std::string body = trim(line.substr(1));
    if (body.rfind("source:", 0) == 0) {
      out.source = trim(body.substr(7));
    } else if (body.rfind("two_u support:", 0) == 0) {
      out.two_u_support = parse_positions(trim(body.substr(14)), 64);
    } else if (out.description.empty()) {
      out.description = body;
    }
  }
  out.code = parse_z4code(text);
  return out;
}

Z4Code load_code(const std::string& where) {
  constexpr std::string_view scheme = "builtin:";
  if (where.rfind(scheme, 0) == 0) return builtin_code(where.substr(scheme.size())).code;
  std::ifstream in(where);
  if (!in) throw PreconditionError("cannot open " + where);
  return parse_z4code(in);
}

}  // namespace z4kit
