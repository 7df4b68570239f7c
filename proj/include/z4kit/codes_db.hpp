#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z4kit/z4.hpp"

namespace z4kit {

struct NamedCode {
  std::string name;
  std::string source;       // "published" or "derived"
  std::string description;  // first comment line of the file
  std::optional<Word> two_u_support;  // doubling set the code came from, if recorded
  Z4Code code;
};

std::vector<std::string> builtin_names();
// Throws PreconditionError for unknown names.
NamedCode builtin_code(std::string_view name);
// The embedded Z4CODE file, byte for byte.
std::string_view builtin_text(std::string_view name);

// "builtin:<name>" or a filesystem path.
Z4Code load_code(const std::string& where);

}  // namespace z4kit
