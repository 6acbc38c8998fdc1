#ifndef VCMETA_STRUTIL_HPP
#define VCMETA_STRUTIL_HPP

#include <string>
#include <string_view>

namespace vcmeta {

// ASCII-only lowercasing; non-ASCII bytes pass through untouched.
inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

}  // namespace vcmeta

#endif  // VCMETA_STRUTIL_HPP
