#ifndef PACBR_SESSION_COMMANDS_HPP
#define PACBR_SESSION_COMMANDS_HPP

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "pacbr/errors.hpp"

namespace pacbr {
namespace session_detail {

// Splits a command line into words; double-quoted stretches form a single
// token with the quotes stripped. '#' outside quotes starts a comment.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '#') break;
    if (c == '"') {
      const std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) throw Error("unterminated quote");
      out.push_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '"' && line[j] != '#')
      ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw Error("not an integer: '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error("not an integer: '" + s + "'");
  }
}

// Parses "<rank>: <formula text>".
inline std::pair<int, std::string> split_ranked(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw Error("expected '<rank>: <formula>', got '" + text + "'");
  const int rank = to_int([&] {
    std::string head = text.substr(0, colon);
    std::size_t b = head.find_first_not_of(" \t");
    std::size_t e = head.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("missing rank before ':'");
    return head.substr(b, e - b + 1);
  }());
  return {rank, text.substr(colon + 1)};
}

inline void check_atom_name(const std::string& name) {
  if (name == "top") throw Error("'top' is a reserved word");
  if (name.empty() || name[0] < 'a' || name[0] > 'z')
    throw Error("atom names match [a-z][a-z0-9_]*: '" + name + "'");
  for (char c : name)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'))
      throw Error("atom names match [a-z][a-z0-9_]*: '" + name + "'");
}

}  // namespace session_detail
}  // namespace pacbr

#endif  // PACBR_SESSION_COMMANDS_HPP
