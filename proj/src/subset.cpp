#include "frontis/subset.hpp"

namespace frontis {

std::string to_string(const subset& s, const std::vector<std::string>* labels) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < s.universe; ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ",";
    first = false;
    out += labels && !labels->empty() ? (*labels)[i] : std::to_string(i);
  }
  out += "}";
  return out;
}

}  // namespace frontis
