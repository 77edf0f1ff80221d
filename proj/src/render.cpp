#include "weil/render.hpp"

namespace weil {

std::string render_terms(const std::vector<std::pair<std::string, Matrix>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, m] : terms) {
    bool negative = false;
    std::string text;
    Scalar c;
    if (m.is_scalar_multiple(&c)) {
      negative = c.sign() < 0;
      Scalar a = c.abs();
      if (mono.empty())
        text = a.to_string();
      else if (a.is_one())
        text = mono;
      else
        text = a.to_string() + "*" + mono;
    } else {
      text = (mono.empty() ? std::string("1") : mono) + " \xE2\x8A\x97 " + m.to_string();
    }
    if (first)
      out += negative ? "-" + text : text;
    else
      out += (negative ? " - " : " + ") + text;
    first = false;
  }
  return out;
}

}  // namespace weil
