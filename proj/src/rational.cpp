#include "sugawara/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sugawara {

Rational parse_rational(std::string_view text)
{
  auto fail = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') ++pos;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '/') {
      if (seen_slash) throw fail();
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw fail();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw fail();

  std::string body(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(body, 10) != 0) throw fail();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  Rational c = q;  // two-argument construction does not reduce
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace sugawara
