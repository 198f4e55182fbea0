#include "waringlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace waringlab {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view s) {
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("invalid rational: '" + std::string(s) + "'");
  mpq_class v(std::string(num) + "/" + std::string(den));
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("invalid rational: '" + std::string(s) + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace waringlab
