#include "tritile/lattice.hpp"

#include <sstream>

namespace tritile {

std::string monomial_text(const QPoint& p) {
  std::ostringstream os;
  os << "x1^" << p[0] << " x2^" << p[1] << " x3^" << p[2];
  return os.str();
}

std::string to_text(const QPoint& p) {
  std::ostringstream os;
  os << p[0] << ',' << p[1] << ',' << p[2];
  return os.str();
}

}  // namespace tritile
