#include "nonfree/mat2.hpp"

#include <stdexcept>

namespace nonfree {

Mat2 Mat2::inverse() const {
  Rational d = det();
  if (d.is_zero()) throw std::domain_error("singular matrix");
  Rational inv = d.inverse();
  return {e22 * inv, -e12 * inv, -e21 * inv, e11 * inv};
}

std::string Mat2::str() const {
  return "(" + e11.str() + " " + e12.str() + "; " + e21.str() + " " + e22.str() + ")";
}

}  // namespace nonfree
