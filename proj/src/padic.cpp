#include "shalika/padic.hpp"

namespace shalika {

std::string to_string(Ternary t) {
  switch (t) {
    case Ternary::inside: return "inside";
    case Ternary::outside: return "outside";
    default: return "undecided";
  }
}

std::string PAdicScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (val_ != 0) s += "p^" + std::to_string(val_) + "*";
  s += std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::string PAdicBall::to_string() const {
  if (is_point()) return center_.to_string();
  return center_.to_string() + " + p^" + std::to_string(k_) + "*O";
}

}  // namespace shalika
