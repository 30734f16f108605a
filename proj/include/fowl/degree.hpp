#pragma once

#include <stdexcept>
#include <string>

#include "fowl/rational.hpp"

namespace fowl {

// A truth degree: a rational confined to [0,1].
class Degree {
 public:
  Degree() : value_(0) {}
  explicit Degree(Rat value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
      throw std::domain_error("degree outside [0,1]: " + to_decimal_string(value_));
  }

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(Rat(1)); }

  const Rat& value() const { return value_; }
  std::string str() const { return to_decimal_string(value_); }

  friend bool operator==(const Degree& x, const Degree& y) { return x.value_ == y.value_; }
  friend bool operator!=(const Degree& x, const Degree& y) { return x.value_ != y.value_; }
  friend bool operator<(const Degree& x, const Degree& y) { return x.value_ < y.value_; }
  friend bool operator<=(const Degree& x, const Degree& y) { return x.value_ <= y.value_; }
  friend bool operator>(const Degree& x, const Degree& y) { return x.value_ > y.value_; }
  friend bool operator>=(const Degree& x, const Degree& y) { return x.value_ >= y.value_; }

 private:
  Rat value_;
};

}  // namespace fowl
