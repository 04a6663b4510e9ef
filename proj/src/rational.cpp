#include "curco/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace curco {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// integer literal with optional '-' sign
bool valid_int(const std::string& s, size_t from, size_t to) {
  if (from < to && s[from] == '-') ++from;
  return all_digits(s, from, to);
}

}  // namespace

std::optional<Rat> Rat::parse(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s, 0, s.size())) return std::nullopt;
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    v.canonicalize();
    return Rat(std::move(v));
  }
  if (!valid_int(s, 0, slash) || !all_digits(s, slash + 1, s.size())) return std::nullopt;
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (sgn(mpq_class(v.get_den())) == 0) return std::nullopt;
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}
Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

}  // namespace curco
