#include "pitlab/field.hpp"

namespace pitlab {
namespace ext {

namespace {
long g_discriminant = -3;
}

bool is_square_free(long d) {
  if (d == 0 || d == 1) return false;
  long m = d < 0 ? -d : d;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long discriminant() { return g_discriminant; }

void set_discriminant(long d) {
  if (!is_square_free(d)) {
    throw std::invalid_argument("extension discriminant must be square-free and not 0 or 1: " +
                                std::to_string(d));
  }
  g_discriminant = d;
}

}  // namespace ext

FieldElem FieldElem::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElem(q);
}

FieldElem FieldElem::root() { return FieldElem(mpq_class(0), mpq_class(1)); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const long d = ext::discriminant();
  return FieldElem(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

mpq_class FieldElem::norm() const { return a_ * a_ - ext::discriminant() * b_ * b_; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  const mpq_class nrm = norm();
  return FieldElem(a_ / nrm, -b_ / nrm);
}

std::string FieldElem::str() const {
  if (b_ == 0) return a_.get_str();
  std::string bw = b_.get_str() + "w";
  if (a_ == 0) return bw;
  if (b_ < 0) return a_.get_str() + "-" + mpq_class(-b_).get_str() + "w";
  return a_.get_str() + "+" + bw;
}

}  // namespace pitlab
