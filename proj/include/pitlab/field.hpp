#ifndef PITLAB_FIELD_HPP
#define PITLAB_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pitlab {

// Process-wide quadratic extension context. Every FieldElem is an element of
// Q(sqrt(d)) for the current discriminant d, which must be a square-free
// integer other than 0 and 1 (so sqrt(d) is irrational and a + b*sqrt(d)
// vanishes only when a = b = 0). Defaults to d = -3, which contains the
// primitive cube root of unity (-1 + w)/2; d = -1 contains i.
namespace ext {

bool is_square_free(long d);
long discriminant();
void set_discriminant(long d);

}  // namespace ext

// Exact element a + b*w of Q(sqrt(d)), w = sqrt(d). Components are kept in
// lowest terms with positive denominator (mpq canonical form), so equality
// is structural.
class FieldElem {
 public:
  FieldElem() : a_(0), b_(0) {}
  FieldElem(long v) : a_(v), b_(0) {}
  explicit FieldElem(const mpq_class& a) : a_(a), b_(0) {}
  FieldElem(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}

  // num/den constructor; canonicalizes.
  static FieldElem rational(long num, long den);
  // w itself.
  static FieldElem root();

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  FieldElem operator-() const { return FieldElem(-a_, -b_); }
  FieldElem operator+(const FieldElem& o) const { return FieldElem(a_ + o.a_, b_ + o.b_); }
  FieldElem operator-(const FieldElem& o) const { return FieldElem(a_ - o.a_, b_ - o.b_); }
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  FieldElem& operator+=(const FieldElem& o) { a_ += o.a_; b_ += o.b_; return *this; }
  FieldElem& operator-=(const FieldElem& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }

  bool operator==(const FieldElem& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem conj() const { return FieldElem(a_, -b_); }
  // a^2 - d*b^2; zero only for the zero element.
  mpq_class norm() const;
  FieldElem inverse() const;

  // Coefficient grammar: "<rat>", "<rat>+<rat>w" or "<rat>-<rat>w", with
  // "<b>w" when the rational part is zero.
  std::string str() const;

 private:
  mpq_class a_, b_;
};

inline FieldElem operator*(long s, const FieldElem& x) { return FieldElem(s) * x; }

}  // namespace pitlab

#endif  // PITLAB_FIELD_HPP
