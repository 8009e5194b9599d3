#ifndef PITLAB_POLY_HPP
#define PITLAB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pitlab/field.hpp"
#include "pitlab/matrix.hpp"

namespace pitlab {

// Exponent vector of fixed length n; compared in graded lexicographic order
// (total degree first, then lexicographic with x1 heaviest).
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int n) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int degree() const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // this / o, assumes o.divides-ish
  bool operator==(const Monomial& o) const { return e == o.e; }
};

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// Sparse multivariate polynomial with exact coefficients. No zero
// coefficients are stored; the zero polynomial has an empty term map.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GradedLexLess>;

  Poly() : n_(0) {}
  explicit Poly(int n) : n_(n) {}

  static Poly constant(int n, const FieldElem& c);
  static Poly variable(int n, int i);
  // Linear form sum_i coefs[i] * x_i.
  static Poly linear(const std::vector<FieldElem>& coefs);

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  FieldElem coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const FieldElem& c);

  const Monomial& leading_monomial() const;
  const FieldElem& leading_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FieldElem& c) const;
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int var) const;

  // Replace old variable i by the linear form given by row i of A
  // (A: n rows, m columns); the result lives in m variables.
  Poly substitute_linear(const Matrix& A) const;

  FieldElem eval(const std::vector<FieldElem>& point) const;

  // Quotient when g divides this exactly, nullopt otherwise.
  static std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

  // Coefficient row of a linear form (degree <= 1 with no constant term).
  std::vector<FieldElem> linear_coeffs() const;

  // Debug/report rendering, e.g. "2*x1^2*x3 - x2".
  std::string str() const;

 private:
  int n_;
  TermMap terms_;
};

// All monomials in n variables of total degree exactly d, ascending
// graded-lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);

// True when p = c*q for a nonzero constant c (both nonzero).
bool associates(const Poly& p, const Poly& q);

}  // namespace pitlab

#endif  // PITLAB_POLY_HPP
