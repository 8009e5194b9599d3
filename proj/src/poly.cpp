#include "pitlab/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pitlab {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Poly Poly::constant(int n, const FieldElem& c) {
  Poly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Poly Poly::variable(int n, int i) {
  Poly p(n);
  Monomial m(n);
  m.e[i] = 1;
  p.add_term(m, FieldElem(1));
  return p;
}

Poly Poly::linear(const std::vector<FieldElem>& coefs) {
  Poly p(int(coefs.size()));
  for (size_t i = 0; i < coefs.size(); ++i) {
    Monomial m(int(coefs.size()));
    m.e[i] = 1;
    p.add_term(m, coefs[i]);
  }
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

FieldElem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem() : it->second;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const FieldElem& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch in +");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch in -");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch in *");
  Poly r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d(m);
    d.e[var] -= 1;
    r.add_term(d, c * FieldElem(m.e[var]));
  }
  return r;
}

Poly Poly::substitute_linear(const Matrix& A) const {
  if (A.rows() != n_) throw std::invalid_argument("substitution matrix needs one row per variable");
  const int m = A.cols();

  std::vector<Poly> image(n_, Poly(m));
  for (int i = 0; i < n_; ++i) image[i] = Poly::linear(A.row(i));

  // Power cache per variable, grown on demand.
  std::vector<std::vector<Poly>> pow(n_);
  for (int i = 0; i < n_; ++i) pow[i].push_back(Poly::constant(m, FieldElem(1)));

  Poly r(m);
  for (const auto& [mono, c] : terms_) {
    Poly t = Poly::constant(m, c);
    for (int i = 0; i < n_; ++i) {
      const int e = mono.e[i];
      if (e == 0) continue;
      while (int(pow[i].size()) <= e) pow[i].push_back(pow[i].back() * image[i]);
      t = t * pow[i][e];
    }
    r = r + t;
  }
  return r;
}

FieldElem Poly::eval(const std::vector<FieldElem>& point) const {
  if (int(point.size()) != n_) throw std::invalid_argument("point dimension mismatch");
  FieldElem acc;
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::optional<Poly> Poly::exact_divide(const Poly& f, const Poly& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("variable count mismatch in exact_divide");
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q(f.n_);
  Poly rem(f);
  const Monomial& lg = g.leading_monomial();
  const FieldElem& cg = g.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lg.divides(lr)) return std::nullopt;
    const Monomial qm = lr.divide(lg);
    const FieldElem qc = rem.leading_coeff() / cg;
    Poly t(f.n_);
    t.add_term(qm, qc);
    q = q + t;
    rem = rem - t * g;
  }
  return q;
}

std::vector<FieldElem> Poly::linear_coeffs() const {
  std::vector<FieldElem> r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() != 1) throw std::domain_error("linear_coeffs on non-linear polynomial");
    for (int i = 0; i < n_; ++i)
      if (m.e[i] == 1) r[i] = c;
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < n_; ++i) {
      if (m.e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial(0));
    return out;
  }
  Monomial cur(n);
  // Odometer over exponent vectors summing to d.
  struct Rec {
    int n, d;
    std::vector<Monomial>& out;
    Monomial& cur;
    void go(int pos, int left) {
      if (pos == n - 1) {
        cur.e[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur.e[pos] = v;
        go(pos + 1, left - v);
      }
    }
  } rec{n, d, out, cur};
  rec.go(0, d);
  return out;
}

bool associates(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("associates requires nonzero inputs");
  if (p.vars() != q.vars() || p.term_count() != q.term_count()) return false;
  const FieldElem ratio = p.leading_coeff() / q.leading_coeff();
  auto ip = p.terms().begin();
  auto iq = q.terms().begin();
  for (; ip != p.terms().end(); ++ip, ++iq) {
    if (!(ip->first == iq->first)) return false;
    if (ip->second != iq->second * ratio) return false;
  }
  return true;
}

}  // namespace pitlab
