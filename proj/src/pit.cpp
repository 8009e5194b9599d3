#include "pitlab/pit.hpp"

#include <algorithm>
#include <stdexcept>

#include "pitlab/ideal.hpp"
#include "pitlab/quadform.hpp"

namespace pitlab {

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::expansion_empty: return "expansion_empty";
    case CertificateKind::nonzero_monomial: return "nonzero_monomial";
    case CertificateKind::failed_necessary_condition: return "failed_necessary_condition";
    case CertificateKind::sg_witness: return "sg_witness";
    case CertificateKind::early_normalization: return "early_normalization";
    case CertificateKind::resource: return "resource";
  }
  return "?";
}

const char* pipeline_name(PipelineKind k) {
  switch (k) {
    case PipelineKind::p31: return "pit31";
    case PipelineKind::p32: return "pit32";
    case PipelineKind::general: return "pit_general";
  }
  return "?";
}

namespace {

void require_valid(const Circuit& c) {
  const auto diags = validate(c);
  if (has_errors(diags)) {
    std::string msg = "invalid circuit:";
    for (const auto& d : diags)
      if (d.severity == Diagnostic::Severity::error) msg += " [" + d.code + "] " + d.message + ";";
    throw std::invalid_argument(msg);
  }
}

void require_homogeneous(const Circuit& c, const char* who) {
  if (!c.homogeneous)
    throw std::invalid_argument(std::string(who) + " requires a homogeneous-flagged circuit");
}

Verdict from_early(const EarlyVerdict& ev) {
  Verdict v;
  v.status = ev.status;
  v.kind = CertificateKind::early_normalization;
  v.shared_factor = ev.shared_factor;
  v.condition = ev.reason;
  v.info.emplace_back("shared_factor", ev.shared_factor.str());
  v.info.emplace_back("terms_sharing", std::to_string(ev.term_a + 1) + "," + std::to_string(ev.term_b + 1));
  v.info.emplace_back("term_missing", std::to_string(ev.term_missing + 1));
  return v;
}

bool all_terms_factorless(const Circuit& c) {
  for (const auto& t : c.terms)
    if (!t.factors.empty()) return false;
  return true;
}

// Rewrites the circuit in the row space of B: every factor must factor
// through the forms in B (checked exactly). B has full row rank.
Circuit reduce_to_basis(const Circuit& c, const Matrix& b) {
  const Matrix r = b.right_inverse();
  Circuit out;
  out.n = b.rows();
  out.homogeneous = c.homogeneous;
  for (const auto& t : c.terms) {
    Term nt;
    nt.scale = t.scale;
    for (const auto& f : t.factors) {
      Poly reduced = f.substitute_linear(r);
      if (reduced.substitute_linear(b) != f)
        throw std::logic_error("factor does not factor through the reduction basis");
      nt.factors.push_back(std::move(reduced));
    }
    out.terms.push_back(std::move(nt));
  }
  return out;
}

Matrix stack_factor_rows(const Circuit& c, bool linear_only) {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& t : c.terms) {
    for (const auto& f : t.factors) {
      if (f.total_degree() == 1) {
        rows.push_back(f.linear_coeffs());
      } else if (f.total_degree() == 2 && !linear_only) {
        const Matrix g = gram(f);
        for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
      } else if (!linear_only) {
        throw std::invalid_argument("essential space needs factors of degree <= 2");
      }
    }
  }
  if (rows.empty()) return Matrix(0, c.n);
  return Matrix::from_rows(rows);
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

Verdict oracle_expand(const Circuit& c, size_t expansion_budget) {
  Poly acc(c.n);
  for (const auto& t : c.terms) {
    Poly prod = Poly::constant(c.n, t.scale);
    for (const auto& f : t.factors) {
      prod = prod * f;
      if (prod.term_count() > expansion_budget)
        throw ResourceExceeded("expansion monomial budget exceeded");
    }
    acc = acc + prod;
    if (acc.term_count() > expansion_budget)
      throw ResourceExceeded("expansion monomial budget exceeded");
  }

  Verdict v;
  if (acc.is_zero()) {
    v.status = VerdictStatus::ZERO;
    v.kind = CertificateKind::expansion_empty;
  } else {
    v.status = VerdictStatus::NONZERO;
    v.kind = CertificateKind::nonzero_monomial;
    v.witness_monomial = acc.leading_monomial();
    v.witness_coeff = acc.leading_coeff();
    v.info.emplace_back("witness_monomial", monomial_str(acc.leading_monomial()));
    v.info.emplace_back("witness_coeff", acc.leading_coeff().str());
  }
  return v;
}

Matrix essential_space(const Circuit& c) { return stack_factor_rows(c, false).row_space_basis(); }

Verdict pit31(const Circuit& c, const PipelineConfig& cfg) {
  require_homogeneous(c, "pit31");
  require_valid(c);
  if (c.k() != 3 || !c.all_factors_linear())
    throw std::invalid_argument("pit31 expects top fanin 3 with all factors linear");

  NormalizationReport norm = normalize(c);
  if (norm.early_verdict) return from_early(*norm.early_verdict);
  const Circuit& cc = norm.circuit;
  if (all_terms_factorless(cc)) {
    Verdict v = oracle_expand(cc, cfg.expansion_budget);
    v.info.emplace_back("note", "gcd removal left constant terms");
    return v;
  }

  // Pairwise span conditions: for every factor pair from two terms, some
  // factor of the third term must lie in their span.
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const int third = 3 - a - b;
      for (size_t fa = 0; fa < cc.terms[a].factors.size(); ++fa) {
        for (size_t fb = 0; fb < cc.terms[b].factors.size(); ++fb) {
          const Poly& la = cc.terms[a].factors[fa];
          const Poly& lb = cc.terms[b].factors[fb];
          bool found = false;
          for (const Poly& lc : cc.terms[third].factors) {
            if (linear_factor_member(lc, la, lb)) { found = true; break; }
          }
          if (!found) {
            Verdict v;
            v.status = VerdictStatus::NONZERO;
            v.kind = CertificateKind::failed_necessary_condition;
            v.condition = "no factor of term " + std::to_string(third + 1) +
                          " lies in span of term " + std::to_string(a + 1) + " factor " +
                          std::to_string(fa + 1) + " and term " + std::to_string(b + 1) +
                          " factor " + std::to_string(fb + 1);
            return v;
          }
        }
      }
    }
  }

  Matrix basis = stack_factor_rows(cc, true).row_space_basis();
  const int dim_v = basis.rows();
  Verdict v = oracle_expand(reduce_to_basis(cc, basis), cfg.expansion_budget);
  v.info.emplace_back("dim_v", std::to_string(dim_v));
  if (dim_v > 5) v.diagnostics.push_back("paper_claim_violated=span_dim_gt_5 dim=" + std::to_string(dim_v));
  return v;
}

Verdict pit32(const Circuit& c, const PipelineConfig& cfg) {
  require_homogeneous(c, "pit32");
  require_valid(c);
  if (c.k() != 3 || c.max_factor_degree() > 2)
    throw std::invalid_argument("pit32 expects top fanin 3 with factor degree <= 2");
  if (c.all_factors_linear()) return pit31(c, cfg);

  NormalizationReport norm = normalize(c);
  if (norm.early_verdict) return from_early(*norm.early_verdict);
  const Circuit& cc = norm.circuit;
  if (all_terms_factorless(cc)) {
    Verdict v = oracle_expand(cc, cfg.expansion_budget);
    v.info.emplace_back("note", "gcd removal left constant terms");
    return v;
  }
  if (cc.all_factors_linear()) return pit31(cc, cfg);

  // Shape: quadratics concentrated in exactly one term, all irreducible.
  int quad_term = -1;
  for (int t = 0; t < 3; ++t) {
    for (const auto& f : cc.terms[t].factors) {
      if (f.total_degree() != 2) continue;
      if (quad_term >= 0 && quad_term != t)
        throw std::invalid_argument("pit32 subclass expects quadratics in a single term");
      quad_term = t;
    }
  }
  for (const auto& f : cc.terms[quad_term].factors) {
    if (f.total_degree() == 2 && quad_rank(f) < 3)
      throw std::invalid_argument("pit32 subclass expects irreducible quadratic factors");
  }
  std::vector<int> linear_terms;
  for (int t = 0; t < 3; ++t)
    if (t != quad_term) linear_terms.push_back(t);

  // Necessary condition: restricting any quadratic of the quad term to the
  // hyperplane of any linear factor of the other terms must split it
  // (Gram rank <= 2); otherwise the two linear products cannot cancel it.
  for (int lt : linear_terms) {
    for (size_t li = 0; li < cc.terms[lt].factors.size(); ++li) {
      const Poly& l = cc.terms[lt].factors[li];
      if (l.total_degree() != 1) continue;
      for (size_t qi = 0; qi < cc.terms[quad_term].factors.size(); ++qi) {
        const Poly& q = cc.terms[quad_term].factors[qi];
        if (q.total_degree() != 2) continue;
        const int r = quad_rank(restrict_to_hyperplane(q, l));
        if (r > 2) {
          Verdict v;
          v.status = VerdictStatus::NONZERO;
          v.kind = CertificateKind::failed_necessary_condition;
          v.condition = "restriction of quadratic " + std::to_string(qi + 1) + " of term " +
                        std::to_string(quad_term + 1) + " to hyperplane of term " +
                        std::to_string(lt + 1) + " factor " + std::to_string(li + 1) +
                        " keeps rank " + std::to_string(r);
          return v;
        }
      }
    }
  }

  // Claimed-bound diagnostics; recorded, never used to conclude NONZERO.
  std::vector<std::string> diags;
  for (const auto& f : cc.terms[quad_term].factors) {
    if (f.total_degree() != 2) continue;
    const int r = quad_rank(f);
    if (r != 3) diags.push_back("paper_claim_violated=quad_rank_neq_3 rank=" + std::to_string(r));
  }
  {
    std::vector<std::vector<FieldElem>> rows;
    for (int lt : linear_terms)
      for (const auto& f : cc.terms[lt].factors)
        if (f.total_degree() == 1) rows.push_back(f.linear_coeffs());
    const int dim = rows.empty() ? 0 : Matrix::from_rows(rows).rank();
    if (dim > 3) diags.push_back("paper_claim_violated=linear_span_dim_gt_3 dim=" + std::to_string(dim));
  }

  Matrix basis = essential_space(cc);
  Verdict v = oracle_expand(reduce_to_basis(cc, basis), cfg.expansion_budget);
  v.info.emplace_back("dim_w", std::to_string(basis.rows()));
  {
    int quad_rank_val = -1;
    for (const auto& f : cc.terms[quad_term].factors)
      if (f.total_degree() == 2) { quad_rank_val = quad_rank(f); break; }
    if (quad_rank_val >= 0) v.info.emplace_back("first_quad_rank", std::to_string(quad_rank_val));
  }
  v.diagnostics.insert(v.diagnostics.end(), diags.begin(), diags.end());
  return v;
}

Verdict pit_general(const Circuit& c, const PipelineConfig& cfg) {
  require_homogeneous(c, "pit_general");
  require_valid(c);

  NormalizationReport norm = normalize(c);
  if (norm.early_verdict) return from_early(*norm.early_verdict);
  const Circuit& cc = norm.circuit;
  if (all_terms_factorless(cc)) {
    Verdict v = oracle_expand(cc, cfg.expansion_budget);
    v.info.emplace_back("note", "gcd removal left constant terms");
    return v;
  }

  SgReport sg = sg_check(cc, MemberMode::direct, cfg.f_max);
  if (!sg.is_sg) {
    Verdict v;
    v.status = VerdictStatus::NONZERO;
    v.kind = CertificateKind::sg_witness;
    v.sg = sg.witness;
    std::string tuple;
    for (size_t i = 0; i < sg.witness->factor_choice.size(); ++i) {
      if (i) tuple += ",";
      tuple += std::to_string(sg.witness->factor_choice[i] + 1);
    }
    v.condition = "term " + std::to_string(sg.witness->term_index + 1) +
                  " escapes the ideal of the factor choice (" + tuple + ")";
    v.info.emplace_back("sg_witness_term", std::to_string(sg.witness->term_index + 1));
    v.info.emplace_back("sg_witness_choice", tuple);
    return v;
  }

  std::vector<Poly> all_factors;
  for (const auto& t : cc.terms)
    for (const auto& f : t.factors) all_factors.push_back(f);

  const TrdegReport td = trdeg(all_factors);
  Verdict v;
  if (td.value == cc.n) {
    v = oracle_expand(cc, cfg.expansion_budget);
  } else {
    const FaithfulMap fm = faithful_reduce(all_factors, td.value, cfg.grid_budget);
    Circuit reduced;
    reduced.n = td.value;
    reduced.homogeneous = cc.homogeneous;
    for (const auto& t : cc.terms) {
      Term nt;
      nt.scale = t.scale;
      for (const auto& f : t.factors) nt.factors.push_back(f.substitute_linear(fm.substitution));
      reduced.terms.push_back(std::move(nt));
    }
    v = oracle_expand(reduced, cfg.expansion_budget);
    v.info.emplace_back("faithful_grid", std::to_string(fm.grid));
  }
  v.info.emplace_back("sg", "true");
  v.info.emplace_back("trdeg", std::to_string(td.value));
  return v;
}

PipelineKind detect_pipeline(const Circuit& c) {
  if (c.k() == 3 && c.all_factors_linear()) return PipelineKind::p31;
  if (c.k() == 3 && c.max_factor_degree() <= 2) {
    int quad_term = -1;
    bool single = true;
    bool irreducible = true;
    for (int t = 0; t < 3 && single; ++t) {
      for (const auto& f : c.terms[t].factors) {
        if (f.total_degree() != 2) continue;
        if (quad_term >= 0 && quad_term != t) { single = false; break; }
        quad_term = t;
        if (quad_rank(f) < 3) irreducible = false;
      }
    }
    if (single && quad_term >= 0 && irreducible) return PipelineKind::p32;
  }
  return PipelineKind::general;
}

Verdict run_pipeline(PipelineKind kind, const Circuit& c, const PipelineConfig& cfg) {
  switch (kind) {
    case PipelineKind::p31: return pit31(c, cfg);
    case PipelineKind::p32: return pit32(c, cfg);
    case PipelineKind::general: return pit_general(c, cfg);
  }
  throw std::logic_error("unknown pipeline");
}

}  // namespace pitlab
