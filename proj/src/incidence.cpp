#include "pitlab/incidence.hpp"

#include <stdexcept>

namespace pitlab {

ProjPoint ProjPoint::canonical(std::vector<FieldElem> coords) {
  int lead = -1;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) { lead = int(i); break; }
  }
  if (lead < 0) throw std::invalid_argument("projective point needs a nonzero coordinate");
  const FieldElem inv = coords[lead].inverse();
  for (auto& c : coords) c *= inv;
  return ProjPoint{std::move(coords)};
}

size_t Configuration::point_count() const {
  size_t c = 0;
  for (const auto& [name, pts] : sets) c += pts.size();
  return c;
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return Matrix::from_rows({p.c, q.c, r.c}).rank() <= 2;
}

int span_dim(const Configuration& cfg) {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& [name, pts] : cfg.sets)
    for (const auto& p : pts) rows.push_back(p.c);
  if (rows.empty()) return 0;
  return Matrix::from_rows(rows).rank();
}

std::vector<LineHit> line_points(const ProjPoint& p, const ProjPoint& q, const Configuration& cfg) {
  if (p == q) throw std::invalid_argument("line through a single point is undefined");
  std::vector<LineHit> hits;
  for (size_t s = 0; s < cfg.sets.size(); ++s) {
    const auto& pts = cfg.sets[s].second;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (collinear(p, q, pts[i])) hits.push_back({int(s), int(i)});
    }
  }
  return hits;
}

std::optional<TwoSetLine> find_line_two_sets(const Configuration& cfg) {
  if (cfg.sets.size() < 2) throw std::invalid_argument("need at least two sets");
  for (size_t sa = 0; sa < cfg.sets.size(); ++sa) {
    for (size_t sb = sa + 1; sb < cfg.sets.size(); ++sb) {
      const auto& pa = cfg.sets[sa].second;
      const auto& pb = cfg.sets[sb].second;
      for (size_t ia = 0; ia < pa.size(); ++ia) {
        for (size_t ib = 0; ib < pb.size(); ++ib) {
          const auto hits = line_points(pa[ia], pb[ib], cfg);
          std::vector<bool> touched(cfg.sets.size(), false);
          for (const auto& h : hits) touched[h.set] = true;
          int count = 0;
          for (bool t : touched) count += t ? 1 : 0;
          if (count == 2) {
            return TwoSetLine{int(sa), int(ia), int(sb), int(ib), hits};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_ordinary_line(const std::vector<ProjPoint>& points) {
  if (points.size() < 3) throw std::invalid_argument("need at least three points");
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      int on = 0;
      for (size_t r = 0; r < points.size(); ++r) {
        if (collinear(points[i], points[j], points[r])) ++on;
      }
      if (on == 2) return std::make_pair(int(i), int(j));
    }
  }
  return std::nullopt;
}

CircuitConfiguration circuit_to_configuration(const Circuit& c) {
  CircuitConfiguration out;
  out.cfg.n = c.n;
  for (size_t t = 0; t < c.terms.size(); ++t) {
    std::vector<ProjPoint> pts;
    for (size_t fi = 0; fi < c.terms[t].factors.size(); ++fi) {
      const Poly& f = c.terms[t].factors[fi];
      if (f.total_degree() != 1 || !f.is_homogeneous()) {
        out.notices.push_back("term " + std::to_string(t + 1) + " factor " + std::to_string(fi + 1) +
                              " skipped (degree != 1)");
        continue;
      }
      ProjPoint p = ProjPoint::canonical(f.linear_coeffs());
      bool dup = false;
      for (const auto& q : pts) {
        if (p == q) { dup = true; break; }
      }
      if (!dup) pts.push_back(std::move(p));
    }
    if (!pts.empty()) out.cfg.sets.emplace_back("F" + std::to_string(t + 1), std::move(pts));
  }
  // Cross-set duplicates mean the source terms were not pairwise coprime.
  for (size_t a = 0; a < out.cfg.sets.size(); ++a)
    for (size_t b = a + 1; b < out.cfg.sets.size(); ++b)
      for (const auto& p : out.cfg.sets[a].second)
        for (const auto& q : out.cfg.sets[b].second)
          if (p == q)
            throw std::invalid_argument("cross-set duplicate point: terms share the factor " +
                                        Poly::linear(p.c).str());
  return out;
}

}  // namespace pitlab
