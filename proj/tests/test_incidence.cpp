#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pitlab/incidence.hpp"
#include "pitlab/io.hpp"
#include "support.hpp"

using namespace pitlab;
using namespace tsup;

namespace {

ProjPoint pt(std::vector<long> cs) {
  std::vector<FieldElem> v;
  for (long c : cs) v.push_back(FieldElem(c));
  return ProjPoint::canonical(std::move(v));
}

Configuration cfg_of(std::vector<std::vector<ProjPoint>> sets) {
  Configuration cfg;
  cfg.n = int(sets[0][0].c.size());
  for (size_t i = 0; i < sets.size(); ++i) cfg.sets.emplace_back("S" + std::to_string(i + 1), sets[i]);
  return cfg;
}

// Independent exhaustive scan used to double-check the finders.
int naive_count_on_line(const std::vector<ProjPoint>& pts, size_t i, size_t j) {
  int on = 0;
  for (const auto& r : pts)
    if (collinear(pts[i], pts[j], r)) ++on;
  return on;
}

}  // namespace

TEST_CASE("canonical form identifies scalar multiples") {
  CHECK(pt({2, 4, 0}) == pt({1, 2, 0}));
  CHECK(pt({0, 3, 6}) == pt({0, 1, 2}));
  CHECK_FALSE(pt({1, 2, 0}) == pt({1, 2, 1}));
  CHECK_THROWS_AS(ProjPoint::canonical({FieldElem(), FieldElem()}), std::invalid_argument);
}

TEST_CASE("span dimension") {
  ext::set_discriminant(-3);
  const Configuration three = cfg_of({{pt({1, 0, 0})}, {pt({0, 1, 0})}, {pt({1, 2, 0})}});
  CHECK(span_dim(three) == 2);

  std::vector<ProjPoint> e1to6;
  for (int i = 0; i < 6; ++i) {
    std::vector<long> c(6, 0);
    c[i] = 1;
    e1to6.push_back(pt(c));
  }
  const Configuration basis =
      cfg_of({{e1to6[0], e1to6[1], e1to6[2]}, {e1to6[3], e1to6[4], e1to6[5]}});
  CHECK(span_dim(basis) == 6);

  Configuration hesse;
  hesse.n = 3;
  hesse.sets.emplace_back("H", hesse_points());
  CHECK(span_dim(hesse) == 3);
}

TEST_CASE("line points") {
  const Configuration three = cfg_of({{pt({1, 0, 0})}, {pt({0, 1, 0})}, {pt({1, 2, 0})}});
  const auto hits = line_points(pt({1, 0, 0}), pt({0, 1, 0}), three);
  CHECK(hits.size() == 3);  // includes (1,2,0)

  const Configuration pair = cfg_of({{pt({1, 0, 0})}, {pt({0, 1, 0})}});
  CHECK(line_points(pt({1, 0, 0}), pt({0, 1, 0}), pair).size() == 2);

  CHECK_THROWS_AS(line_points(pt({1, 0, 0}), pt({2, 0, 0}), pair), std::invalid_argument);
}

TEST_CASE("hesse configuration carries no ordinary line and every line has three points") {
  ext::set_discriminant(-3);
  const auto pts = hesse_points();
  REQUIRE(pts.size() == 9);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) CHECK(naive_count_on_line(pts, i, j) == 3);
  CHECK_FALSE(find_ordinary_line(pts).has_value());
}

TEST_CASE("deleting any hesse point exposes an ordinary line") {
  const auto pts = hesse_points();
  for (size_t drop = 0; drop < pts.size(); ++drop) {
    std::vector<ProjPoint> rest;
    for (size_t i = 0; i < pts.size(); ++i)
      if (i != drop) rest.push_back(pts[i]);
    const auto found = find_ordinary_line(rest);
    REQUIRE(found.has_value());
    CHECK(naive_count_on_line(rest, size_t(found->first), size_t(found->second)) == 2);
  }
}

TEST_CASE("three non-collinear points have an ordinary line") {
  CHECK(find_ordinary_line({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}).has_value());
  CHECK_THROWS_AS(find_ordinary_line({pt({1, 0, 0}), pt({0, 1, 0})}), std::invalid_argument);
}

TEST_CASE("two-set line finder") {
  SUBCASE("the counterexample configuration has none") {
    const Configuration three = cfg_of({{pt({1, 0})}, {pt({0, 1})}, {pt({1, 2})}});
    CHECK_FALSE(find_line_two_sets(three).has_value());
  }
  SUBCASE("two singletons give the trivial line") {
    const Configuration pair = cfg_of({{pt({1, 0, 0})}, {pt({0, 1, 0})}});
    const auto r = find_line_two_sets(pair);
    REQUIRE(r.has_value());
    CHECK(r->on_line.size() == 2);
  }
  SUBCASE("high span forces a two-set line") {
    std::mt19937_64 rng(149);
    int produced = 0;
    while (produced < 12) {
      const int n = 6 + int(rng() % 2);
      Configuration cfg;
      cfg.n = n;
      const int nsets = 2 + int(rng() % 3);
      bool ok = true;
      std::vector<ProjPoint> seen;
      for (int s = 0; s < nsets && ok; ++s) {
        std::vector<ProjPoint> pts;
        const int m = 3 + int(rng() % 3);
        for (int i = 0; i < m; ++i) {
          std::vector<FieldElem> c(n);
          bool nonzero = false;
          for (int v = 0; v < n; ++v) {
            const long val = long(rng() % 5) - 2;
            c[v] = FieldElem(val);
            nonzero |= val != 0;
          }
          if (!nonzero) c[0] = FieldElem(1);
          ProjPoint p = ProjPoint::canonical(std::move(c));
          bool dup = false;
          for (const auto& q : seen) dup |= q == p;
          if (dup) { --i; continue; }
          seen.push_back(p);
          pts.push_back(std::move(p));
        }
        cfg.sets.emplace_back("S" + std::to_string(s + 1), std::move(pts));
      }
      if (!ok || span_dim(cfg) < 6) continue;
      ++produced;
      CHECK(find_line_two_sets(cfg).has_value());
    }
  }
}

TEST_CASE("point sets spanning four dimensions always have an ordinary line") {
  std::mt19937_64 rng(151);
  int produced = 0;
  while (produced < 25) {
    const int n = 4 + int(rng() % 2);
    std::vector<ProjPoint> pts;
    const int m = 4 + int(rng() % 5);
    for (int i = 0; i < m; ++i) {
      std::vector<FieldElem> c(n);
      bool nonzero = false;
      for (int v = 0; v < n; ++v) {
        const long val = long(rng() % 5) - 2;
        c[v] = FieldElem(val);
        nonzero |= val != 0;
      }
      if (!nonzero) c[0] = FieldElem(1);
      ProjPoint p = ProjPoint::canonical(std::move(c));
      bool dup = false;
      for (const auto& q : pts) dup |= q == p;
      if (dup) { --i; continue; }
      pts.push_back(std::move(p));
    }
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& p : pts) rows.push_back(p.c);
    if (Matrix::from_rows(rows).rank() < 4) continue;  // projectively coplanar
    ++produced;
    CHECK(find_ordinary_line(pts).has_value());
  }
}

TEST_CASE("circuit to configuration") {
  const auto cc = circuit_to_configuration(counterexample31());
  CHECK(cc.cfg.sets.size() == 3);
  for (const auto& [name, pts] : cc.cfg.sets) CHECK(pts.size() == 1);
  CHECK(cc.cfg.sets[2].second[0] == pt({1, 2}));

  const auto dd = circuit_to_configuration(diffsq_zero());
  CHECK(dd.cfg.sets[0].second.size() == 2);
  CHECK(dd.cfg.sets[1].second.size() == 1);  // duplicate factor x collapses
  CHECK(dd.cfg.sets[1].second[0] == pt({1, 0}));

  // Quadratic factors are skipped with a notice.
  const auto qq = circuit_to_configuration(quadzero32());
  CHECK(qq.notices.size() == 1);
  CHECK(qq.cfg.sets.size() == 2);

  // Cross-set duplicates reject.
  Circuit shared = circ(2, {Term(FieldElem(1), {lin({1, 0})}), Term(FieldElem(1), {lin({2, 0})})});
  CHECK_THROWS_AS(circuit_to_configuration(shared), std::invalid_argument);
}

TEST_CASE("configurations of condition-passing circuits meet the span bound") {
  // Circuits whose pairwise span conditions hold map to configurations where
  // every cross-set line meets a third set and the span stays below six.
  for (const Circuit& c : {counterexample31(), diffsq_zero()}) {
    const auto cc = circuit_to_configuration(c);
    CHECK_FALSE(find_line_two_sets(cc.cfg).has_value());
    CHECK(span_dim(cc.cfg) <= 5);
  }
}

TEST_CASE("configuration text round trip") {
  ext::set_discriminant(-3);
  Configuration hesse;
  hesse.n = 3;
  hesse.sets.emplace_back("H", hesse_points());
  const std::string text = serialize_configuration(hesse);
  const Configuration back = parse_configuration(text);
  CHECK(back.n == 3);
  REQUIRE(back.sets.size() == 1);
  CHECK(back.sets[0].second == hesse.sets[0].second);
  CHECK(serialize_configuration(back) == text);

  CHECK_THROWS_AS(parse_configuration("points vars=2\n(1, 0)\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("points vars=2\nset A\n(1, 0)\n(2, 0)\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("points vars=2\nset A\n(1, 0)\nset B\n(1, 0)\n"), ParseError);
  CHECK_THROWS_AS(parse_configuration("points vars=2\nset A\n(0, 0)\n"), std::invalid_argument);
}
