#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tlg/structure.hpp"

using namespace tlg;
using namespace fixtures;

namespace {

ToricLGModel swapped(const ToricLGModel& M) { return ToricLGModel(M.B, M.A, M.blocks->swapped()); }

DualBlocks elliptic_blocks() { return extract_blocks(swapped(elliptic_model())); }

DualBlocks threepoints_blocks() { return extract_blocks(swapped(threepoints_model())); }

// Certificate search: an integer functional h in [-r, r]^n with h.ray <= 0 that
// is strictly larger at v than at every other generator proves v is a vertex.
bool separating_functional(const std::vector<RatVector>& points, const IntVector& ray,
                           const RatVector& v, long r) {
  const std::size_t n = v.size();
  IntVector h(n, Int(-r));
  while (true) {
    if (dot(ray, to_rat(h)) <= 0) {
      Rat hv = dot(h, v);
      bool strict = true;
      for (const auto& q : points)
        if (q != v && dot(h, q) >= hv) strict = false;
      if (strict) return true;
    }
    std::size_t k = n;
    while (k > 0 && h[k - 1] == r) h[--k] = -r;
    if (k == 0) return false;
    ++h[k - 1];
  }
}

}  // namespace

TEST_CASE("blocks of the three-points dual") {
  auto b = threepoints_blocks();
  CHECK(b.d_prime == IntMatrix{{1}, {-1}, {-2}});
  CHECK(b.D_prime == IntMatrix{{1}, {1}, {1}});
  CHECK(b.unit_rows == std::vector<std::size_t>{3});
  CHECK(b.reassemble() == kMonW);
}

TEST_CASE("blocks of the elliptic dual") {
  auto b = elliptic_blocks();
  CHECK(b.d_prime.rows() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(b.d_prime.row(i) == ints({kMon(i, 0).get_si(), kMon(i, 1).get_si()}));
    CHECK(b.D_prime(i, 0) == 1);
  }
  CHECK(b.reassemble() == kMon);
}

TEST_CASE("blocks with P_D = {0}") {
  SplitBundleData B(p1xp1(), {ints({0, 0, 0, 0})});
  auto M = build_lg(B, LiftVector(4), SectionSpec::generic_section());
  auto b = extract_blocks(swapped(M));
  CHECK(b.d_prime.rows() == 0);
  CHECK(b.D_prime.rows() == 0);
  CHECK(b.reassemble() == IntMatrix{{0, 0, 1}});
}

TEST_CASE("block structure violations") {
  auto M = elliptic_model();
  CHECK_THROWS_AS(extract_blocks(ToricLGModel(M.B, M.A)), BlockStructureError);
  IntMatrix bad = kMon;
  bad(8, 0) = 1;
  ToricLGModel tampered(LinearData(bad, LiftVector(9)), M.A, M.blocks->swapped());
  CHECK_THROWS_AS(extract_blocks(tampered), BlockStructureError);
}

TEST_CASE("normalizing a full-length alpha'") {
  auto M = swapped(elliptic_model());
  auto b = extract_blocks(M);
  CHECK(normalize_alpha_prime(b, M, rats({1, 1, 1, 1, 1, 1, 1, 1, 0})) == RatVector(8, Rat(1)));
  CHECK(normalize_alpha_prime(b, M, rats({2, 2, 2, 2, 2, 2, 2, 2, 1})) == RatVector(8, Rat(1)));
  CHECK(normalize_alpha_prime(b, M, RatVector(8, Rat(3))) == RatVector(8, Rat(3)));
  CHECK_THROWS_AS(normalize_alpha_prime(b, M, rats({1, 1})), InputError);
}

TEST_CASE("suggested kopasetic lifts") {
  CHECK(suggest_kopasetic_lift(elliptic_blocks().d_prime) == RatVector(8, Rat(1)));
  CHECK(suggest_kopasetic_lift(IntMatrix{{1}, {-1}}) == rats({1, 1}));
  auto three = suggest_kopasetic_lift(threepoints_blocks().d_prime);
  REQUIRE(three);
  CHECK(kopasetic_check(threepoints_blocks().d_prime, *three).verdict);
  CHECK(interior_point(Polyhedron(threepoints_blocks().d_prime, *three)).has_interior());

  // 2x + 1 >= 0 is a non-primitive facet; doubling its offset merges it with x + 1 >= 0.
  IntMatrix d{{2}, {1}, {-1}};
  auto s = suggest_kopasetic_lift(d);
  REQUIRE(s);
  CHECK(*s == rats({2, 1, 1}));
  // Oracle: the lower bound of the segment is attained by the primitive row alone.
  CHECK(Rat(-(*s)[0]) / 2 == -(*s)[1]);
  CHECK(suggest_kopasetic_lift(IntMatrix{{2}, {-2}}) == std::nullopt);
}

TEST_CASE("Y' in the three-points first regime") {
  auto y = build_yprime(threepoints_blocks(), rats({0, 2, 5}));
  CHECK(y.div == IntMatrix{{1}, {-1}});
  CHECK(y.D_classes == std::vector<IntVector>{ints({1, 1})});
}

TEST_CASE("Y' for the anticanonical lift is the diamond") {
  auto y = build_yprime(elliptic_blocks(), RatVector(8, Rat(1)));
  CHECK(y.div == kDiamond);
  CHECK(y.coker.torsion == ints({2}));
  CHECK(y.D_classes == std::vector<IntVector>{ints({1, 1, 1, 1})});
  Polyhedron P(y.div, RatVector(4, Rat(1)));
  CHECK(is_reflexive(P));
  PointSet square{{rats({-1, -1}), rats({-1, 1}), rats({1, -1}), rats({1, 1})}, {}};
  CHECK(canonical_form(P) == canonical_form(polar(square)));
}

TEST_CASE("Y' for the very ample lift is the stop sign") {
  auto y = build_yprime(elliptic_blocks(), rats({2, 3, 2, 3, 2, 3, 2, 3}));
  CHECK(y.div.rows() == 8);
  CHECK(y.coker.torsion_free());
  CHECK(y.report.facet_indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(vertices_and_rays(Polyhedron(y.div, to_rat(apply_k(y.report, ints({2, 3, 2, 3, 2, 3, 2, 3})))))
            .vertices()
            .size() == 8);
}

TEST_CASE("Y' refuses a non-kopasetic lift") {
  CHECK_THROWS_AS(build_yprime(elliptic_blocks(), RatVector(8, Rat(0))), KopaseticError);
}

TEST_CASE("V_j for the anticanonical lift") {
  auto b = elliptic_blocks();
  auto vj = compute_Vj(b, RatVector(8, Rat(1)));
  CHECK(vj.path == VjPath::ScaledPoints);
  REQUIRE(vj.parts.size() == 1);
  // The corners of the square at height 1 are extreme; the edge midpoints are not.
  CHECK(vj.parts[0].vertex_rows == std::vector<std::size_t>{1, 3, 5, 7});
  const auto& pts = vj.parts[0].points;
  std::vector<RatVector> gens = pts;
  gens.push_back(rats({0, 0, 0}));
  for (std::size_t k : {1, 3, 5, 7}) CHECK(separating_functional(gens, ints({0, 0, 1}), pts[k], 3));
  for (std::size_t k : {0, 2, 4, 6}) {
    RatVector mid(3);
    for (std::size_t d = 0; d < 3; ++d) mid[d] = (pts[(k + 1) % 8][d] + pts[(k + 7) % 8][d]) / 2;
    CHECK(mid == pts[k]);
  }
}

TEST_CASE("V_j with a single generator") {
  DualBlocks b;
  b.base_cols = 1;
  b.parts = 1;
  b.d_prime = IntMatrix{{1}};
  b.D_prime = IntMatrix{{1}};
  b.part_of = {0};
  b.lattice_rows = {0};
  b.unit_rows = {1};
  auto vj = compute_Vj(b, rats({1}));
  CHECK(vj.parts[0].vertex_rows == std::vector<std::size_t>{0});
  auto report = is_bundle(b, rats({1}), kopasetic_check(b.d_prime, rats({1})));
  CHECK(report.is_bundle);
}

TEST_CASE("V_j takes the facet path on zero entries and rejects negative ones") {
  auto vj = compute_Vj(threepoints_blocks(), rats({0, 2, 5}));
  CHECK(vj.path == VjPath::Facets);
  CHECK(vj.parts[0].vertex_rows == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(compute_Vj(threepoints_blocks(), rats({-1, -1, 0})), InputError);
}

TEST_CASE("the anticanonical dual is the canonical bundle over the diamond") {
  auto b = elliptic_blocks();
  RatVector alpha(8, Rat(1));
  auto r = is_bundle(b, alpha, kopasetic_check(b.d_prime, alpha));
  CHECK(r.is_bundle);
  CHECK(r.failing.empty());
  CHECK(r.vertex_facet_agreement == std::optional<bool>(true));
  CHECK(r.facets_match_eprime);
  CHECK(r.eprime_div == IntMatrix{{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}, {0, 0, 1}});
  CHECK(r.x_local_cy);
  CHECK(r.e_local_cy);
}

TEST_CASE("the stop-sign dual") {
  auto b = elliptic_blocks();
  RatVector alpha = rats({2, 3, 2, 3, 2, 3, 2, 3});
  auto r = is_bundle(b, alpha, kopasetic_check(b.d_prime, alpha));
  CHECK(r.vertex_facet_agreement == std::optional<bool>(true));
  CHECK(r.is_bundle == r.facets_match_eprime);
}

TEST_CASE("the three-points dual is not a bundle") {
  auto b = threepoints_blocks();
  RatVector alpha = rats({0, 2, 5});
  auto r = is_bundle(b, alpha, kopasetic_check(b.d_prime, alpha));
  CHECK_FALSE(r.is_bundle);
  CHECK(r.failing == std::vector<std::size_t>{2});
  CHECK_FALSE(r.facets_match_eprime);
  CHECK(r.x_local_cy);
}

TEST_CASE("local Calabi-Yau") {
  CHECK(local_calabi_yau(kDivE));
  CHECK(local_calabi_yau(kMon));
  CHECK_FALSE(local_calabi_yau(IntMatrix{{2}, {2}}));
  CHECK_FALSE(local_calabi_yau(IntMatrix{{1}, {-1}}));
}

TEST_CASE("section test") {
  auto e = section_test(elliptic_model());
  CHECK(e.ok());
  CHECK(e.witness == std::vector<IntVector>{ints({0, 0})});
  CHECK(e.divisors == std::vector<IntVector>{ints({1, 1, 1, 1})});

  auto t = section_test(threepoints_model());
  CHECK(t.outcome == SectionOutcome::Absent);
  // Oracle: (2 + x) + (1 - x) = 3, so no xi gives (1, 1).
  for (long x = -2; x <= 1; ++x) CHECK_FALSE((2 + x == 1 && 1 - x == 1));

  auto split = section_test(SplitBundleData(p1xp1(), {ints({1, 0, 1, 0}), ints({0, 1, 0, 1})}));
  CHECK(split.ok());
  CHECK(split.witness == std::vector<IntVector>{ints({0, 0}), ints({0, 0})});

  auto shifted = section_test(SplitBundleData(p1xp1(), {ints({2, 1, 0, 1})}));
  CHECK(shifted.ok());
  CHECK(shifted.witness == std::vector<IntVector>{ints({-1, 0})});

  CHECK(section_test(SplitBundleData(p1(), {ints({1, 0})})).outcome == SectionOutcome::Absent);
  CHECK(section_test(elliptic_bundle(), 0).outcome == SectionOutcome::Truncated);
  CHECK_THROWS_AS(section_test(SplitBundleData(ToricVarietyData(IntMatrix{{1}}), {ints({1})})),
                  UnboundedError);
}

TEST_CASE("bundle read off a model") {
  auto B = bundle_of(threepoints_model());
  CHECK(B.base.div == IntMatrix{{1}, {-1}});
  CHECK(B.divisors == std::vector<IntVector>{ints({2, 1})});
}

TEST_CASE("double dual of the elliptic model") {
  auto M = with_b_alpha(elliptic_model(imaginary_lift(rats({1, 1, 1, 1}))),
                        rats({1, 1, 1, 1, 1, 1, 1, 1, 0}));
  auto dd = double_dual_diff(M);
  CHECK(dd.deleted == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(dd.model.A.matrix == M.A.matrix);
  CHECK(dd.model.A.lift == M.A.lift);
}

TEST_CASE("double dual when every row is a facet") {
  auto M = with_b_alpha(elliptic_model(imaginary_lift(rats({1, 1, 1, 1}))),
                        rats({2, 3, 2, 3, 2, 3, 2, 3, 0}));
  auto dd = double_dual_diff(M);
  CHECK(dd.deleted.empty());
  CHECK(dd.model.B.matrix == M.B.matrix);
}

TEST_CASE("double dual for three points") {
  auto M = with_b_alpha(threepoints_model(imaginary_lift(rats({1, 1}))), rats({0, 2, 5, 0}));
  auto dd = double_dual_diff(M);
  auto facets = facet_rows(Polyhedron(kMonW, rats({0, 2, 5, 0}))).facets;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < 4; ++i)
    if (!std::binary_search(facets.begin(), facets.end(), i)) complement.push_back(i);
  CHECK(dd.deleted == complement);
}

TEST_CASE("analysis with the suggested lift") {
  auto a = analyze(elliptic_model());
  CHECK(a.alpha_suggested);
  CHECK(a.alpha_prime == RatVector(8, Rat(1)));
  REQUIRE(a.yprime);
  CHECK(a.yprime->div == kDiamond);
  REQUIRE(a.bundle);
  CHECK(a.bundle->is_bundle);
  CHECK(a.section.ok());
  REQUIRE(a.double_dual);
  CHECK(a.double_dual->deleted == std::vector<std::size_t>{0, 2, 4, 6});
}

TEST_CASE("analysis of the three-points regimes") {
  auto M = threepoints_model();
  auto first = analyze(M, rats({0, 2, 5, 0}));
  CHECK_FALSE(first.alpha_suggested);
  REQUIRE(first.bundle);
  CHECK_FALSE(first.bundle->is_bundle);
  CHECK_FALSE(first.section.ok());
  auto negative = analyze(M, rats({-1, -1, 0, 0}));
  CHECK_FALSE(negative.bundle);
  CHECK_FALSE(negative.bundle_failure.empty());
}
