// Randomized invariants. Every suite runs at least kInstances generated cases
// from a fixed seed, so failures reproduce.

#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tlg/structure.hpp"

using namespace tlg;
using namespace fixtures;

namespace {

constexpr int kInstances = 120;

IntVector random_primitive(oracle::Rng& rng, std::size_t n, long r) {
  while (true) {
    IntVector v = rng.vector(n, -r, r);
    if (!is_zero(v) && content(v) == 1) return v;
  }
}

// Rows positively spanning Z^n (e_i and -sum e_i) plus `extra` random primitive
// rows, with positive rational offsets, so 0 is interior and the set bounded.
Polyhedron random_polytope(oracle::Rng& rng, std::size_t n, std::size_t extra) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Int(0));
    e[i] = 1;
    rows.push_back(e);
  }
  rows.push_back(IntVector(n, Int(-1)));
  for (std::size_t k = 0; k < extra; ++k) rows.push_back(random_primitive(rng, n, 3));
  std::shuffle(rows.begin(), rows.end(), rng.engine);
  RatVector offsets;
  for (std::size_t i = 0; i < rows.size(); ++i) offsets.push_back(ratio(Int(rng.uniform(1, 6)), Int(rng.uniform(1, 3))));
  return Polyhedron(IntMatrix::from_rows(rows, n), offsets);
}

std::set<RatVector, LexLess> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

// Half-space key: primitive normal and offset divided by the content.
std::pair<IntVector, Rat> half_space(const IntVector& normal, const Rat& offset) {
  Int c = content(normal);
  IntVector p = normal;
  for (auto& x : p) x /= c;
  return {p, offset / Rat(c)};
}

ToricVarietyData random_base(oracle::Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return p1();
    case 1: return p1xp1();
    case 2: return ToricVarietyData(IntMatrix{{1, 0}, {0, 1}, {-1, -1}}, {}, true, true);
    default: return ToricVarietyData(IntMatrix{{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {}, true, true);
  }
}

}  // namespace

TEST_CASE("polar involution") {
  oracle::Rng rng(11);
  for (int t = 0; t < kInstances; ++t) {
    Polyhedron P = random_polytope(rng, t % 3 == 0 ? 3 : 2, rng.uniform(0, 4));
    CAPTURE(t);
    PointSet dual = polar(P);
    Polyhedron back = polar(dual);
    CHECK(canonical_form(back) == canonical_form(P));
    // pairing of dual vertices with P's vertices is >= -1
    for (const auto& w : dual.points)
      for (const auto& v : vertices_and_rays(P).vertices()) CHECK(dot(w, v) >= -1);
  }
}

TEST_CASE("translation lemma on vertex sets") {
  oracle::Rng rng(12);
  for (int t = 0; t < kInstances; ++t) {
    Polyhedron P = random_polytope(rng, t % 4 == 0 ? 3 : 2, rng.uniform(0, 4));
    RatVector xi0;
    for (std::size_t i = 0; i < P.dim(); ++i) xi0.push_back(ratio(Int(rng.uniform(-5, 5)), Int(rng.uniform(1, 4))));
    auto shifted = vertices_and_rays(translate(P, xi0)).vertices();
    std::vector<RatVector> expected;
    for (auto v : vertices_and_rays(P).vertices()) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += xi0[i];
      expected.push_back(v);
    }
    CAPTURE(t);
    CHECK(as_set(shifted) == as_set(expected));
    // the shifted point satisfies the translated inequalities with equal slacks
    auto V = vertices_and_rays(P).vertices();
    RatVector moved = V.front();
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += xi0[i];
    CHECK(translate(P, xi0).slacks(moved) == P.slacks(V.front()));
  }
}

TEST_CASE("smith normal form validity") {
  oracle::Rng rng(13);
  for (int t = 0; t < kInstances; ++t) {
    std::size_t r = rng.uniform(1, 4), c = rng.uniform(1, 4);
    IntMatrix C = rng.matrix(r, c, -6, 6);
    if (t % 10 == 0) C = IntMatrix(r, c);
    auto s = smith_normal_form(C);
    CAPTURE(t);
    CHECK(s.U * C * s.V == s.D);
    CHECK(abs(oracle::det(s.U)) == 1);
    CHECK(abs(oracle::det(s.V)) == 1);
    CHECK(oracle::is_diagonal(s.D));
    std::size_t k = std::min(r, c);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(s.D(i, i) >= 0);
      if (s.D(i, i) != 0) ++nonzero;
      if (i + 1 < k) {
        if (s.D(i, i) == 0) CHECK(s.D(i + 1, i + 1) == 0);
        else CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
      }
    }
    CHECK(nonzero == oracle::rank(C));
  }
}

TEST_CASE("lattice points against a box scan") {
  oracle::Rng rng(14);
  for (int t = 0; t < kInstances; ++t) {
    std::size_t n = t % 3 == 0 ? 3 : 2;
    Polyhedron P = random_polytope(rng, n, rng.uniform(0, 3));
    auto got = lattice_points(P);
    auto want = oracle::box_scan(P.normals, P.offsets, -20, 20);
    std::sort(got.begin(), got.end(), LexLess{});
    CAPTURE(t);
    CHECK(got == want);
  }
}

TEST_CASE("facet redundancy against a brute-force polygon") {
  oracle::Rng rng(15);
  for (int t = 0; t < kInstances; ++t) {
    Polyhedron P = random_polytope(rng, 2, rng.uniform(1, 5));
    std::vector<IntVector> rows = P.normals.row_list();
    RatVector offsets = P.offsets;
    // a scaled copy of a row and a row far outside, both redundant
    std::size_t pick = rng.uniform(0, rows.size() - 1);
    IntVector twice = rows[pick];
    for (auto& x : twice) x *= 2;
    rows.push_back(twice);
    offsets.push_back(offsets[pick] * 2);
    rows.push_back(random_primitive(rng, 2, 2));
    offsets.push_back(Rat(100));
    Polyhedron Q(IntMatrix::from_rows(rows, 2), offsets);

    auto verts = oracle::planar_vertices(rows, offsets);
    std::set<std::pair<IntVector, Rat>> facet_classes;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t tight = 0;
      for (const auto& v : verts)
        if (dot(rows[i], v) + offsets[i] == 0) ++tight;
      if (tight >= 2) facet_classes.insert(half_space(rows[i], offsets[i]));
    }
    auto F = facet_rows(Q);
    std::set<std::pair<IntVector, Rat>> got;
    for (auto i : F.facets) got.insert(half_space(rows[i], offsets[i]));
    CAPTURE(t);
    CHECK(F.facets.size() == facet_classes.size());
    CHECK(got == facet_classes);
    CHECK(F.facets.size() + F.redundant.size() == rows.size());
  }
}

TEST_CASE("double dual deletes exactly the dropped rows") {
  oracle::Rng rng(16);
  for (int t = 0; t < kInstances; ++t) {
    Polyhedron a = random_polytope(rng, 2, rng.uniform(0, 3));
    Polyhedron b = random_polytope(rng, 2, rng.uniform(0, 5));
    ToricLGModel M(LinearData(a.normals, imaginary_lift(a.offsets)), LinearData(b.normals, imaginary_lift(b.offsets)));
    DoubleDual dd = double_dual_diff(M);

    // oracle: B rows whose half-space is not a facet class, plus all but one
    // row of each facet class
    std::vector<IntVector> rows = b.normals.row_list();
    auto verts = oracle::planar_vertices(rows, b.offsets);
    std::map<std::pair<IntVector, Rat>, std::size_t> members;
    std::vector<bool> on_facet(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t tight = 0;
      for (const auto& v : verts)
        if (dot(rows[i], v) + b.offsets[i] == 0) ++tight;
      if (tight >= 2) {
        on_facet[i] = true;
        ++members[half_space(rows[i], b.offsets[i])];
      }
    }
    std::size_t expected_deleted = rows.size() - members.size();
    CAPTURE(t);
    CHECK(dd.deleted.size() == expected_deleted);
    for (auto i : dd.deleted)
      if (on_facet[i]) CHECK(members[half_space(rows[i], b.offsets[i])] > 1);
    // surviving rows in order form the double dual's B side
    std::vector<IntVector> kept;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (std::find(dd.deleted.begin(), dd.deleted.end(), i) == dd.deleted.end()) kept.push_back(rows[i]);
    CHECK(dd.model.B.matrix == IntMatrix::from_rows(kept, 2));
    CHECK(dd.model.A.matrix == a.normals);
  }
}

TEST_CASE("sigma-built models are regular") {
  oracle::Rng rng(17);
  for (int t = 0; t < kInstances; ++t) {
    ToricVarietyData base = random_base(rng);
    std::size_t c = rng.uniform(1, 2);
    std::vector<IntVector> D;
    for (std::size_t j = 0; j < c; ++j) D.push_back(rng.vector(base.num_rays(), 0, 2));
    SplitBundleData B(base, D);
    SectionSpec S = SectionSpec::generic_section(base.rank() <= 2 && t % 2 ? SectionOrder::Angular : SectionOrder::Lex);
    ToricLGModel M = build_lg(B, LiftVector(base.num_rays()), S);
    const IntMatrix& A = M.A.matrix;
    const IntMatrix& Bm = M.B.matrix;
    CAPTURE(t);
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t k = 0; k < Bm.rows(); ++k) {
        Int s = 0;
        for (std::size_t x = 0; x < A.cols(); ++x) s += A(i, x) * Bm(k, x);
        CHECK(s >= 0);
      }
    CHECK(regularity_check(A, Bm).regular);
  }
}

TEST_CASE("bundle verdicts agree with the facet comparison") {
  oracle::Rng rng(18);
  DualBlocks blocks = extract_blocks(ToricLGModel(elliptic_model().B, elliptic_model().A, elliptic_model().blocks->swapped()));
  int bundles = 0;
  for (int t = 0; t < kInstances; ++t) {
    RatVector alpha;
    for (int i = 0; i < 8; ++i) alpha.push_back(Rat(rng.uniform(1, 4)));
    auto report = kopasetic_check(blocks.d_prime, alpha);
    auto b = is_bundle(blocks, alpha, report);
    CAPTURE(t);
    if (b.is_bundle) {
      ++bundles;
      CHECK(b.facets_match_eprime);
    }
    if (b.vertex_facet_agreement) CHECK(*b.vertex_facet_agreement);
  }
  CHECK(bundles > 0);
}
