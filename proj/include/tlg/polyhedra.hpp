#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/arith.hpp"
#include "tlg/matrix.hpp"

namespace tlg {

/// {xi : normals * xi + offsets >= 0}.
struct Polyhedron {
  IntMatrix normals;
  RatVector offsets;

  Polyhedron() = default;
  Polyhedron(IntMatrix normals_, RatVector offsets_);

  std::size_t dim() const { return normals.cols(); }
  std::size_t num_rows() const { return normals.rows(); }
  RatVector slacks(const RatVector& xi) const;
  bool contains(const RatVector& xi) const;
  bool contains(const IntVector& xi) const { return contains(to_rat(xi)); }
};

/// conv(points) + cone(rays).
struct PointSet {
  std::vector<RatVector> points;
  std::vector<IntVector> rays;
};

enum class InteriorStatus { Interior, Degenerate, Empty };

struct InteriorResult {
  InteriorStatus status = InteriorStatus::Empty;
  RatVector point;  // strictly interior when status == Interior, else a member if nonempty
  Rat slack = 0;    // optimal common slack, capped at 1

  bool has_interior() const { return status == InteriorStatus::Interior; }
};

InteriorResult interior_point(const Polyhedron& P);

inline constexpr std::size_t kDropped = static_cast<std::size_t>(-1);

struct FacetResult {
  std::vector<std::size_t> facets;          // ascending original indices
  std::vector<std::size_t> representative;  // dedup survivor per row, kDropped for zero rows
  std::vector<std::size_t> redundant;       // rows not in `facets`
};

/// Irredundant rows after merging rows that define the same half-space.
/// Throws EmptyInteriorError when the interior is empty.
FacetResult facet_rows(const Polyhedron& P);

struct VertexResult {
  PointSet generators;  // minimal-face points and recession rays (lineality as +/- pairs)
  bool pointed = true;
  std::vector<RatVector> vertices() const { return pointed ? generators.points : std::vector<RatVector>{}; }
};

/// Dimension cap for subset enumeration; TLG_DIM_CAP overrides the default 8.
std::size_t dimension_cap();

VertexResult vertices_and_rays(const Polyhedron& P);

/// Polar of a polyhedron with 0 in its interior, as a point set (hull vertices
/// of {0} and nu_j / alpha_j). Throws NotInteriorError otherwise.
PointSet polar(const Polyhedron& P);
/// Polar of conv(points) + cone(rays), one row per nonzero point and ray.
Polyhedron polar(const PointSet& S);

/// H-representation of conv(points) + cone(rays) by facets.
Polyhedron convex_hull(const PointSet& S);

/// Hull vertices of a finite point set (input order, duplicates removed).
std::vector<RatVector> hull_vertices(const std::vector<RatVector>& points);

/// Order-independent form: facet rows as primitive normals with rescaled
/// offsets, sorted lexicographically by (normal, offset).
struct CanonicalForm {
  IntMatrix normals;
  RatVector offsets;
  bool operator==(const CanonicalForm& other) const = default;
};
CanonicalForm canonical_form(const Polyhedron& P);
Polyhedron to_polyhedron(const CanonicalForm& F);

/// Integer points of a bounded polyhedron. Throws UnboundedError otherwise.
std::vector<IntVector> lattice_points(const Polyhedron& P);

/// Lattice polytope with 0 interior whose polar is a lattice polytope.
bool is_reflexive(const Polyhedron& P);

/// Whether p is a 0-face of conv(S.points) + cone(S.rays).
bool vertex_test_with_ray(const PointSet& S, const RatVector& p);

/// The polyhedron xi0 + P.
Polyhedron translate(const Polyhedron& P, const RatVector& xi0);

/// Clockwise order starting from the positive second axis, ties broken by
/// distance from 0. One-dimensional points x are read as (x, 0); 0 sorts last.
bool angular_less(const IntVector& a, const IntVector& b);

}  // namespace tlg
