#pragma once

#include <optional>
#include <vector>

#include "tlg/arith.hpp"
#include "tlg/matrix.hpp"

namespace tlg {

/// U * C * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inverse;
  IntMatrix V;
  IntMatrix D;
  IntVector invariant_factors;  // min(t, g) diagonal entries, zeros included
  std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& C);

/// Row-style Hermite normal form: T * C = H, T unimodular, H in row echelon
/// form with positive pivots and entries above each pivot reduced into
/// [0, pivot). Zero rows come last.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix T;
  std::size_t rank = 0;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& C);

/// Presentation of coker(C: Z^g -> Z^t) as Z^free_rank (+) (+)_i Z/torsion_i.
struct CokernelPresentation {
  std::size_t target_dim = 0;
  std::size_t free_rank = 0;
  IntVector torsion;             // invariant factors > 1
  IntMatrix projection;          // free_rank x t, rows in Hermite form
  IntMatrix section;             // t x free_rank, projection * section = I
  IntMatrix torsion_projection;  // torsion.size() x t, row i read mod torsion[i]
  IntMatrix torsion_section;     // t x torsion.size()

  bool torsion_free() const { return torsion.empty(); }

  IntVector project(const IntVector& v) const { return projection * v; }
  RatVector project(const RatVector& v) const { return projection * v; }
  /// Torsion coordinates reduced into [0, torsion_i).
  IntVector project_torsion(const IntVector& v) const;

  /// Throws TorsionError when torsion is present.
  void require_torsion_free(const char* context) const;
};

CokernelPresentation cokernel(const IntMatrix& C);

std::size_t rank(const IntMatrix& C);

/// Columns form a basis of {x in Z^g : C x = 0}, reduced to Hermite form.
IntMatrix kernel_basis(const IntMatrix& C);
/// Rows form a basis of {y in Z^t : y C = 0}, reduced to Hermite form.
IntMatrix left_kernel_basis(const IntMatrix& C);

/// gcd of the entries is 1. Throws InputError on the zero vector.
bool is_primitive(const IntVector& v);

/// Exact rational solution of C x = b (some solution), or nullopt.
std::optional<RatVector> solve_rational(const IntMatrix& C, const RatVector& b);

/// Integer solution of C x = b, or nullopt when b is not in the image of Z^g.
std::optional<IntVector> solve_integer(const IntMatrix& C, const IntVector& b);

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& C);

/// Inverse of a unimodular matrix. Throws InputError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& C);

/// A source vector whose projection is the given class. Free coordinates
/// carry C/Z coefficients; torsion coordinates must vanish because
/// Z/d (x) C/Z = 0 and a nonzero torsion part cannot be met by any lift.
LiftVector lift_class(const CokernelPresentation& P, const LiftVector& free_coordinates,
                      const IntVector& torsion_coordinates = {});

/// Real-coefficient version of lift_class for the free part.
RatVector lift_real(const CokernelPresentation& P, const RatVector& free_coordinates);

/// Cokernel coordinates of a lift: projection of re and im parts, re mod 1.
LiftVector class_of(const CokernelPresentation& P, const LiftVector& lift);

}  // namespace tlg
