#include "tlg/exactlinalg.hpp"

#include <algorithm>
#include <numeric>

#include "tlg/errors.hpp"

namespace tlg {

namespace {

Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

// Truncating quotient, so |a - q*b| < |b|.
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct SmithWork {
  IntMatrix A, U, Ui, V;

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_columns(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_columns(a, b);
    V.swap_columns(a, b);
  }
  // row[target] += f * row[source]
  void add_row(std::size_t target, std::size_t source, const Int& f) {
    A.add_row_multiple(target, source, f);
    U.add_row_multiple(target, source, f);
    Ui.add_column_multiple(source, target, Int(-f));
  }
  void add_col(std::size_t target, std::size_t source, const Int& f) {
    A.add_column_multiple(target, source, f);
    V.add_column_multiple(target, source, f);
  }
  void negate_row(std::size_t i) {
    A.negate_row(i);
    U.negate_row(i);
    Ui.negate_column(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& C) {
  const std::size_t t = C.rows(), g = C.cols();
  SmithWork w{C, IntMatrix::identity(t), IntMatrix::identity(t), IntMatrix::identity(g)};
  IntMatrix& A = w.A;
  const std::size_t steps = std::min(t, g);
  std::size_t k = 0;

  for (; k < steps; ++k) {
    // Pivot: minimal absolute value in the trailing block, first in row-major order.
    std::size_t pi = t, pj = g;
    for (std::size_t i = k; i < t; ++i)
      for (std::size_t j = k; j < g; ++j)
        if (A(i, j) != 0 && (pi == t || abs_value(A(i, j)) < abs_value(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == t) break;
    w.swap_rows(k, pi);
    w.swap_cols(k, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = k + 1; i < t; ++i) {
        if (A(i, k) == 0) continue;
        w.add_row(i, k, Int(-tdiv(A(i, k), A(k, k))));
        if (A(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < g; ++j) {
        if (A(k, j) == 0) continue;
        w.add_col(j, k, Int(-tdiv(A(k, j), A(k, k))));
        if (A(k, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column k.
        std::size_t bi = k, bj = k;
        for (std::size_t i = k + 1; i < t; ++i)
          if (A(i, k) != 0 && abs_value(A(i, k)) < abs_value(A(bi, bj))) bi = i, bj = k;
        for (std::size_t j = k + 1; j < g; ++j)
          if (A(k, j) != 0 && abs_value(A(k, j)) < abs_value(A(bi, bj))) bi = k, bj = j;
        w.swap_rows(k, bi);
        w.swap_cols(k, bj);
        continue;
      }
      std::size_t bad_row = t;
      for (std::size_t i = k + 1; i < t && bad_row == t; ++i)
        for (std::size_t j = k + 1; j < g; ++j)
          if (fmod(A(i, j), A(k, k)) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == t) break;
      w.add_row(k, bad_row, Int(1));
    }
    if (A(k, k) < 0) w.negate_row(k);
  }

  SmithDecomposition out;
  out.rank = k;
  out.invariant_factors.assign(steps, Int(0));
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors[i] = A(i, i);
  out.D = std::move(w.A);
  out.U = std::move(w.U);
  out.U_inverse = std::move(w.Ui);
  out.V = std::move(w.V);
  return out;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& C) {
  const std::size_t m = C.rows(), n = C.cols();
  IntMatrix H = C;
  IntMatrix T = IntMatrix::identity(m);
  std::size_t p = 0;
  for (std::size_t j = 0; j < n && p < m; ++j) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = p; i < m; ++i)
        if (H(i, j) != 0 && (best == m || abs_value(H(i, j)) < abs_value(H(best, j)))) best = i;
      if (best == m) break;
      H.swap_rows(p, best);
      T.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        Int q = tdiv(H(i, j), H(p, j));
        H.add_row_multiple(i, p, Int(-q));
        T.add_row_multiple(i, p, Int(-q));
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(p, j) == 0) continue;
    if (H(p, j) < 0) {
      H.negate_row(p);
      T.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q = fdiv(H(i, j), H(p, j));
      H.add_row_multiple(i, p, Int(-q));
      T.add_row_multiple(i, p, Int(-q));
    }
    ++p;
  }
  return {std::move(H), std::move(T), p};
}

IntVector CokernelPresentation::project_torsion(const IntVector& v) const {
  IntVector out = torsion_projection * v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fmod(out[i], torsion[i]);
  return out;
}

void CokernelPresentation::require_torsion_free(const char* context) const {
  if (torsion_free()) return;
  std::string factors;
  for (const auto& d : torsion) factors += (factors.empty() ? "" : ",") + to_string(d);
  throw TorsionError(std::string(context) + ": cokernel has torsion Z/(" + factors +
                     "); only torsion-free class groups are supported");
}

CokernelPresentation cokernel(const IntMatrix& C) {
  const std::size_t t = C.rows();
  SmithDecomposition S = smith_normal_form(C);
  CokernelPresentation P;
  P.target_dim = t;
  P.free_rank = t - S.rank;

  std::vector<std::size_t> free_rows(P.free_rank), torsion_rows;
  std::iota(free_rows.begin(), free_rows.end(), S.rank);
  for (std::size_t i = 0; i < S.rank; ++i) {
    if (S.invariant_factors[i] > 1) {
      torsion_rows.push_back(i);
      P.torsion.push_back(S.invariant_factors[i]);
    }
  }

  IntMatrix raw = S.U.select_rows(free_rows);
  IntMatrix raw_section = S.U_inverse.select_columns(free_rows);
  HermiteDecomposition h = hermite_normal_form(raw);
  P.projection = h.H;
  P.section = raw_section * unimodular_inverse(h.T);

  P.torsion_projection = S.U.select_rows(torsion_rows);
  P.torsion_section = S.U_inverse.select_columns(torsion_rows);
  return P;
}

std::size_t rank(const IntMatrix& C) { return hermite_normal_form(C).rank; }

IntMatrix left_kernel_basis(const IntMatrix& C) {
  SmithDecomposition S = smith_normal_form(C);
  std::vector<std::size_t> rows(C.rows() - S.rank);
  std::iota(rows.begin(), rows.end(), S.rank);
  IntMatrix basis = S.U.select_rows(rows);
  return hermite_normal_form(basis).H;
}

IntMatrix kernel_basis(const IntMatrix& C) {
  IntMatrix rows = left_kernel_basis(C.transpose());
  if (rows.rows() == 0) return IntMatrix(C.cols(), 0);
  return rows.transpose();
}

bool is_primitive(const IntVector& v) {
  if (is_zero(v)) throw InputError("primitivity of the zero vector is undefined");
  return content(v) == 1;
}

std::optional<RatVector> solve_rational(const IntMatrix& C, const RatVector& b) {
  const std::size_t m = C.rows(), n = C.cols();
  if (b.size() != m) throw InputError("solve_rational: right-hand side length mismatch");
  std::vector<RatVector> M(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = C(i, j);
    M[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && M[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rat inv = 1 / M[r][j];
    for (std::size_t k = j; k <= n; ++k) M[r][k] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][j] == 0) continue;
      Rat f = M[i][j];
      for (std::size_t k = j; k <= n; ++k) M[i][k] -= f * M[r][k];
    }
    pivots.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  RatVector x(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = M[i][n];
  return x;
}

std::optional<IntVector> solve_integer(const IntMatrix& C, const IntVector& b) {
  if (b.size() != C.rows()) throw InputError("solve_integer: right-hand side length mismatch");
  SmithDecomposition S = smith_normal_form(C);
  IntVector ub = S.U * b;
  IntVector y(C.cols(), Int(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < S.rank) {
      if (fmod(ub[i], S.invariant_factors[i]) != 0) return std::nullopt;
      y[i] = ub[i] / S.invariant_factors[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return S.V * y;
}

Int determinant(const IntMatrix& C) {
  const std::size_t n = C.rows();
  if (C.cols() != n) throw InputError("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix M = C;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = v;
      }
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& C) {
  const std::size_t n = C.rows();
  if (C.cols() != n) throw InputError("inverse of a non-square matrix");
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rat(0));
    e[j] = 1;
    auto x = solve_rational(C, e);
    if (!x || !all_integral(*x)) throw InputError("matrix is not unimodular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i].get_num();
  }
  if (C * inv != IntMatrix::identity(n)) throw InputError("matrix is not unimodular");
  return inv;
}

LiftVector lift_class(const CokernelPresentation& P, const LiftVector& free_coordinates,
                      const IntVector& torsion_coordinates) {
  if (free_coordinates.size() != P.free_rank) {
    throw InputError("lift_class: expected " + std::to_string(P.free_rank) +
                     " free coordinates, got " + std::to_string(free_coordinates.size()));
  }
  if (!torsion_coordinates.empty()) {
    if (torsion_coordinates.size() != P.torsion.size())
      throw InputError("lift_class: torsion coordinate count mismatch");
    for (std::size_t i = 0; i < P.torsion.size(); ++i)
      if (fmod(torsion_coordinates[i], P.torsion[i]) != 0)
        throw TorsionError("lift_class: nonzero torsion coordinate has no lift with C/Z "
                           "coefficients");
  }
  RatVector re = P.section * real_parts(free_coordinates);
  RatVector im = P.section * imaginary_parts(free_coordinates);
  LiftVector out;
  out.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i], im[i]);
  return out;
}

RatVector lift_real(const CokernelPresentation& P, const RatVector& free_coordinates) {
  if (free_coordinates.size() != P.free_rank)
    throw InputError("lift_real: free coordinate count mismatch");
  return P.section * free_coordinates;
}

LiftVector class_of(const CokernelPresentation& P, const LiftVector& lift) {
  if (lift.size() != P.target_dim) throw InputError("class_of: lift length mismatch");
  RatVector re = P.projection * real_parts(lift);
  RatVector im = P.projection * imaginary_parts(lift);
  LiftVector out;
  for (std::size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i], im[i]);
  return out;
}

}  // namespace tlg
