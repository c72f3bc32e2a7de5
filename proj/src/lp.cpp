#include "tlg/lp.hpp"

#include "tlg/errors.hpp"

namespace tlg {

namespace {

// Dense tableau in canonical form for the basis. Column `rhs` holds b.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_(m, RatVector(n + 1)), obj_(n + 1), basis_(m) {}

  Rat& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rat& rhs(std::size_t i) { return t_[i][n_]; }
  RatVector& objective() { return obj_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rat f = t_[i][c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    if (obj_[c] != 0) {
      Rat f = obj_[c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (t_[r][j] != 0) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Minimizes with reduced costs in obj_ restricted to columns < limit.
  // Returns false when unbounded.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][n_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<RatVector> t_;
  RatVector obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n)
    throw InputError("LP: sign-constraint vector length mismatch");
  if (!lp.objective.empty() && lp.objective.size() != n)
    throw InputError("LP: objective length mismatch");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != n) throw InputError("LP: constraint length mismatch");

  // Column layout: structural (free variables split into +/-), slacks, artificials.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < n; ++k) {
    plus[k] = cols++;
    bool nonneg = !lp.nonnegative.empty() && lp.nonnegative[k];
    if (!nonneg) minus[k] = cols++;
  }
  const std::size_t structural = cols;
  std::size_t slacks = 0;
  for (const auto& row : lp.rows)
    if (row.rel != Relation::Equal) ++slacks;
  const std::size_t m = lp.rows.size();
  const std::size_t art0 = structural + slacks;
  const std::size_t total = art0 + m;

  Tableau T(m, total);
  std::size_t s = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    for (std::size_t k = 0; k < n; ++k) {
      T.at(i, plus[k]) = row.coeffs[k];
      if (minus[k] != SIZE_MAX) T.at(i, minus[k]) = -row.coeffs[k];
    }
    if (row.rel == Relation::LessEqual) T.at(i, s++) = 1;
    if (row.rel == Relation::GreaterEqual) T.at(i, s++) = -1;
    T.rhs(i) = row.rhs;
    if (T.rhs(i) < 0) {
      for (std::size_t j = 0; j < art0; ++j) T.at(i, j) = -T.at(i, j);
      T.rhs(i) = -T.rhs(i);
    }
    T.at(i, art0 + i) = 1;
    T.basis()[i] = art0 + i;
  }

  // Phase 1: minimize the sum of artificials.
  auto& obj = T.objective();
  for (std::size_t j = 0; j <= total; ++j) obj[j] = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < art0; ++j) obj[j] -= T.at(i, j);
    obj[total] -= T.rhs(i);
  }
  T.run(total);
  if (obj[total] != 0) return {LPStatus::Infeasible, 0, {}};

  for (std::size_t i = 0; i < T.rows();) {
    if (T.basis()[i] < art0) {
      ++i;
      continue;
    }
    std::size_t c = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (T.at(i, j) != 0) {
        c = j;
        break;
      }
    if (c == art0) {
      T.drop_row(i);
    } else {
      T.pivot(i, c);
      ++i;
    }
  }

  // Phase 2 objective (always minimize internally).
  RatVector cost(art0, Rat(0));
  if (!lp.objective.empty()) {
    for (std::size_t k = 0; k < n; ++k) {
      Rat c = lp.maximize ? Rat(-lp.objective[k]) : lp.objective[k];
      cost[plus[k]] = c;
      if (minus[k] != SIZE_MAX) cost[minus[k]] = -c;
    }
  }
  for (std::size_t j = 0; j <= total; ++j) obj[j] = 0;
  for (std::size_t j = 0; j < art0; ++j) obj[j] = cost[j];
  for (std::size_t i = 0; i < T.rows(); ++i) {
    const Rat& cb = cost[T.basis()[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < art0; ++j) obj[j] -= cb * T.at(i, j);
    obj[total] -= cb * T.rhs(i);
  }
  if (!T.run(art0)) return {LPStatus::Unbounded, 0, {}};

  RatVector values(art0, Rat(0));
  for (std::size_t i = 0; i < T.rows(); ++i) values[T.basis()[i]] = T.rhs(i);
  LPResult result;
  result.status = LPStatus::Optimal;
  result.x.assign(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k) {
    result.x[k] = values[plus[k]];
    if (minus[k] != SIZE_MAX) result.x[k] -= values[minus[k]];
  }
  Rat value = -obj[total];
  result.value = lp.maximize ? Rat(-value) : value;
  return result;
}

}  // namespace tlg
