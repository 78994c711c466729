#include "supertopo/lp.hpp"

#include <algorithm>
#include <map>

namespace supertopo {

namespace {

// Dense simplex tableau. Row `m` is the reduced-cost row; the last column is
// the right-hand side (for the cost row: minus the current objective value).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows + 1, std::vector<Rational>(cols + 1)) {}

  std::vector<Rational>& row(std::size_t i) { return t_[i]; }
  std::vector<Rational>& cost() { return t_.back(); }
  std::size_t rows() const { return t_.size() - 1; }
  std::size_t cols() const { return t_.front().size() - 1; }
  Rational& rhs(std::size_t i) { return t_[i].back(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& e : t_[r]) e /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  std::vector<std::size_t>& basis() { return basis_; }

  // Runs Bland's rule over columns < `allowed`. Returns false if unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(cost()[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = rhs(i) / t_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  Tableau tab(m, n + m);
  tab.basis().resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(lp.b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) tab.row(i)[j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
    tab.row(i)[n + i] = 1;
    tab.rhs(i) = flip ? Rational(-lp.b[i]) : lp.b[i];
    tab.basis()[i] = n + i;
  }
  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.cost()[j] -= tab.row(i)[j];
    tab.cost().back() -= tab.rhs(i);
  }
  tab.optimize(n + m);
  LpSolution sol;
  if (sgn(tab.cost().back()) != 0) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.row(i)[j]) != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      tab.erase_row(i);
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }
  // Phase 2 cost row.
  auto& cost = tab.cost();
  std::fill(cost.begin(), cost.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const Rational cb = lp.c[tab.basis()[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) cost[j] -= cb * tab.row(i)[j];
    cost.back() -= cb * tab.rhs(i);
  }
  if (!tab.optimize(n)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.value = -tab.cost().back();
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) sol.x[tab.basis()[i]] = tab.rhs(i);
  return sol;
}

std::optional<std::vector<Rational>> solve_linear_system(Matrix a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t r = rank;
    while (r < m && sgn(a[r][col]) == 0) ++r;
    if (r == m) continue;
    std::swap(a[r], a[rank]);
    std::swap(b[r], b[rank]);
    const Rational p = a[rank][col];
    for (auto& e : a[rank]) e /= p;
    b[rank] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  if (rank != n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return x;
}

namespace {

std::vector<VertexId> joint_support(std::span<const Point> p, std::span<const Point> q) {
  std::vector<VertexId> vs;
  for (auto pts : {p, q}) {
    for (const Point& pt : pts) {
      for (const auto& c : pt.coords()) vs.push_back(c.first);
    }
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Rows: one per vertex (sum lambda P - sum mu Q [- u+ + u-] = 0), then the
// two simplex constraints on lambda and mu.
LinearProgram hull_program(std::span<const Point> p, std::span<const Point> q,
                           const std::vector<VertexId>& vs, bool with_slack) {
  const std::size_t np = p.size(), nq = q.size(), nv = vs.size();
  const std::size_t cols = np + nq + (with_slack ? 2 * nv : 0);
  LinearProgram lp;
  lp.a.assign(nv + 2, std::vector<Rational>(cols));
  lp.b.assign(nv + 2, Rational(0));
  lp.c.assign(cols, Rational(0));
  for (std::size_t r = 0; r < nv; ++r) {
    for (std::size_t i = 0; i < np; ++i) lp.a[r][i] = p[i][vs[r]];
    for (std::size_t j = 0; j < nq; ++j) lp.a[r][np + j] = -q[j][vs[r]];
    if (with_slack) {
      lp.a[r][np + nq + r] = -1;
      lp.a[r][np + nq + nv + r] = 1;
    }
  }
  for (std::size_t i = 0; i < np; ++i) lp.a[nv][i] = 1;
  for (std::size_t j = 0; j < nq; ++j) lp.a[nv + 1][np + j] = 1;
  lp.b[nv] = 1;
  lp.b[nv + 1] = 1;
  if (with_slack) {
    for (std::size_t k = np + nq; k < cols; ++k) lp.c[k] = 1;
  }
  return lp;
}

}  // namespace

HullDistance hull_l1_distance(std::span<const Point> p, std::span<const Point> q) {
  const auto vs = joint_support(p, q);
  const LpSolution sol = solve_lp(hull_program(p, q, vs, true));
  HullDistance out;
  out.distance = sol.value;
  out.x = Point::combination(p, std::span<const Rational>(sol.x.data(), p.size()));
  out.y = Point::combination(q, std::span<const Rational>(sol.x.data() + p.size(), q.size()));
  return out;
}

Rational hull_l1_lower_bound(std::span<const Point> p, std::span<const Point> q) {
  struct Range {
    Rational lo, hi;
  };
  auto ranges = [](std::span<const Point> pts, const std::vector<VertexId>& vs) {
    std::vector<Range> r(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Rational c = pts[i][vs[k]];
        if (i == 0 || c < r[k].lo) r[k].lo = c;
        if (i == 0 || c > r[k].hi) r[k].hi = c;
      }
    }
    return r;
  };
  const auto vs = joint_support(p, q);
  const auto rp = ranges(p, vs);
  const auto rq = ranges(q, vs);
  Rational bound = 0;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (rp[k].lo > rq[k].hi) bound += rp[k].lo - rq[k].hi;
    if (rq[k].lo > rp[k].hi) bound += rq[k].lo - rp[k].hi;
  }
  return bound;
}

bool hulls_intersect(std::span<const Point> p, std::span<const Point> q) {
  const auto vs = joint_support(p, q);
  return solve_lp(hull_program(p, q, vs, false)).status == LpStatus::optimal;
}

}  // namespace supertopo
