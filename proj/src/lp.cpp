#include "fhtw/lp.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>

namespace fhtw {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::NumericalFailure: return "numerical_failure";
  }
  return "?";
}

namespace {

std::mutex stats_mutex;
LpStats stats;

void record(const LpSolution<double>& s) {
  std::lock_guard<std::mutex> lock(stats_mutex);
  ++stats.solves;
  if (s.status == LpStatus::NumericalFailure) ++stats.failures;
  if (s.status != LpStatus::Optimal) return;
  stats.max_duality_residual = std::max(stats.max_duality_residual, s.duality_residual);
  stats.max_gap = std::max(stats.max_gap, s.gap);
  stats.max_primal_residual = std::max(stats.max_primal_residual, s.primal_residual);
}

template <typename S>
void record(const LpSolution<S>& s) {
  LpSolution<double> d;
  d.status = s.status;
  d.duality_residual = static_cast<double>(s.duality_residual);
  d.gap = static_cast<double>(s.gap);
  d.primal_residual = static_cast<double>(s.primal_residual);
  record(d);
}

// Bounded-variable primal simplex on the compact tableau x_B = beta - T x_N.
template <typename S>
class Simplex {
 public:
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Vector<S>;

  explicit Simplex(const LinearProgram<S>& p) : p_(p) {}

  LpSolution<S> run();

 private:
  enum class Phase { One, Two };

  bool iterate(Phase phase, bool allow_perturb);
  bool solve_phase(Phase phase);
  void perturb();
  void unperturb();
  bool dual_cleanup();
  void price_from_scratch(const Vec& cost);
  int choose_entering(bool bland);
  std::uint64_t next_random() {
    rng_ ^= rng_ << 13;
    rng_ ^= rng_ >> 7;
    rng_ ^= rng_ << 17;
    return rng_;
  }
  void pivot(int r, int q);

  const LinearProgram<S>& p_;
  int n_ = 0, m_ = 0, total_ = 0;
  Vec lo_, hi_, val_;
  std::vector<int> basic_;      // row -> variable
  std::vector<int> nonbasic_;   // column -> variable
  std::vector<int> where_;      // variable -> row (>=0) or -(column+1)
  Mat t_;
  Vec d_;
  long pivots_ = 0, cap_ = 0;
  bool failed_ = false, unbounded_ = false;
  // fixed-seed xorshift; drives random pivoting while the basis stalls
  std::uint64_t rng_ = 0x2545f4914f6cdd1dULL;
  long eligible_ = 0;
  // bounds before the stall perturbation widened them
  Vec base_lo_, base_hi_;
  bool perturbed_ = false;

  static constexpr S kPivTol = S(1e-9);
  static constexpr S kOptTol = S(1e-9);
  static constexpr S kFeasTol = S(1e-7);
  static constexpr S kHarris = S(1e-9);
};

template <typename S>
void Simplex<S>::price_from_scratch(const Vec& cost) {
  const int nn = static_cast<int>(nonbasic_.size());
  Vec cb(m_);
  for (int i = 0; i < m_; ++i) cb(i) = cost(basic_[i]);
  d_.resize(nn);
  for (int j = 0; j < nn; ++j) d_(j) = cost(nonbasic_[j]) - cb.dot(t_.col(j));
}

template <typename S>
int Simplex<S>::choose_entering(bool bland) {
  int best = -1;
  S best_score = 0;
  eligible_ = 0;
  for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j) {
    int v = nonbasic_[j];
    if (hi_(v) - lo_(v) <= S(0)) continue;
    bool at_upper = std::isfinite(static_cast<double>(hi_(v))) && val_(v) >= hi_(v);
    S score = 0;
    if (!at_upper && d_(j) < -kOptTol) score = -d_(j);
    else if (at_upper && d_(j) > kOptTol) score = d_(j);
    else continue;
    if (bland) {
      // uniform among eligible columns, reservoir style
      if (++eligible_ == 1 || next_random() % static_cast<std::uint64_t>(eligible_) == 0) best = j;
    } else if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

template <typename S>
void Simplex<S>::pivot(int r, int q) {
  const S p = t_(r, q);
  Vec colq = t_.col(q);
  Eigen::Matrix<S, 1, Eigen::Dynamic> rnew = t_.row(r) / p;
  rnew(q) = S(1) / p;
  t_.col(q).setZero();
  colq(r) = 0;
  t_.noalias() -= colq * rnew;
  t_.row(r) = rnew;
  const S dq = d_(q);
  d_(q) = 0;
  d_.noalias() -= dq * rnew.transpose();

  int leaving = basic_[r], entering = nonbasic_[q];
  basic_[r] = entering;
  nonbasic_[q] = leaving;
  where_[entering] = r;
  where_[leaving] = -(q + 1);
  ++pivots_;
}

template <typename S>
bool Simplex<S>::iterate(Phase phase, bool allow_perturb) {
  int degenerate_run = 0;
  bool bland = false;
  while (true) {
    if (pivots_ > cap_) {
      failed_ = true;
      return false;
    }
    int q = choose_entering(bland);
    if (q < 0) return true;
    int var_q = nonbasic_[q];
    bool at_upper = std::isfinite(static_cast<double>(hi_(var_q))) && val_(var_q) >= hi_(var_q);
    S dir = at_upper ? S(-1) : S(1);

    // Harris two-pass ratio test: relaxed bound first, then the largest pivot under it
    auto slack_of = [&](int i, S alpha, S& room) {
      int vb = basic_[i];
      if (alpha > kPivTol) {
        if (!std::isfinite(static_cast<double>(lo_(vb)))) return false;
        room = val_(vb) - lo_(vb);
      } else if (alpha < -kPivTol) {
        if (!std::isfinite(static_cast<double>(hi_(vb)))) return false;
        room = hi_(vb) - val_(vb);
      } else {
        return false;
      }
      room = std::max(room, S(0));
      return true;
    };
    S relaxed = std::numeric_limits<S>::infinity();
    for (int i = 0; i < m_; ++i) {
      S alpha = dir * t_(i, q), room;
      if (slack_of(i, alpha, room)) relaxed = std::min(relaxed, (room + kHarris) / std::abs(alpha));
    }
    S t_best = hi_(var_q) - lo_(var_q);  // bound flip
    int r_best = -1;
    S alpha_best = 0;
    if (relaxed < t_best) {
      long ties = 0;
      for (int i = 0; i < m_; ++i) {
        S alpha = dir * t_(i, q), room;
        if (!slack_of(i, alpha, room) || room / std::abs(alpha) > relaxed) continue;
        bool take;
        if (bland) take = std::abs(alpha) >= S(1e-3) * std::abs(alpha_best) &&
                          (++ties == 1 || next_random() % static_cast<std::uint64_t>(ties) == 0);
        else take = std::abs(alpha) > std::abs(alpha_best);
        if (take) {
          r_best = i;
          alpha_best = alpha;
        }
      }
      S room = 0;
      slack_of(r_best, alpha_best, room);
      t_best = room / std::abs(alpha_best);
    }
    if (!std::isfinite(static_cast<double>(t_best))) {
      if (phase == Phase::Two) unbounded_ = true;
      else failed_ = true;
      return false;
    }

    for (int i = 0; i < m_; ++i) val_(basic_[i]) -= dir * t_best * t_(i, q);
    val_(var_q) += dir * t_best;

    if (r_best < 0) {
      // bound flip, basis unchanged
      val_(var_q) = at_upper ? lo_(var_q) : hi_(var_q);
      degenerate_run = 0;
      bland = false;
      continue;
    }
    int leaving = basic_[r_best];
    val_(leaving) = alpha_best > 0 ? lo_(leaving) : hi_(leaving);
    pivot(r_best, q);

    if (t_best <= S(1e-12)) {
      if (++degenerate_run > 50) {
        if (allow_perturb) {
          perturb();
          degenerate_run = 0;
        } else {
          bland = true;
        }
      }
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

template <typename S>
void Simplex<S>::perturb() {
  if (!perturbed_) {
    base_lo_ = lo_;
    base_hi_ = hi_;
    perturbed_ = true;
  }
  for (int i = 0; i < m_; ++i) {
    int v = basic_[i];
    if (v >= n_ + m_ || hi_(v) - lo_(v) <= S(0)) continue;
    S eps = S(1e-7) * (S(1) + S(9) * S(next_random() % 1000) / S(1000));
    if (std::isfinite(static_cast<double>(lo_(v))) && val_(v) - lo_(v) <= S(1e-9))
      lo_(v) -= eps * (S(1) + std::abs(lo_(v)));
    else if (std::isfinite(static_cast<double>(hi_(v))) && hi_(v) - val_(v) <= S(1e-9))
      hi_(v) += eps * (S(1) + std::abs(hi_(v)));
  }
}

template <typename S>
void Simplex<S>::unperturb() {
  for (int v = 0; v < total_; ++v) {
    if (lo_(v) == base_lo_(v) && hi_(v) == base_hi_(v)) continue;
    bool at_lo = val_(v) <= lo_(v);
    lo_(v) = base_lo_(v);
    hi_(v) = base_hi_(v);
    if (where_[v] >= 0) continue;
    S target = at_lo ? lo_(v) : hi_(v);
    S delta = target - val_(v);
    if (delta == S(0)) continue;
    int c = -where_[v] - 1;
    for (int i = 0; i < m_; ++i) val_(basic_[i]) -= t_(i, c) * delta;
    val_(v) = target;
  }
  perturbed_ = false;
}

// bounded dual simplex: restores primal feasibility while keeping the reduced costs
template <typename S>
bool Simplex<S>::dual_cleanup() {
  const S tol = S(1e-9);
  while (true) {
    if (pivots_ > cap_) return false;
    int r = -1;
    S worst = tol;
    for (int i = 0; i < m_; ++i) {
      int v = basic_[i];
      S viol = std::max(lo_(v) - val_(v), val_(v) - hi_(v));
      if (viol > worst) {
        worst = viol;
        r = i;
      }
    }
    if (r < 0) return true;
    int vr = basic_[r];
    S target = val_(vr) < lo_(vr) ? lo_(vr) : hi_(vr);
    S db = target - val_(vr);
    S sgn = db > 0 ? S(1) : S(-1);
    // Harris two-pass: bound the step with a small dual tolerance, then take the largest pivot
    S bound = std::numeric_limits<S>::infinity();
    auto eligible = [&](int j, S& tr) {
      int v = nonbasic_[j];
      if (hi_(v) - lo_(v) <= S(0)) return false;
      bool at_upper = std::isfinite(static_cast<double>(hi_(v))) && val_(v) >= hi_(v);
      tr = t_(r, j);
      return tr * (at_upper ? S(-1) : S(1)) * sgn < -kPivTol;
    };
    for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j) {
      S tr;
      if (eligible(j, tr)) bound = std::min(bound, (std::abs(d_(j)) + kOptTol) / std::abs(tr));
    }
    int q = -1;
    S best_t = 0;
    for (int j = 0; j < static_cast<int>(nonbasic_.size()); ++j) {
      S tr;
      if (!eligible(j, tr) || std::abs(d_(j)) / std::abs(tr) > bound) continue;
      if (std::abs(tr) > best_t) {
        q = j;
        best_t = std::abs(tr);
      }
    }
    if (q < 0) return false;
    int vq = nonbasic_[q];
    S dx = -db / t_(r, q);
    for (int i = 0; i < m_; ++i) val_(basic_[i]) -= t_(i, q) * dx;
    val_(vq) += dx;
    val_(vr) = target;
    if (val_(vq) < lo_(vq) - S(1e-7) || val_(vq) > hi_(vq) + S(1e-7)) return false;
    pivot(r, q);
  }
}

template <typename S>
bool Simplex<S>::solve_phase(Phase phase) {
  for (int round = 0; round < 4; ++round) {
    bool last = round == 3;
    bool ok = iterate(phase, !last);
    if (!perturbed_) return ok;
    unperturb();
    if (failed_) return false;
    if (!dual_cleanup()) {
      failed_ = true;
      return false;
    }
    unbounded_ = false;
  }
  return !failed_ && !unbounded_;
}

template <typename S>
LpSolution<S> Simplex<S>::run() {
  n_ = p_.num_vars();
  m_ = p_.num_rows();
  if (p_.lower.size() != n_ || p_.upper.size() != n_)
    throw std::invalid_argument("solve_lp: bound vectors do not match objective");
  for (const auto& row : p_.rows) {
    if (!std::isfinite(static_cast<double>(row.rhs))) throw std::invalid_argument("solve_lp: rhs not finite");
    for (auto [j, a] : row.terms)
      if (j < 0 || j >= n_) throw std::invalid_argument("solve_lp: row arity mismatch");
  }
  for (int j = 0; j < n_; ++j) {
    if (!std::isfinite(static_cast<double>(p_.lower(j))))
      throw std::invalid_argument("solve_lp: free variables are not supported");
    if (p_.lower(j) > p_.upper(j)) {
      LpSolution<S> out;
      out.status = LpStatus::Infeasible;
      return out;
    }
  }

  const S inf = std::numeric_limits<S>::infinity();
  std::vector<S> residual(m_);
  std::vector<char> needs_art(m_, 0);
  int k = 0;

  // structural, slack, artificial
  Vec x0 = p_.lower;
  for (int i = 0; i < m_; ++i) {
    S ax = 0;
    for (auto [j, a] : p_.rows[i].terms) ax += a * x0(j);
    residual[i] = p_.rows[i].rhs - ax;
  }
  auto slack_lo = [&](int i) { return p_.rows[i].sense == Sense::Ge ? -inf : S(0); };
  auto slack_hi = [&](int i) { return p_.rows[i].sense == Sense::Le ? inf : S(0); };
  for (int i = 0; i < m_; ++i) {
    if (residual[i] < slack_lo(i) - kFeasTol || residual[i] > slack_hi(i) + kFeasTol) {
      needs_art[i] = 1;
      ++k;
    }
  }
  total_ = n_ + m_ + k;
  lo_.resize(total_);
  hi_.resize(total_);
  val_.resize(total_);
  lo_.head(n_) = p_.lower;
  hi_.head(n_) = p_.upper;
  val_.head(n_) = x0;
  where_.assign(total_, 0);

  std::vector<int> art_of(m_, -1);
  std::vector<S> sigma(m_, 1);
  basic_.assign(m_, -1);
  nonbasic_.clear();
  for (int j = 0; j < n_; ++j) nonbasic_.push_back(j);
  int next_art = n_ + m_;
  for (int i = 0; i < m_; ++i) {
    int s = n_ + i;
    lo_(s) = slack_lo(i);
    hi_(s) = slack_hi(i);
    if (!needs_art[i]) {
      val_(s) = std::clamp(residual[i], lo_(s), hi_(s));
      basic_[i] = s;
    } else {
      S c = std::clamp(residual[i], lo_(s), hi_(s));
      val_(s) = c;
      nonbasic_.push_back(s);
      int a = next_art++;
      art_of[i] = a;
      sigma[i] = residual[i] - c > 0 ? S(1) : S(-1);
      lo_(a) = 0;
      hi_(a) = inf;
      val_(a) = std::abs(residual[i] - c);
      basic_[i] = a;
    }
  }
  const int nn = static_cast<int>(nonbasic_.size());
  for (int c = 0; c < nn; ++c) where_[nonbasic_[c]] = -(c + 1);
  for (int i = 0; i < m_; ++i) where_[basic_[i]] = i;

  t_ = Mat::Zero(m_, nn);
  for (int i = 0; i < m_; ++i) {
    S scale = needs_art[i] ? S(1) / sigma[i] : S(1);
    for (auto [j, a] : p_.rows[i].terms) t_(i, j) += scale * a;
  }
  for (int c = n_; c < nn; ++c) {
    int i = nonbasic_[c] - n_;
    t_(i, c) = S(1) / sigma[i];
  }

  cap_ = 50L * (m_ + n_);
  if (k > 0) {
    Vec cost = Vec::Zero(total_);
    for (int i = 0; i < m_; ++i)
      if (art_of[i] >= 0) cost(art_of[i]) = 1;
    price_from_scratch(cost);
    solve_phase(Phase::One);
    LpSolution<S> out;
    if (failed_) {
      out.status = LpStatus::NumericalFailure;
      out.pivots = pivots_;
      return out;
    }
    S infeas = 0;
    for (int i = 0; i < m_; ++i)
      if (art_of[i] >= 0) infeas += val_(art_of[i]);
    if (infeas > kFeasTol) {
      out.status = LpStatus::Infeasible;
      out.pivots = pivots_;
      return out;
    }
    for (int i = 0; i < m_; ++i)
      if (art_of[i] >= 0) {
        int a = art_of[i];
        hi_(a) = 0;
        if (where_[a] < 0) val_(a) = 0;
      }
  }

  Vec cost = Vec::Zero(total_);
  cost.head(n_) = p_.objective;
  price_from_scratch(cost);
  solve_phase(Phase::Two);

  LpSolution<S> out;
  out.pivots = pivots_;
  if (failed_) {
    out.status = LpStatus::NumericalFailure;
    return out;
  }
  if (unbounded_) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.x = val_.head(n_);
  for (int j = 0; j < n_; ++j) out.x(j) = std::clamp(out.x(j), p_.lower(j), p_.upper(j));
  out.objective = p_.objective.dot(out.x);

  // primal check against the original rows
  S worst = 0;
  for (const auto& row : p_.rows) {
    S ax = 0;
    for (auto [j, a] : row.terms) ax += a * out.x(j);
    S viol = 0;
    if (row.sense != Sense::Le) viol = std::max(viol, row.rhs - ax);
    if (row.sense != Sense::Ge) viol = std::max(viol, ax - row.rhs);
    worst = std::max(worst, viol / (S(1) + std::abs(row.rhs)));
  }
  out.primal_residual = worst;

  // duals from slack reduced costs, sign-clamped so the bound below is valid
  out.duals = Vec::Zero(m_);
  for (int i = 0; i < m_; ++i) {
    int s = n_ + i;
    if (where_[s] >= 0) continue;
    S pi = -d_(-where_[s] - 1);
    if (p_.rows[i].sense == Sense::Ge) pi = std::max(pi, S(0));
    if (p_.rows[i].sense == Sense::Le) pi = std::min(pi, S(0));
    out.duals(i) = pi;
  }
  Vec reduced = p_.objective;
  S dual = 0;
  for (int i = 0; i < m_; ++i) {
    const S pi = out.duals(i);
    if (pi == S(0)) continue;
    dual += pi * p_.rows[i].rhs;
    for (auto [j, a] : p_.rows[i].terms) reduced(j) -= pi * a;
  }
  for (int j = 0; j < n_; ++j) {
    if (reduced(j) > 0) dual += reduced(j) * p_.lower(j);
    else if (reduced(j) < 0) {
      if (!std::isfinite(static_cast<double>(p_.upper(j)))) {
        if (reduced(j) < -kFeasTol) dual = -inf;
      } else {
        dual += reduced(j) * p_.upper(j);
      }
    }
  }
  out.dual_objective = dual;
  out.duality_residual = std::max(S(0), dual - out.objective);
  out.gap = out.objective - dual;

  const S scale = S(1) + std::abs(out.objective);
  if (worst > kFeasTol || out.gap > S(1e-6) * scale || out.duality_residual > S(1e-6) * scale)
    out.status = LpStatus::NumericalFailure;
  else
    out.status = LpStatus::Optimal;
  return out;
}

}  // namespace

template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& p) {
  Simplex<Scalar> s(p);
  LpSolution<Scalar> out = s.run();
  record(out);
  return out;
}

template <typename Scalar>
LpSolution<Scalar> solve_lp_restricted(const LinearProgram<Scalar>& p, const std::vector<int>& zero_vars) {
  LinearProgram<Scalar> q = p;
  for (int j : zero_vars) {
    if (j < 0 || j >= q.num_vars()) throw std::invalid_argument("solve_lp_restricted: bad index");
    q.lower(j) = 0;
    q.upper(j) = 0;
  }
  LpSolution<Scalar> out = solve_lp(q);
  if (out.x.size() == q.num_vars())
    for (int j : zero_vars) out.x(j) = 0;
  return out;
}

LpStats lp_stats() {
  std::lock_guard<std::mutex> lock(stats_mutex);
  return stats;
}

void reset_lp_stats() {
  std::lock_guard<std::mutex> lock(stats_mutex);
  stats = LpStats{};
}

std::string dump_lp(const LinearProgram<double>& p) {
  std::ostringstream os;
  char buf[64];
  os << "min";
  for (int j = 0; j < p.num_vars(); ++j) {
    std::snprintf(buf, sizeof buf, " %+.9f x%d", p.objective(j), j);
    os << buf;
  }
  os << '\n';
  for (const auto& row : p.rows) {
    for (auto [j, a] : row.terms) {
      std::snprintf(buf, sizeof buf, " %+.9f x%d", a, j);
      os << buf;
    }
    os << (row.sense == Sense::Ge ? " >= " : row.sense == Sense::Le ? " <= " : " = ");
    std::snprintf(buf, sizeof buf, "%.9f", row.rhs);
    os << buf << '\n';
  }
  for (int j = 0; j < p.num_vars(); ++j) {
    std::snprintf(buf, sizeof buf, "%.9f <= x%d <= %.9f\n", p.lower(j), j, p.upper(j));
    os << buf;
  }
  return os.str();
}

template LpSolution<double> solve_lp(const LinearProgram<double>&);
template LpSolution<long double> solve_lp(const LinearProgram<long double>&);
template LpSolution<double> solve_lp_restricted(const LinearProgram<double>&, const std::vector<int>&);
template LpSolution<long double> solve_lp_restricted(const LinearProgram<long double>&, const std::vector<int>&);

}  // namespace fhtw
