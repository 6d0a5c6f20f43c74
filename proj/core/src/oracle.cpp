#include "beamforge/oracle.hpp"

#if BEAMFORGE_HAVE_FLOAT128
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>
#endif
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace beamforge {

namespace {

#if BEAMFORGE_HAVE_FLOAT128
using Wide = boost::multiprecision::float128;
#else
using Wide = long double;
#endif

// Truncated modal system with unknowns z = (alpha, gamma) on the modes whose
// eigenvalues are given.
template <typename T>
class ModalSystemT {
public:
  using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

  ModalSystemT(const Params& p, std::vector<double> eigenvalues)
      : beta_(p.beta), varrho_(p.varrho), k_(p.k), lambda_(static_cast<Eigen::Index>(eigenvalues.size())) {
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) lambda_[static_cast<Eigen::Index>(i)] = eigenvalues[i];
  }

  int modes() const { return static_cast<int>(lambda_.size()); }

  void evaluate(const Vec& z, Vec& f) const {
    const int n = modes();
    const auto alpha = z.head(n);
    const auto gamma = z.tail(n);
    const T c_u = beta_ + varrho_ * (lambda_.array() * alpha.array().square()).sum();
    const T c_v = beta_ + varrho_ * (lambda_.array() * gamma.array().square()).sum();
    f.resize(2 * n);
    for (int i = 0; i < n; ++i) {
      const T l = lambda_[i];
      const T coupling = k_ * (alpha[i] - gamma[i]);
      f[i] = l * l * alpha[i] + c_u * l * alpha[i] + coupling;
      f[n + i] = l * l * gamma[i] + c_v * l * gamma[i] - coupling;
    }
  }

  // dC_u/dalpha_m = 2 varrho lambda_m alpha_m couples every row to every alpha
  // (a rank-one term on top of the diagonal).
  void jacobian(const Vec& z, Mat& jac) const {
    const int n = modes();
    const auto alpha = z.head(n);
    const auto gamma = z.tail(n);
    const T c_u = beta_ + varrho_ * (lambda_.array() * alpha.array().square()).sum();
    const T c_v = beta_ + varrho_ * (lambda_.array() * gamma.array().square()).sum();
    jac.setZero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      const T l = lambda_[i];
      for (int m = 0; m < n; ++m) {
        jac(i, m) = l * alpha[i] * 2 * varrho_ * lambda_[m] * alpha[m];
        jac(n + i, n + m) = l * gamma[i] * 2 * varrho_ * lambda_[m] * gamma[m];
      }
      jac(i, i) += l * l + c_u * l + k_;
      jac(i, n + i) = -k_;
      jac(n + i, i) = -k_;
      jac(n + i, n + i) += l * l + c_v * l + k_;
    }
  }

  T lambda(int i) const { return lambda_[i]; }

private:
  T beta_, varrho_, k_;
  Vec lambda_;
};

using ModalSystem = ModalSystemT<double>;
using Vec = ModalSystem::Vec;
using Mat = ModalSystem::Mat;

std::vector<double> leading_eigenvalues(const Spectrum& spec, int modes) {
  std::vector<double> out;
  for (int n = 1; n <= modes; ++n) out.push_back(spec.eigenvalue(n));
  return out;
}

// Newton in extended precision on the active block. Near singular points of
// the EE continua the residual is flat to second order, so double precision
// cannot pin the root down beyond about sqrt(eps); the wide type can.
Vec refine(const Params& p, const Spectrum& spec, const Vec& z, int modes, double scale,
           int max_steps) {
  std::vector<int> active;
  for (int m = 0; m < modes; ++m) {
    if (z[m] != 0.0 || z[modes + m] != 0.0) active.push_back(m);
  }
  if (active.empty()) return z;
  std::vector<double> eig;
  for (int m : active) eig.push_back(spec.eigenvalue(m + 1));
  const ModalSystemT<Wide> sys(p, eig);
  using WVec = ModalSystemT<Wide>::Vec;
  using WMat = ModalSystemT<Wide>::Mat;
  const int a = static_cast<int>(active.size());
  WVec y(2 * a), f;
  for (int i = 0; i < a; ++i) {
    y[i] = z[active[static_cast<std::size_t>(i)]];
    y[a + i] = z[modes + active[static_cast<std::size_t>(i)]];
  }
  const Wide floor = Wide(scale) * std::numeric_limits<Wide>::epsilon() * 16;
  // Full steps, keeping the best iterate: near a degenerate point of a
  // continuum the merit is not monotone along the Newton path.
  WMat jac;
  WVec best = y;
  sys.evaluate(y, f);
  Wide best_merit = f.squaredNorm();
  const Wide limit = Wide(1e3) * y.cwiseAbs().maxCoeff() + 1;
  using std::sqrt;
  for (int it = 0; it < max_steps && sqrt(best_merit) > floor; ++it) {
    sys.jacobian(y, jac);
    Eigen::CompleteOrthogonalDecomposition<WMat> cod(jac);
    y += cod.solve(-f);
    if (!y.allFinite() || y.cwiseAbs().maxCoeff() > limit) break;
    sys.evaluate(y, f);
    const Wide merit = f.squaredNorm();
    if (merit < best_merit) {
      best_merit = merit;
      best = y;
    }
  }
  y = best;
  Vec out = z;
  for (int i = 0; i < a; ++i) {
    out[active[static_cast<std::size_t>(i)]] = static_cast<double>(y[i]);
    out[modes + active[static_cast<std::size_t>(i)]] = static_cast<double>(y[a + i]);
  }
  return out;
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct NewtonOutcome {
  bool converged = false;
  Vec z;
};

NewtonOutcome damped_newton(const ModalSystem& sys, Vec z, double tol, double box,
                            const OracleOptions& opts) {
  Vec f, f_trial, z_trial;
  Mat jac;
  sys.evaluate(z, f);
  double merit = 0.5 * f.squaredNorm();
  // Past the tolerance, iterate while the residual still drops by a real
  // factor: at singular roots (EE continua) convergence is only linear.
  double before = std::numeric_limits<double>::infinity();
  int polish = 0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (f.norm() < tol) {
      if (++polish > opts.max_polish || !(f.norm() < 0.9 * before)) break;
    }
    before = f.norm();
    sys.jacobian(z, jac);
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(jac);
    const Vec step = cod.solve(-f);
    const double slope = f.dot(jac * step);
    if (!(slope < 0.0)) break;
    double t = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= opts.max_backtracks; ++bt, t *= 0.5) {
      z_trial = z + t * step;
      sys.evaluate(z_trial, f_trial);
      const double trial_merit = 0.5 * f_trial.squaredNorm();
      if (trial_merit <= merit + opts.armijo_c * t * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    z.swap(z_trial);
    f.swap(f_trial);
    merit = 0.5 * f.squaredNorm();
    if (!z.allFinite() || z.cwiseAbs().maxCoeff() > 1e6 * box) return {false, z};
  }
  return {f.norm() < tol, z};
}

// Mode subsets of size 1..3 (all of them when N <= 3 would repeat the box).
std::vector<std::vector<bool>> face_subsets(int modes) {
  std::vector<std::vector<bool>> out;
  const int top = std::min(3, modes);
  for (int size = 1; size <= top; ++size) {
    if (size == modes) break;
    std::vector<bool> pick(static_cast<std::size_t>(modes), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      out.push_back(pick);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

std::vector<double> modal_map(const Params& p, const Spectrum& spec,
                              const std::vector<double>& z) {
  if (z.size() % 2 != 0) throw std::invalid_argument("modal_map: odd unknown count");
  const ModalSystem sys(p, leading_eigenvalues(spec, static_cast<int>(z.size() / 2)));
  Vec f;
  sys.evaluate(Eigen::Map<const Vec>(z.data(), static_cast<Eigen::Index>(z.size())), f);
  return {f.data(), f.data() + f.size()};
}

OracleResult galerkin_solve(const Params& p, const Spectrum& spec, int modes, int starts,
                            std::uint64_t seed, const OracleOptions& opts) {
  p.validate();
  if (modes < 1 || modes > spec.n_max()) {
    throw std::invalid_argument("galerkin_solve: truncation outside the spectrum");
  }
  if (starts < 1) throw std::invalid_argument("galerkin_solve: need at least one start");

  const ModalSystem sys(p, leading_eigenvalues(spec, modes));
  const int dim = 2 * modes;
  const double lambda_top = sys.lambda(modes - 1);

  OracleResult result;
  result.truncation = modes;
  result.starts_used = starts;
  result.box_half_width = std::sqrt(std::max(1.0, -p.beta) / (p.varrho * sys.lambda(0)));
  const double scale =
      std::max({1.0, lambda_top * lambda_top, p.k, std::abs(p.beta) * lambda_top});
  result.newton_tol = opts.newton_tol_factor * scale;
  const double box = result.box_half_width;

  // Starts are drawn up front so the outcome does not depend on scheduling.
  std::mt19937_64 rng(seed);
  const auto faces = face_subsets(modes);
  const int face_starts = faces.empty() ? 0 : static_cast<int>(opts.face_fraction * starts);
  std::vector<Vec> initial(static_cast<std::size_t>(starts), Vec(dim));
  for (int s = 0; s < starts; ++s) {
    auto& z = initial[static_cast<std::size_t>(s)];
    for (int i = 0; i < dim; ++i) z[i] = box * (2.0 * unit_draw(rng) - 1.0);
    if (s < face_starts) {
      const auto& keep = faces[static_cast<std::size_t>(s) % faces.size()];
      for (int m = 0; m < modes; ++m) {
        if (!keep[static_cast<std::size_t>(m)]) z[m] = z[modes + m] = 0.0;
      }
    }
  }

  std::vector<std::optional<Vec>> roots(initial.size());
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < initial.size(); i += stride) {
      auto out = damped_newton(sys, initial[i], result.newton_tol, box, opts);
      if (!out.converged) continue;
      // Snap numerically dead modes to exact zeros and re-polish; the zero block
      // decouples, so the Newton step leaves it at zero.
      for (int m = 0; m < modes; ++m) {
        if (std::max(std::abs(out.z[m]), std::abs(out.z[modes + m])) < opts.active_threshold) {
          out.z[m] = 0.0;
          out.z[modes + m] = 0.0;
        }
      }
      const Vec snapped = out.z;
      out = damped_newton(sys, out.z, result.newton_tol, box, opts);
      if (!out.converged) continue;
      // the minimum-norm step can leak roundoff into the zeroed block
      for (int m = 0; m < modes; ++m) {
        if (snapped[m] == 0.0 && snapped[modes + m] == 0.0) out.z[m] = out.z[modes + m] = 0.0;
      }
      if (opts.refine_steps > 0) out.z = refine(p, spec, out.z, modes, scale, opts.refine_steps);
      Vec f;
      sys.evaluate(out.z, f);
      if (f.norm() < result.newton_tol) roots[i] = std::move(out.z);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(starts));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t, threads);
    worker(0, threads);
  }

  std::vector<Vec> unique;
  for (auto& root : roots) {
    if (!root) continue;
    ++result.converged_count;
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Vec& u) {
      return (u - *root).cwiseAbs().maxCoeff() <= opts.dedup_tol * box;
    });
    if (!seen) unique.push_back(std::move(*root));
  }
  for (const auto& z : unique) {
    ModalSolution sol;
    sol.tag = {BranchKind::Oracle, {}};
    for (int m = 0; m < modes; ++m) {
      if (z[m] != 0.0 || z[modes + m] != 0.0) sol.modes[m + 1] = {z[m], z[modes + m]};
    }
    result.found.push_back(std::move(sol));
  }
  return result;
}

namespace {

std::vector<int> active_modes(const ModalSolution& s) {
  std::vector<int> out;
  for (const auto& [n, c] : s.modes) {
    if (c.alpha != 0.0 || c.gamma != 0.0) out.push_back(n);
  }
  return out;
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

bool matches_isolated(const ModalSolution& root, const ModalSolution& closed, double tol) {
  if (active_modes(root) != active_modes(closed)) return false;
  for (const auto& [n, c] : closed.modes) {
    if (c.alpha == 0.0 && c.gamma == 0.0) continue;
    const auto& r = root.modes.at(n);
    if (!close(r.alpha, c.alpha, tol) || !close(r.gamma, c.gamma, tol)) return false;
  }
  return true;
}

bool lies_on_family(const ModalSolution& root, const EEFamily& fam, double tol) {
  if (active_modes(root) != fam.modes) return false;
  std::vector<double> x;
  for (std::size_t i = 0; i < fam.modes.size(); ++i) {
    const auto& c = root.modes.at(fam.modes[i]);
    if (!close(c.gamma, fam.sign_pattern[i] * c.alpha, tol)) return false;
    x.push_back(c.alpha);
  }
  return std::abs(fam.quadric_value(x)) <= tol * std::max(1.0, std::abs(fam.constant));
}

}  // namespace

MatchReport match_against(const std::vector<ModalSolution>& closed,
                          const std::vector<EEFamily>& families,
                          const std::vector<ModalSolution>& oracle_found, double tol) {
  MatchReport report;
  report.closed_hit.assign(closed.size(), false);
  for (const auto& root : oracle_found) {
    MatchEntry entry;
    for (std::size_t j = 0; j < closed.size() && entry.cls == MatchClass::Unmatched; ++j) {
      if (matches_isolated(root, closed[j], tol)) {
        entry = {MatchClass::Matched, static_cast<int>(j), -1};
        report.closed_hit[j] = true;
      }
    }
    for (std::size_t i = 0; i < families.size() && entry.cls == MatchClass::Unmatched; ++i) {
      if (lies_on_family(root, families[i], tol)) {
        entry = {MatchClass::OnFamily, -1, static_cast<int>(i)};
      }
    }
    switch (entry.cls) {
      case MatchClass::Matched: ++report.matched; break;
      case MatchClass::OnFamily: ++report.on_family; break;
      case MatchClass::Unmatched: report.unmatched.push_back(root); break;
    }
    report.entries.push_back(entry);
  }
  report.closed_hit_count =
      static_cast<int>(std::count(report.closed_hit.begin(), report.closed_hit.end(), true));
  return report;
}

}  // namespace beamforge
