#pragma once

// Exact checks of derived identities on concrete supermatrices, plus the
// independent oracles used to cross-check the determinant and factor paths.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "superch/identity_engine.hpp"
#include "superch/matrix.hpp"
#include "superch/supermatrix.hpp"

namespace superch {

struct Evaluation {
  SuperMatrix residual;                 // sum_j a_j(str) M^(n-j)
  std::vector<Multivector> supertraces;  // str(M^1) .. str(M^n)
  std::vector<Multivector> coefficients; // a_j evaluated on the supertraces
  bool vacuous = false;                  // every coefficient has zero body
};

/// str(M^j) for j = 1..k.
inline std::vector<Multivector> supertraces(const SuperMatrix& m, int k) {
  const auto powers = mat_powers(m, static_cast<unsigned>(k));
  std::vector<Multivector> s;
  for (int j = 1; j <= k; ++j) s.push_back(supertrace(powers[static_cast<std::size_t>(j)]));
  return s;
}

/// Evaluates the identity on M. For nondegenerate M the residual is the exact
/// zero matrix; for degenerate M it is reported with vacuous = true.
inline Evaluation evaluate_identity(const SuperMatrix& m, const CHIdentity& id) {
  if (m.p() != id.p || m.q() != id.q)
    throw DimensionError("identity derived for (" + std::to_string(id.p) + "," + std::to_string(id.q) +
                         ") applied to a (" + std::to_string(m.p()) + "," + std::to_string(m.q()) +
                         ") supermatrix");
  if (id.coeffs.size() != static_cast<std::size_t>(id.n()) + 1)
    throw DimensionError("identity must have p + q + 1 coefficients");
  const int n = id.n();
  const auto powers = mat_powers(m, static_cast<unsigned>(n));
  Evaluation ev;
  for (int j = 1; j <= n; ++j) ev.supertraces.push_back(supertrace(powers[static_cast<std::size_t>(j)]));

  Matrix<Multivector> sum(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  ev.vacuous = true;
  for (int j = 0; j <= n; ++j) {
    Multivector c = evaluate<Multivector>(id.coeffs[static_cast<std::size_t>(j)],
                                          std::span<const Multivector>(ev.supertraces));
    if (!is_zero(c.body())) ev.vacuous = false;
    if (!c.is_zero()) sum = sum + c * powers[static_cast<std::size_t>(n - j)].entries();
    ev.coefficients.push_back(std::move(c));
  }
  ev.residual = SuperMatrix(m.p(), m.q(), m.num_generators(), std::move(sum));
  return ev;
}

struct TrialOutcome {
  int trial = 0;
  std::uint64_t sample_seed = 0;
  bool passed = false;
  bool skipped = false;
  std::optional<SuperMatrix> residual;  // present on failure
  std::string note;
};

struct VerificationReport {
  int p = 0;
  int q = 0;
  bool osp = false;
  std::uint64_t seed = 0;
  int trials = 0;
  int num_generators = 0;
  int max_soul_grade = 0;
  int passes = 0;
  int failures = 0;
  int skips = 0;
  std::vector<TrialOutcome> outcomes;
  double wall_seconds = 0.0;

  bool ok() const { return failures == 0 && passes > 0; }
};

/// Per-trial seed; splitmix64 of (seed, trial).
inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct BatchOptions {
  int trials = 25;
  std::uint64_t seed = 1;
  int num_generators = 6;
  int max_soul_grade = 3;
  bool osp = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Samples nondegenerate supermatrices (OSp ones when requested) and checks
/// that the identity annihilates each of them exactly. Deterministic in the
/// seed regardless of thread count.
inline VerificationReport verify_batch(const CHIdentity& id, const BatchOptions& opt) {
  if (opt.trials < 1) throw Error("trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.p = id.p;
  r.q = id.q;
  r.osp = opt.osp;
  r.seed = opt.seed;
  r.trials = opt.trials;
  r.num_generators = opt.num_generators;
  r.max_soul_grade = opt.max_soul_grade;
  r.outcomes.resize(static_cast<std::size_t>(opt.trials));

  SampleOptions so;
  so.num_generators = opt.num_generators;
  so.max_soul_grade = opt.max_soul_grade;

  auto run_trial = [&](int t) {
    TrialOutcome& out = r.outcomes[static_cast<std::size_t>(t)];
    out.trial = t;
    out.sample_seed = trial_seed(opt.seed, t);
    SuperMatrix m;
    try {
      m = opt.osp ? osp_random(id.p, id.q, out.sample_seed, so)
                  : random_supermatrix(id.p, id.q, out.sample_seed, so);
    } catch (const Error& e) {
      out.skipped = true;
      out.note = e.what();
      return;
    }
    Evaluation ev = evaluate_identity(m, id);
    if (ev.vacuous) {
      out.skipped = true;
      out.note = "vacuous: all coefficient bodies vanish";
      return;
    }
    out.passed = ev.residual.is_zero();
    if (!out.passed) out.residual = std::move(ev.residual);
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(opt.trials));
  if (threads <= 1) {
    for (int t = 0; t < opt.trials; ++t) run_trial(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int t = static_cast<int>(w); t < opt.trials; t += static_cast<int>(threads)) run_trial(t);
      });
  }

  for (const auto& o : r.outcomes) {
    if (o.skipped) ++r.skips;
    else if (o.passed) ++r.passes;
    else ++r.failures;
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Derives the (p, q) identity once and verifies it on random samples.
inline VerificationReport verify_batch(int p, int q, const BatchOptions& opt) {
  return verify_batch(derive(p, q, opt.osp), opt);
}

/// Leibniz sum over permutations; independent of the cofactor recursion.
template <typename T>
T oracle_det_permutation(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() > 5) throw DimensionError("permutation oracle limited to 5x5");
  detail::require_commuting(m);
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T sum{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(Rational(1));
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    sum = (inversions % 2) ? T(sum - term) : T(sum + term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// True when the product of the factor polynomials equals the identity.
inline bool verify_factorization(const CHIdentity& id, const std::vector<SPoly>& left,
                                 const std::vector<SPoly>& right) {
  if (left.empty() || right.empty() ||
      left.size() + right.size() != static_cast<std::size_t>(id.n()) + 2)
    throw DimensionError("factor degrees must sum to p + q");
  return convolve(left, right) == id.coeffs;
}

struct StructureCheck {
  bool homogeneous = false;      // coeffs[j] weighted-homogeneous of degree base + j
  bool leading_square = false;   // coeffs[0] is a perfect square
  bool divisible_by_det_b = false;  // coeffs[1] divisible by det(B)
  std::optional<SPoly> square_root;

  bool ok() const { return homogeneous && leading_square && divisible_by_det_b; }
};

inline StructureCheck check_structure(const CHIdentity& id) {
  StructureCheck s;
  s.homogeneous = true;
  for (std::size_t j = 0; j < id.coeffs.size(); ++j)
    if (!is_weighted_homogeneous(id.coeffs[j], id.base_weight + j)) s.homogeneous = false;
  s.square_root = try_sqrt(id.coeffs.front());
  s.leading_square = s.square_root.has_value();
  const SPoly det_b = leading_factor(id.p, id.q);
  s.divisible_by_det_b = id.coeffs.size() > 1 && try_divide_exact(id.coeffs[1], det_b).has_value();
  return s;
}

}  // namespace superch
