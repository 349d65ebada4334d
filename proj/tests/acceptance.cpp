// One line per acceptance criterion; exit status 1 if any criterion fails.
// The (5,1)/(1,5) stress derivations are time-boxed and never fail the run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"

using namespace superch;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::pair<int, int>> small_pairs() {
  std::vector<std::pair<int, int>> v;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q) v.emplace_back(p, q);
  return v;
}

std::string first_mismatch(const std::vector<SPoly>& got, const std::vector<SPoly>& want) {
  if (got.size() != want.size()) return "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
  for (std::size_t j = 0; j < got.size(); ++j)
    if (got[j] != want[j]) return "coefficient " + std::to_string(j) + ": " + got[j].str();
  return "";
}

Result golden_identities() {
  Result r;
  int matched = 0;
  for (const auto& g : golden::generic()) {
    const auto id = derive(g.p, g.q, false);
    const auto diff = first_mismatch(id.coeffs, golden::parse(g));
    if (!diff.empty()) {
      r.pass = false;
      r.detail += "(" + std::to_string(g.p) + "," + std::to_string(g.q) + ") " + diff + "; ";
    } else {
      ++matched;
    }
  }
  r.detail += std::to_string(matched) + "/5 identities match";
  return r;
}

Result osp_identities() {
  Result r;
  const auto id22 = osp_specialize(identity_coeffs(2, 2));
  const auto id24 = osp_specialize(flip_signs(identity_coeffs(4, 2)));
  std::ostringstream os;
  for (const auto& [id, g] : {std::pair{id22, golden::osp22()}, std::pair{id24, golden::osp24()}}) {
    const auto want = golden::parse(g);
    os << "(" << g.p << "," << g.q << ")OSp ";
    if (id.coeffs == want) {
      os << "match; ";
      continue;
    }
    r.pass = false;
    // Report the factor separating the result from the expected identity.
    const auto factor = try_divide_exact(id.coeffs[0], want[0]);
    os << "mismatch, residual factor " << (factor ? factor->str() : std::string("not a polynomial multiple"))
       << "; ";
  }
  os << "weights " << id22.base_weight << "+4, " << id24.base_weight << "+6";
  r.detail = os.str();
  return r;
}

Result annihilation_and_equivalence(Result& equivalence) {
  Result r;
  BatchOptions o;
  o.trials = 25;
  o.seed = 1;
  o.num_generators = 6;
  o.max_soul_grade = 3;
  int passes = 0;
  int total = 0;
  int equivalent = 0;
  for (const auto& [p, q] : small_pairs()) {
    const auto report = verify_batch(p, q, o);
    passes += report.passes;
    total += report.trials;
    if (!report.ok() || report.passes != report.trials) {
      r.pass = false;
      r.detail += "(" + std::to_string(p) + "," + std::to_string(q) + ") failures " +
                  std::to_string(report.failures) + " skips " + std::to_string(report.skips) + "; ";
    }
    SampleOptions so;
    for (int t = 0; t < o.trials; ++t) {
      const auto m = random_supermatrix(p, q, trial_seed(o.seed, t), so);
      if (check_equivalence(m)) ++equivalent;
      else equivalence.pass = false;
    }
  }
  r.detail += std::to_string(passes) + "/" + std::to_string(total) + " samples annihilated over " +
              std::to_string(small_pairs().size()) + " (p,q) pairs";
  equivalence.detail = std::to_string(equivalent) + "/" + std::to_string(total) + " samples with equal cross products";
  return r;
}

Result newton_oracle() {
  Result r;
  std::mt19937_64 rng(2024);
  int ok = 0;
  for (int sample = 0; sample < 50; ++sample) {
    const int n = 1 + sample % 6;
    const auto a = oracle::random_rational_matrix(static_cast<std::size_t>(n), rng);
    const auto traces = oracle::traces_of_powers(a, n);
    const auto b = newton_coeffs(n, n);
    const auto expected = oracle::char_poly(a);
    bool same = true;
    for (int j = 0; j <= n; ++j)
      if (evaluate<Rational>(b[static_cast<std::size_t>(j)], traces) != expected[static_cast<std::size_t>(n - j)])
        same = false;
    if (same) ++ok;
    else r.pass = false;
  }
  r.detail = std::to_string(ok) + "/50 characteristic polynomials match";
  return r;
}

Result structural() {
  Result r;
  int ok = 0;
  for (const auto& [p, q] : small_pairs()) {
    const auto id = identity_coeffs(p, q);
    const auto s = check_structure(id);
    bool good = s.ok() && id.base_weight == static_cast<std::uint64_t>(2 * p * q);
    good = good && flip_signs(id) == identity_coeffs(q, p);
    if (q > p) good = good && detail::identity_coeffs_direct(p, q) == id;
    if (good) ++ok;
    else {
      r.pass = false;
      r.detail += "(" + std::to_string(p) + "," + std::to_string(q) + ") ";
    }
  }
  r.detail += std::to_string(ok) + "/" + std::to_string(small_pairs().size()) +
              " identities homogeneous, square-led, det B-divisible, flip-dual";
  return r;
}

Result factorizations() {
  Result r;
  const auto p2 = golden::parse({"S1^2-S2", "-2/3*(S1^3-S3)", "1/6*(S1^4-4*S1*S3+3*S2^2)"}, 3);
  const auto p1 = golden::parse({"S1^2-S2", "1/3*(S1^3-3*S1*S2+2*S3)"}, 3);
  const bool displayed = verify_factorization(identity_coeffs(2, 1), p2, p1) &&
                         convolve(p2, p1) == golden::parse(golden::generic()[1]);
  const auto f11 = factorize_small(identity_coeffs(1, 1));
  const bool quadratic = f11 && convolve(f11->left, f11->right) == golden::parse(golden::generic()[0]);
  const auto f21 = factorize_small(identity_coeffs(2, 1));
  const bool derived = f21 && f21->left == p2 && f21->right == p1;
  r.pass = displayed && quadratic && derived;
  r.detail = std::string("P2*P1 ") + (displayed ? "reproduces" : "does not reproduce") + " (2,1); (1,1) pair " +
             (quadratic ? "reproduces" : "does not reproduce") + " (1,1); derived (2,1) factors " +
             (derived ? "equal" : "differ from") + " P2, P1";
  return r;
}

Result degenerate() {
  Result r;
  int flagged = 0;
  int vanishing = 0;
  int total = 0;
  for (const auto& [p, q] : small_pairs()) {
    const auto id = identity_coeffs(p, q);
    for (int c = -4; c <= 4; ++c) {
      auto m = random_supermatrix(p, q, 900 + static_cast<std::uint64_t>(c + 4)).entries();
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const bool even = (i < static_cast<std::size_t>(p)) == (j < static_cast<std::size_t>(p));
          if (!even) continue;
          // Body c on the diagonal, souls kept; off-diagonal even entries cleared.
          m(i, j) = i == j ? Multivector(6, Rational(c)) + m(i, j).soul() : Multivector(6);
        }
      const SuperMatrix s(p, q, 6, m);
      ++total;
      if (check_degenerate(s)) ++flagged;
      else r.pass = false;
      const auto ev = evaluate_identity(s, id);
      bool zero_bodies = true;
      for (const auto& a : ev.coefficients)
        if (!is_zero(a.body())) zero_bodies = false;
      if (zero_bodies && ev.vacuous) ++vanishing;
      else r.pass = false;
    }
  }
  r.detail = std::to_string(flagged) + "/" + std::to_string(total) + " flagged, " + std::to_string(vanishing) + "/" +
             std::to_string(total) + " with all coefficient bodies zero";
  return r;
}

Result determinant_oracle() {
  Result r;
  std::mt19937_64 rng(77);
  int ok = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t size = 1 + static_cast<std::size_t>(k % 4);
    Matrix<Multivector> m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = oracle::random_even(rng, 6);
    if (det(m) == oracle_det_permutation(m)) ++ok;
    else r.pass = false;
  }
  r.detail = std::to_string(ok) + "/100 determinants agree";
  return r;
}

void stress(std::chrono::seconds box) {
  const auto t0 = Clock::now();
  auto job = std::make_shared<std::packaged_task<std::string()>>([] {
    std::ostringstream os;
    for (const auto& [p, q] : {std::pair{5, 1}, std::pair{1, 5}}) {
      const auto s0 = Clock::now();
      const auto id = derive(p, q, false);
      BatchOptions o;
      o.trials = 3;
      o.seed = 5;
      const auto rep = verify_batch(id, o);
      os << "(" << p << "," << q << ") derived and " << rep.passes << "/3 annihilated in " << seconds_since(s0)
         << " s; ";
    }
    return os.str();
  });
  auto fut = job->get_future();
  std::thread([job] { (*job)(); }).detach();
  if (fut.wait_for(box) == std::future_status::ready) {
    std::cout << "stress (5,1)/(1,5): COMPLETED " << fut.get() << "total " << seconds_since(t0) << " s\n";
  } else {
    std::cout << "stress (5,1)/(1,5): TIMEOUT after " << box.count() << " s (recorded, not a failure)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool skip_stress = argc > 1 && std::string(argv[1]) == "--no-stress";
  bool all = true;
  auto report = [&](int n, const std::string& name, const std::function<Result()>& f) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    std::printf("criterion %d %-28s %s  %s (%.2f s)\n", n, name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };

  Result equivalence;
  report(1, "golden identities", golden_identities);
  report(2, "OSp golden identities", osp_identities);
  report(3, "annihilation", [&] { return annihilation_and_equivalence(equivalence); });
  report(4, "char-function equivalence", [&] { return equivalence; });
  report(5, "Newton oracle", newton_oracle);
  report(6, "structural invariants", structural);
  report(7, "factorization", factorizations);
  report(8, "degenerate detection", degenerate);
  report(9, "determinant oracle", determinant_oracle);
  if (!skip_stress) stress(std::chrono::seconds(600));
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  std::fflush(stdout);
  // A timed-out stress thread may still be running.
  std::quick_exit(all ? 0 : 1);
}
