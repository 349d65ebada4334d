// superch: derive and verify super Cayley-Hamilton identities.
//
//   superch derive p q [--osp] [--format text|json|latex] [--out path]
//   superch verify p q [--trials n] [--seed s] [--generators N] [--soul-grade g]
//                      [--osp] [--identity file.json] [--format text|json] [--out path]
//   superch charfn p q [--seed s] [--generators N] [--soul-grade g] [--matrix file.json]
//                      [--format text|json|latex] [--out path]
//   superch newton n k [--format text|json|latex] [--out path]
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "superch/superch.hpp"

namespace {

using namespace superch;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int p = 0;
  int q = 0;
  bool osp = false;
  std::uint64_t seed = 1;
  int trials = 25;
  int generators = 6;
  int soul_grade = 3;
  std::string format = "text";
  std::string out;
  std::string identity_path;
  std::string matrix_path;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SUPERCH_DEFAULT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SUPERCH_DEFAULT_SEED is not an unsigned integer: ") + env);
  }
  return 1;
}

void require_dims(const Config& c) {
  if (c.p < 1 || c.q < 1) throw UsageError("p and q must both be at least 1");
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string header(const CHIdentity& id) {
  std::ostringstream os;
  os << "(" << id.p << "," << id.q << ")" << (id.osp ? " OSp" : "") << " identity, degree "
     << id.base_weight + static_cast<std::uint64_t>(id.n()) << " in the matrix elements";
  return os.str();
}

int cmd_derive(const Config& c) {
  require_dims(c);
  if (c.osp && c.q % 2 != 0) throw UsageError("--osp needs even q");
  const CHIdentity id = derive(c.p, c.q, c.osp);
  if (c.format == "json") emit(c, to_json(id).dump(2));
  else if (c.format == "latex") emit(c, to_latex(id));
  else emit(c, header(id) + ":\n" + to_text(id));
  return kOk;
}

int cmd_verify(const Config& c) {
  require_dims(c);
  if (c.format == "latex") throw UsageError("verify supports --format text or json");
  if (c.osp && c.q % 2 != 0) throw UsageError("--osp needs even q");
  CHIdentity id;
  if (!c.identity_path.empty()) {
    id = identity_from_json(read_json(c.identity_path));
    if (id.p != c.p || id.q != c.q)
      throw UsageError("identity file is for (" + std::to_string(id.p) + "," + std::to_string(id.q) + ")");
  } else {
    id = derive(c.p, c.q, c.osp);
  }
  BatchOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  o.num_generators = c.generators;
  o.max_soul_grade = c.soul_grade;
  o.osp = c.osp;
  const VerificationReport r = verify_batch(id, o);

  if (c.format == "json") {
    emit(c, to_json(r).dump(2));
  } else {
    std::ostringstream os;
    os << "verify (" << r.p << "," << r.q << ")" << (r.osp ? " OSp" : "") << ": " << r.trials
       << " trials, seed " << r.seed << ", N=" << r.num_generators << ", soul grade <= " << r.max_soul_grade
       << "\n";
    os << "passes " << r.passes << ", failures " << r.failures << ", skips " << r.skips << "\n";
    for (const auto& t : r.outcomes) {
      if (t.passed) continue;
      os << "  trial " << t.trial << " (sample seed " << t.sample_seed << "): "
         << (t.skipped ? "skipped, " + t.note : std::string("nonzero residual")) << "\n";
      if (t.residual) {
        const auto& m = t.residual->entries();
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero()) os << "    [" << i + 1 << "," << k + 1 << "] " << m(i, k).str() << "\n";
      }
    }
    os << "result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    os << "wall time " << r.wall_seconds << " s";
    emit(c, os.str());
  }
  return r.ok() ? kOk : kFailed;
}

int cmd_charfn(const Config& c) {
  SuperMatrix m;
  if (!c.matrix_path.empty()) {
    m = supermatrix_from_json(read_json(c.matrix_path));
    if (m.p() < 1 || m.q() < 1) throw UsageError("p and q must both be at least 1");
  } else {
    require_dims(c);
    SampleOptions o;
    o.num_generators = c.generators;
    o.max_soul_grade = c.soul_grade;
    m = random_supermatrix(c.p, c.q, c.seed, o);
  }
  const RatioForm fd = h_via_d(m);
  const RatioForm fa = h_via_a(m);
  const bool equivalent = ratio_forms_equal(fd, fa);
  const GrassmannPoly full = full_char_poly(m);
  const int expected_degree = 2 * m.p() * m.q() + m.p() + m.q();

  if (c.format == "json") {
    Json j = {{"matrix", to_json(m)},
              {"via_d", to_json(fd, m.num_generators())},
              {"via_a", to_json(fa, m.num_generators())},
              {"equivalence", equivalent},
              {"full_char_poly", {{"degree", full.degree()}, {"coeffs", to_json(full, m.num_generators())}}}};
    emit(c, j.dump(2));
  } else if (c.format == "latex") {
    std::ostringstream os;
    os << "h(x) = " << to_latex(fd) << "\n";
    os << "h(x) = " << to_latex(fa) << "\n";
    os << "% equivalence=" << (equivalent ? "true" : "false") << "\n";
    os << "\\mathcal{P}(x) = " << latex(full);
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << "M (" << m.p() << "," << m.q() << "), N=" << m.num_generators() << ":\n";
    for (int i = 0; i < m.size(); ++i) {
      os << "  [";
      for (int k = 0; k < m.size(); ++k)
        os << (k ? ", " : "") << m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)).str();
      os << "]\n";
    }
    os << "a(x) = " << char_poly_block(m.A()).str() << "\n";
    os << "d(x) = " << char_poly_block(m.D()).str() << "\n";
    os << "h via d: " << to_text(fd) << "\n";
    os << "h via a: " << to_text(fa) << "\n";
    os << "equivalence=" << (equivalent ? "true" : "false") << "\n";
    os << "P(x) degree " << full.degree() << " (2pq+p+q = " << expected_degree << "): " << full.str();
    emit(c, os.str());
  }
  return equivalent ? kOk : kFailed;
}

int cmd_newton(const Config& c, int n, int k) {
  if (n < 0 || k < 0) throw UsageError("n and k must be non-negative");
  const auto b = newton_coeffs(n, k);
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& x : b) arr.push_back({{"text", x.str()}, {"poly", to_json(x)}});
    emit(c, Json{{"n", n}, {"k", k}, {"b", std::move(arr)}}.dump(2));
  } else {
    std::ostringstream os;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) os << "\n";
      if (c.format == "latex") os << "b_{" << j << "} = " << latex(b[j]);
      else os << "b" << j << " = " << b[j].str();
    }
    emit(c, os.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super Cayley-Hamilton identities: derivation and exact verification"};
  app.require_subcommand(1);
  Config cfg;
  int newton_n = 0;
  int newton_k = 0;

  try {
    cfg.seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("p", cfg.p, "Even dimension")->required();
    sub->add_option("q", cfg.q, "Odd dimension")->required();
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Base seed (default 1, or SUPERCH_DEFAULT_SEED)");
    sub->add_option("--generators", cfg.generators, "Number of Grassmann generators N");
    sub->add_option("--soul-grade", cfg.soul_grade, "Maximum grade of soul terms");
  };

  auto* derive_cmd = app.add_subcommand("derive", "Derive the identity for (p,q)");
  add_dims(derive_cmd);
  derive_cmd->add_flag("--osp", cfg.osp, "Reduce to OSp(p|q) supermatrices (q even)");
  add_format(derive_cmd, {"text", "json", "latex"});

  auto* verify_cmd = app.add_subcommand("verify", "Verify the identity on random supermatrices");
  add_dims(verify_cmd);
  verify_cmd->add_flag("--osp", cfg.osp, "Use the OSp identity and OSp samples");
  verify_cmd->add_option("--trials", cfg.trials, "Number of samples")->check(CLI::PositiveNumber);
  add_sampling(verify_cmd);
  verify_cmd->add_option("--identity", cfg.identity_path, "Verify this identity JSON instead of deriving");
  add_format(verify_cmd, {"text", "json", "latex"});

  auto* charfn_cmd = app.add_subcommand("charfn", "Show both characteristic-function forms for one sample");
  charfn_cmd->add_option("p", cfg.p, "Even dimension");
  charfn_cmd->add_option("q", cfg.q, "Odd dimension");
  add_sampling(charfn_cmd);
  charfn_cmd->add_option("--matrix", cfg.matrix_path, "Use this supermatrix JSON instead of a sample");
  add_format(charfn_cmd, {"text", "json", "latex"});

  auto* newton_cmd = app.add_subcommand("newton", "Classical coefficients b_0..b_k in n symbols");
  newton_cmd->add_option("n", newton_n, "Number of supertrace symbols")->required();
  newton_cmd->add_option("k", newton_k, "Highest coefficient")->required();
  add_format(newton_cmd, {"text", "json", "latex"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*derive_cmd) return cmd_derive(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*charfn_cmd) {
      if (cfg.matrix_path.empty() && (charfn_cmd->count("p") == 0 || charfn_cmd->count("q") == 0))
        throw UsageError("charfn needs p and q, or --matrix");
      return cmd_charfn(cfg);
    }
    if (*newton_cmd) return cmd_newton(cfg, newton_n, newton_k);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Malformed input files, parity or dimension violations.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
