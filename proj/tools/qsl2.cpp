// Command line front end: every library operation behind one binary.
// Exit codes: 0 ok, 1 a requested check failed, 2 usage error, 3 a library
// invariant was violated while computing.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsl2/braids.hpp"
#include "qsl2/cache.hpp"
#include "qsl2/checkall.hpp"
#include "qsl2/coalgebra.hpp"
#include "qsl2/json_io.hpp"
#include "qsl2/ribbon.hpp"
#include "qsl2/truncated.hpp"

namespace {

using namespace qsl2;

struct Config {
  std::string mode = "exact"; // exact | numeric
  double t0_re = 1.3, t0_im = 0.0;
  int cap = 4;
  std::string format = "pretty"; // pretty | json | csv

  bool numeric() const { return mode == "numeric"; }
  Complex t0() const { return {t0_re, t0_im}; }
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return (v && *v) ? std::string(v) : fallback;
}

// Flags win over env vars; env vars win over built-in defaults.
void apply_env_defaults(Config& cfg) {
  cfg.mode = env_or("QSL2_MODE", cfg.mode);
  if (const char* t0 = std::getenv("QSL2_T0"); t0 && *t0) {
    std::istringstream is(t0);
    char comma = ',';
    is >> cfg.t0_re;
    if (is.peek() == ',') is >> comma >> cfg.t0_im;
  }
  if (const char* cap = std::getenv("QSL2_CAP"); cap && *cap) cfg.cap = std::atoi(cap);
}

void check_numeric_guard(const Config& cfg) {
  if (cfg.numeric() && !numeric_t0_admissible(cfg.t0(), 64))
    throw CLI::ValidationError("--t0", "t0 is zero or too close to a root of unity");
}

json scalar_out(const Config& cfg, const Scalar& s) {
  if (cfg.numeric()) return to_json(s.eval(cfg.t0()));
  return to_json(s);
}

json matrix_out(const Config& cfg, const Matrix& m) {
  if (!cfg.numeric()) return to_json(m);
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j).eval(cfg.t0())));
    rows.push_back(std::move(row));
  }
  return json{{"size", m.rows()}, {"entries", std::move(rows)}};
}

void print_matrix_pretty(const Config& cfg, const Matrix& m, std::ostream& os) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << '\t';
      if (cfg.numeric()) {
        const Complex v = m(i, j).eval(cfg.t0());
        os << v.real();
        if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
      } else {
        os << m(i, j).str();
      }
    }
    os << '\n';
  }
}

void emit(const Config& cfg, const json& j) { std::cout << j.dump(2) << '\n'; }

void print_trunc(const Config& cfg, const TruncatedElement& z) {
  if (cfg.format == "json") {
    json blocks = json::array();
    for (const auto& b : z.blocks) blocks.push_back(matrix_out(cfg, b));
    emit(cfg, json{{"cap", z.cap}, {"blocks", std::move(blocks)}});
    return;
  }
  for (int r = 0; r <= z.cap; ++r) {
    std::cout << "level " << r << ":\n";
    print_matrix_pretty(cfg, z.blocks[r], std::cout);
  }
}

int print_report(const Config& cfg, const CheckReport& rep) {
  if (cfg.format == "json") {
    emit(cfg, to_json(rep));
  } else {
    for (const auto& it : rep.items)
      std::cout << (it.pass ? "PASS " : "FAIL ") << it.name << '\n';
    std::cout << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return rep.all_pass() ? 0 : 1;
}

std::vector<int> parse_levels(const std::string& s, std::size_t expect) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) out.push_back(std::stoi(part));
  if (expect && out.size() != expect)
    throw CLI::ValidationError("--levels", "expected " + std::to_string(expect) + " levels");
  return out;
}

BraidWord parse_braid(const std::string& s, int strands) {
  BraidWord w;
  w.strands = strands;
  std::istringstream is(s);
  int g;
  while (is >> g) w.word.push_back(g);
  return w;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact model of the quantized sl2 function algebra: representations, "
               "coproduct tables, R-matrices and braid-closure invariants"};
  app.require_subcommand(1);

  Config cfg;
  apply_env_defaults(cfg);
  app.add_option("--mode", cfg.mode, "scalar mode")->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--t0", cfg.t0_re, "evaluation point for numeric mode (real part)");
  app.add_option("--t0-imag", cfg.t0_im, "evaluation point, imaginary part");
  app.add_option("--cap", cfg.cap, "default truncation level")->check(CLI::NonNegativeNumber);
  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag, "gamma table cache directory");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));

  // rep
  int m = 0, n = 0, N = 0, q = 0, a = 0, b = 0, max_level = 3, strands = 2, color = 1;
  std::string gen = "K", mono_spec, spec_file, levels_spec, braid_spec;
  double eps = 1e-3, threshold = 1e-8;
  bool one_based = false, paper_literal = false, exact_rank = false, numeric_inv = false;
  int cap_override = -1;

  auto* c_rep = app.add_subcommand("rep", "generator image of the level-m irreducible");
  c_rep->add_option("--m", m)->required();
  c_rep->add_option("--gen", gen)->check(CLI::IsMember({"X", "Y", "K", "Kinv", "H"}));

  auto* c_validate = app.add_subcommand("validate", "relation and Casimir checks for level m");
  c_validate->add_option("--m", m)->required();

  auto* c_theta = app.add_subcommand("theta", "image of a monomial in the capped completion");
  c_theta->add_option("--mono", mono_spec, "e.g. k=-1,n=2,p=1")->required();
  c_theta->add_option("--cap", cap_override);

  auto* c_cmn = app.add_subcommand("cmn", "spectral projector building block C_{m,n}");
  c_cmn->add_option("--m", m)->required();
  c_cmn->add_option("--n", n)->required();
  c_cmn->add_option("--cap", cap_override);

  auto* c_dmn = app.add_subcommand("dmn", "level projector D_{m,N}");
  c_dmn->add_option("--m", m)->required();
  c_dmn->add_option("--N", N)->required();
  c_dmn->add_option("--cap", cap_override);
  c_dmn->add_flag("--one-based", one_based, "take the product over n >= 1 only");

  auto* c_rank = app.add_subcommand("pbw-rank", "independence certificate for monomial images");
  c_rank->add_option("--spec", spec_file, "JSON array of {k,n,p} monomials")->required();
  c_rank->add_option("--cap", cap_override);
  c_rank->add_option("--threshold", threshold);
  c_rank->add_flag("--exact", exact_rank, "exact rank over Q(t) instead of numeric SVD");

  auto* c_cg = app.add_subcommand("cg", "tensor product decomposition of V_m (x) V_n");
  c_cg->add_option("--m", m)->required();
  c_cg->add_option("--n", n)->required();

  auto* c_gamma = app.add_subcommand("gamma", "structure constants of the dual product");
  c_gamma->add_option("--m", m)->required();
  c_gamma->add_option("--n", n)->required();

  auto* c_delta = app.add_subcommand("delta", "coproduct of an elementary sequence");
  c_delta->add_option("--q", q)->required();
  c_delta->add_option("--a", a)->required();
  c_delta->add_option("--b", b)->required();
  c_delta->add_option("--cap", cap_override);

  auto* c_hopf = app.add_subcommand("hopf-check", "antipode axiom on elementary sequences");
  c_hopf->add_option("--q", q)->required();
  c_hopf->add_option("--max-level", max_level);

  auto* c_cl = app.add_subcommand("classical-limit", "numeric gamma near t=1 vs classical");
  c_cl->add_option("--m", m)->required();
  c_cl->add_option("--n", n)->required();
  c_cl->add_option("--eps", eps);

  auto* c_rmat = app.add_subcommand("rmatrix", "R-matrix block on V_m (x) V_n");
  c_rmat->add_option("--m", m)->required();
  c_rmat->add_option("--n", n)->required();
  c_rmat->add_flag("--paper-literal-r", paper_literal);

  auto* c_ybe = app.add_subcommand("ybe", "Yang-Baxter check on a level triple");
  c_ybe->add_option("--levels", levels_spec, "e.g. 1,1,2")->required();
  c_ybe->add_flag("--paper-literal-r", paper_literal);

  auto* c_twist = app.add_subcommand("twist", "ribbon twist scalars up to a level");
  c_twist->add_option("--max-m", max_level);

  auto* c_inv = app.add_subcommand("invariant", "link invariant of a braid closure");
  c_inv->add_option("--braid", braid_spec, "signed generators, e.g. \"1 1 1\"")->required();
  c_inv->add_option("--strands", strands)->required();
  c_inv->add_option("--color", color);
  c_inv->add_flag("--numeric", numeric_inv, "also evaluate at t0");

  auto* c_all = app.add_subcommand("check-all", "aggregate invariant suite");
  c_all->add_option("--max-level", max_level);

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check_numeric_guard(cfg);
    if (!cache_dir_flag.empty()) setenv("QSL2_CACHE_DIR", cache_dir_flag.c_str(), 1);
    const int cap = cap_override >= 0 ? cap_override : cfg.cap;

    if (*c_rep) {
      const auto r = build_rep(m);
      const Matrix& g = gen == "X"      ? r.X
                        : gen == "Y"    ? r.Y
                        : gen == "K"    ? r.K
                        : gen == "Kinv" ? r.Kinv
                                        : r.H;
      if (cfg.format == "json") emit(cfg, matrix_out(cfg, g));
      else print_matrix_pretty(cfg, g, std::cout);
      return 0;
    }
    if (*c_validate) return print_report(cfg, validate_rep(m));
    if (*c_theta) {
      print_trunc(cfg, theta(parse_mono_spec(mono_spec), cap));
      return 0;
    }
    if (*c_cmn) {
      if (m == n) throw CLI::ValidationError("--n", "requires distinct levels");
      print_trunc(cfg, cmn_element(m, n, cap));
      return 0;
    }
    if (*c_dmn) {
      print_trunc(cfg, dmn_element(m, N, std::max(cap, N), !one_based));
      return 0;
    }
    if (*c_rank) {
      std::ifstream in(spec_file);
      if (!in) throw CLI::ValidationError("--spec", "cannot open " + spec_file);
      json j;
      in >> j;
      std::vector<PBWMonomial> monos;
      for (const auto& e : j) monos.push_back(mono_from_json(e));
      const int rcap = cap_override >= 0 ? cap_override : rank_cap_rule(monos);
      const RankReport rep =
          pbw_independence_rank(monos, rcap, cfg.t0(), threshold, exact_rank);
      if (cfg.format == "json") emit(cfg, to_json(rep));
      else
        std::cout << "rank " << rep.rank << " of " << rep.count << " (cap " << rcap << ", "
                  << (rep.exact_mode ? "exact" : "numeric") << ")\n";
      return rep.full_rank ? 0 : 1;
    }
    if (*c_cg) {
      const auto cg = tensor_decompose(m, n);
      if (cfg.format == "json") {
        emit(cfg, json{{"components", cg.components},
                       {"A", matrix_out(cfg, cg.A)},
                       {"Ainv", matrix_out(cfg, cg.Ainv)}});
      } else {
        std::cout << "components:";
        for (int c : cg.components) std::cout << ' ' << c;
        std::cout << "\nA:\n";
        print_matrix_pretty(cfg, cg.A, std::cout);
        std::cout << "Ainv:\n";
        print_matrix_pretty(cfg, cg.Ainv, std::cout);
      }
      return 0;
    }
    if (*c_gamma) {
      const GammaTable tab = gamma_table_disk_cached(m, n, cfg.numeric() ? "numeric" : "exact");
      if (cfg.format == "csv") std::cout << gamma_to_csv(tab);
      else emit(cfg, to_json(tab));
      return 0;
    }
    if (*c_delta) {
      const TensorElement d = delta_elem({q, a, b}, cap);
      json blocks = json::array();
      for (const auto& [mn, blk] : d.blocks)
        blocks.push_back(
            json{{"m", mn.first}, {"n", mn.second}, {"block", matrix_out(cfg, blk)}});
      emit(cfg, json{{"cap", d.cap}, {"blocks", std::move(blocks)}});
      return 0;
    }
    if (*c_hopf) {
      CheckReport rep;
      for (int aa = 0; aa <= q; ++aa)
        for (int bb = 0; bb <= q; ++bb)
          for (int r = 0; r <= max_level; ++r)
            rep.items.push_back({"hopf(q=" + std::to_string(q) + ",a=" + std::to_string(aa) +
                                     ",b=" + std::to_string(bb) + ",r=" + std::to_string(r) + ")",
                                 hopf_axiom_check({q, aa, bb}, r)});
      return print_report(cfg, rep);
    }
    if (*c_cl) {
      const auto rep = classical_limit_gamma(m, n, eps);
      emit(cfg, json{{"m", rep.m},
                     {"n", rep.n},
                     {"eps", rep.eps},
                     {"max_dev", rep.max_dev},
                     {"compared", rep.compared}});
      return 0;
    }
    if (*c_rmat) {
      const auto r = r_matrix(m, n, paper_literal);
      if (cfg.format == "json") emit(cfg, matrix_out(cfg, r.matrix));
      else print_matrix_pretty(cfg, r.matrix, std::cout);
      return 0;
    }
    if (*c_ybe) {
      const auto ls = parse_levels(levels_spec, 3);
      const bool ok = check_ybe(ls[0], ls[1], ls[2], paper_literal);
      std::cout << (ok ? "PASS" : "FAIL") << " ybe(" << levels_spec << ")\n";
      return ok ? 0 : 1;
    }
    if (*c_twist) {
      const TwistTable tab = twist_table(max_level);
      if (cfg.format == "csv") std::cout << twist_to_csv(tab);
      else emit(cfg, to_json(tab));
      return 0;
    }
    if (*c_inv) {
      const auto res = link_invariant(parse_braid(braid_spec, strands), color);
      json j = to_json(res);
      if (numeric_inv || cfg.numeric()) j["normalized_at_t0"] = to_json(res.normalized.eval(cfg.t0()));
      emit(cfg, j);
      return 0;
    }
    if (*c_all) return print_report(cfg, check_all(max_level));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
