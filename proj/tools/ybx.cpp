// ybx: compute 3D R / 3D L / S(z) elements and run the verifiers.
//
// Exit codes: 0 pass, 1 mismatch, 2 usage error, 3 precondition violation.
// Output format: --output, else $YBX_OUTPUT, else "table".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybx/crystal.hpp"
#include "ybx/errors.hpp"
#include "ybx/json_io.hpp"
#include "ybx/qgroup.hpp"
#include "ybx/smatrix.hpp"
#include "ybx/tetrahedron.hpp"
#include "ybx/threed.hpp"

namespace {

using nlohmann::json;
using namespace ybx;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string output;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string out_file;

  bool json_mode() const { return output == "json"; }
};

StateVector parse_vec(const std::string& text, const std::string& flag, std::size_t expected = 0) {
  StateVector v;
  try {
    v = parse_state(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + flag + ": expected a comma list of nonnegative integers, got '" + text + "'");
  }
  if (expected != 0 && v.size() != expected) {
    throw UsageError("--" + flag + ": expected " + std::to_string(expected) + " entries");
  }
  return v;
}

Signature parse_sig(const std::string& text) {
  try {
    return Signature::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--eps: expected a bit string such as 101, got '" + text + "'");
  }
}

ExactRational parse_rational(const std::string& text, const std::string& flag) {
  ExactRational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw UsageError("--" + flag + ": not a rational number: " + text);
  if (r.get_den() == 0) throw UsageError("--" + flag + ": zero denominator");
  r.canonicalize();
  return r;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (!cfg.out_file.empty()) {
    std::ofstream f(cfg.out_file);
    if (!f) throw UsageError("cannot write " + cfg.out_file);
    f << j.dump(2) << '\n';
  }
  if (cfg.json_mode()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check << ": " << r.identity << " (" << r.cases << " cases)\n";
  for (const auto& m : r.mismatches) os << "  mismatch: " << m << '\n';
  return os.str();
}

int emit_report(const RunConfig& cfg, const Report& r) {
  emit(cfg, r.to_json(), report_text(r));
  return r.pass ? kPass : kMismatch;
}

// Random rational avoiding the listed values; numerators and denominators in [1, 9].
ExactRational sample_rational(std::mt19937_64& rng, const std::vector<ExactRational>& avoid) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (;;) {
    ExactRational r(num(rng), den(rng));
    r.canonicalize();
    if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) return r;
  }
}

// ---------------------------------------------------------------- element

struct ElementArgs {
  std::string kind;
  std::string upper, lower;
  std::string eps, a, b, i, j;
};

int cmd_element(const RunConfig& cfg, const ElementArgs& args) {
  if (args.kind == "r" || args.kind == "l") {
    if (args.upper.empty() || args.lower.empty()) throw UsageError("element " + args.kind + " needs --upper and --lower");
    const StateVector up = parse_vec(args.upper, "upper", 3), lo = parse_vec(args.lower, "lower", 3);
    if (args.kind == "l" && (up[0] > 1 || up[1] > 1 || lo[0] > 1 || lo[1] > 1)) {
      throw PreconditionError("3D L indices a, b, i, j must lie in {0, 1}");
    }
    const LaurentPoly v = threed::layer_elem(args.kind == "r" ? threed::LayerKind::R : threed::LayerKind::L, up[0],
                                             up[1], up[2], lo[0], lo[1], lo[2]);
    json j = {{"schema", "ybx/1"}, {"kind", args.kind}, {"upper", up}, {"lower", lo},
              {"value", io::to_json(v)}, {"text", to_string(v)}};
    emit(cfg, j, to_string(v));
    return kPass;
  }
  if (args.eps.empty() || args.a.empty() || args.b.empty() || args.i.empty() || args.j.empty()) {
    throw UsageError("element s needs --eps --a --b --i --j");
  }
  const Signature eps = parse_sig(args.eps);
  const std::size_t n = static_cast<std::size_t>(eps.size());
  const StateVector a = parse_vec(args.a, "a"), b = parse_vec(args.b, "b"), i = parse_vec(args.i, "i"),
                    j = parse_vec(args.j, "j");
  for (const auto* v : {&a, &b, &i, &j}) {
    if (v->size() != n) throw PreconditionError("vectors must have one entry per signature position");
    if (!eps.admits(*v)) throw PreconditionError("vector " + to_string(*v) + " is not admissible under " + eps.to_string());
  }
  const SpectralSum s = smatrix::s_element(eps, a, b, i, j);
  const RationalFunction f = spectral_to_fraction(s);
  json out = {{"schema", "ybx/1"}, {"kind", "s"}, {"eps", eps.to_string()}, {"a", to_string(a)}, {"b", to_string(b)},
              {"i", to_string(i)}, {"j", to_string(j)}, {"value", io::to_json(s)}, {"fraction", f.to_string()}};
  emit(cfg, out, f.to_string());
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string target;
  std::string input, eps, levels, alpha, beta, gamma, fock, column, kind = "rrrr";
  std::string q, x, y;
  int l = -1, m = -1;
  int max_sum = -1, max_fock = -1, max_entry = -1, bound = 4, points = 1;
  bool signed_lower = false;
};

std::array<int, 3> parse_levels(const std::string& text) {
  const StateVector v = parse_vec(text, "levels", 3);
  return {v[0], v[1], v[2]};
}

int require_nonneg(int v, const std::string& flag) {
  if (v < 0) throw UsageError("--" + flag + " is required and must be nonnegative");
  return v;
}

// Calls fn at the explicit (q, x, y) when given, else at `points` random
// points from the seed; a random point that hits a pole is redrawn.
template <typename Fn>
nlohmann::json for_each_point(const RunConfig& cfg, const VerifyArgs& a, Fn&& fn) {
  json used = json::array();
  if (!a.q.empty() || !a.x.empty() || !a.y.empty()) {
    if (a.q.empty() || a.x.empty() || a.y.empty()) throw UsageError("give all of --q --x --y or none");
    const ExactRational q = parse_rational(a.q, "q"), x = parse_rational(a.x, "x"), y = parse_rational(a.y, "y");
    fn(q, x, y);
    used.push_back({q.get_str(), x.get_str(), y.get_str()});
    return used;
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < a.points; ++t) {
    for (int attempt = 0;; ++attempt) {
      const ExactRational q = sample_rational(rng, {0, 1, -1});
      const ExactRational x = sample_rational(rng, {0}), y = sample_rational(rng, {0});
      try {
        fn(q, x, y);
        used.push_back({q.get_str(), x.get_str(), y.get_str()});
        break;
      } catch (const PoleAtPoint&) {
        if (attempt == 100) throw;
      }
    }
  }
  return used;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  const std::string& t = a.target;
  if (t == "te-rrrr" || t == "te-rlll") {
    const bool rrrr = t == "te-rrrr";
    if (!a.input.empty()) {
      const StateVector v = parse_vec(a.input, "input", 6);
      const std::array<int, 6> in{v[0], v[1], v[2], v[3], v[4], v[5]};
      if (!rrrr && (in[0] > 1 || in[1] > 1 || in[2] > 1)) throw PreconditionError("V legs take values 0 or 1");
      return emit_report(cfg, rrrr ? threed::verify_te_rrrr(in) : threed::verify_te_rlll(in));
    }
    if (rrrr) return emit_report(cfg, threed::sweep_te_rrrr(a.max_sum < 0 ? 2 : a.max_sum, cfg.jobs));
    return emit_report(cfg, threed::sweep_te_rlll(a.max_fock < 0 ? 3 : a.max_fock, cfg.jobs));
  }
  if (t == "te-n") {
    if (a.eps.empty()) throw UsageError("te-n needs --eps");
    const Signature eps = parse_sig(a.eps);
    if (!a.alpha.empty()) {
      const std::size_t n = static_cast<std::size_t>(eps.size());
      const StateVector fk = parse_vec(a.fock.empty() ? "0,0,0" : a.fock, "fock", 3);
      const StateVector al = parse_vec(a.alpha, "alpha", n), be = parse_vec(a.beta, "beta", n),
                        ga = parse_vec(a.gamma, "gamma", n);
      for (const auto* v : {&al, &be, &ga}) {
        if (!eps.admits(*v)) throw PreconditionError("layer input " + to_string(*v) + " not admissible");
      }
      return emit_report(cfg, threed::verify_te_nlayer(eps, al, be, ga, {fk[0], fk[1], fk[2]}));
    }
    return emit_report(cfg, threed::sweep_te_nlayer(eps, a.max_entry < 0 ? 1 : a.max_entry, cfg.jobs));
  }
  if (t == "te-comb") {
    threed::CombKind kind;
    if (a.kind == "rrrr") {
      kind = threed::CombKind::RRRR;
    } else if (a.kind == "rlll") {
      kind = threed::CombKind::RLLL;
    } else {
      throw UsageError("--kind must be rrrr or rlll");
    }
    if (!a.input.empty()) {
      const StateVector v = parse_vec(a.input, "input", 6);
      auto ch = threed::combinatorial_chains(kind, {v[0], v[1], v[2], v[3], v[4], v[5]});
      auto show = [](const std::vector<threed::Tuple6>& c) {
        json arr = json::array();
        for (const auto& s : c) arr.push_back(to_string(StateVector(s.begin(), s.end())));
        return arr;
      };
      Report r;
      r.check = "te-comb";
      r.identity = "q = 0 chains of both sides";
      r.cases = 1;
      if (ch.lhs.back() != ch.rhs.back()) r.fail("final states differ");
      r.detail = {{"lhs_chain", show(ch.lhs)}, {"rhs_chain", show(ch.rhs)}};
      std::string text = report_text(r) + "  lhs: " + r.detail["lhs_chain"].dump() + "\n  rhs: " +
                         r.detail["rhs_chain"].dump() + "\n";
      emit(cfg, r.to_json(), text);
      return r.pass ? kPass : kMismatch;
    }
    return emit_report(cfg, threed::verify_combinatorial_te(kind, a.max_entry < 0 ? 3 : a.max_entry));
  }
  if (t == "r-props") return emit_report(cfg, threed::check_r_properties(a.bound));

  if (a.eps.empty()) throw UsageError(t + " needs --eps");
  const Signature eps = parse_sig(a.eps);

  if (t == "ybe-comb") {
    if (a.levels.empty()) throw UsageError("ybe-comb needs --levels k,l,m");
    auto [k, l, m] = parse_levels(a.levels);
    return emit_report(cfg, crystal::verify_ybe_comb(eps, k, l, m));
  }
  if (t == "inverse") {
    return emit_report(cfg, crystal::verify_inverse(eps, require_nonneg(a.l, "l"), require_nonneg(a.m, "m")));
  }
  if (t == "limit-theorem") {
    const int l = require_nonneg(a.l, "l"), m = require_nonneg(a.m, "m");
    std::optional<std::pair<StateVector, StateVector>> col;
    if (!a.column.empty()) {
      const auto sep = a.column.find(':');
      if (sep == std::string::npos) throw UsageError("--column expects i:j, e.g. 01313:10210");
      col = std::make_pair(parse_vec(a.column.substr(0, sep), "column"), parse_vec(a.column.substr(sep + 1), "column"));
    }
    return emit_report(cfg, smatrix::verify_limit_theorem(eps, l, m, col, cfg.jobs,
                                                          a.signed_lower ? smatrix::LimitSign::LowerLevel
                                                                         : smatrix::LimitSign::Literal));
  }
  if (t == "ybe-s") {
    if (a.levels.empty()) throw UsageError("ybe-s needs --levels k,l,m");
    auto [k, l, m] = parse_levels(a.levels);
    const smatrix::SBlock kl = smatrix::s_block(eps, k, l, cfg.jobs), km = smatrix::s_block(eps, k, m, cfg.jobs),
                          lm = smatrix::s_block(eps, l, m, cfg.jobs);
    Report total;
    total.check = "ybe-s";
    total.identity = "S12(x) S13(xy) S23(y) = S23(y) S13(xy) S12(x)";
    const json points = for_each_point(cfg, a, [&](const ExactRational& q, const ExactRational& x,
                                                   const ExactRational& y) {
      total.absorb(smatrix::verify_ybe_point(kl, km, lm, q, x, y));
    });
    total.detail = {{"eps", eps.to_string()}, {"levels", {k, l, m}}, {"points", points}};
    return emit_report(cfg, total);
  }
  if (t == "intertwiner") {
    const int l = require_nonneg(a.l, "l"), m = require_nonneg(a.m, "m");
    Report total;
    total.check = "intertwiner";
    total.identity = "Delta'(g) S_{l,m}(x/y) = S_{l,m}(x/y) Delta(g)";
    const json points = for_each_point(cfg, a, [&](const ExactRational& q, const ExactRational& x,
                                                   const ExactRational& y) {
      Report point = qgroup::verify_intertwiner(eps, l, m, q, x, y);
      total.absorb(qgroup::check_algebra_relations(eps, l, q, x));
      total.absorb(qgroup::check_algebra_relations(eps, m, q, y));
      total.absorb(point);
    });
    total.detail = {{"eps", eps.to_string()}, {"l", l}, {"m", m}, {"points", points}};
    return emit_report(cfg, total);
  }
  throw UsageError("unknown verify target: " + t);
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string target, eps;
  int l = -1, m = -1;
};

int cmd_table(const RunConfig& cfg, const TableArgs& a) {
  if (a.eps.empty()) throw UsageError("table needs --eps");
  const Signature eps = parse_sig(a.eps);
  const int l = require_nonneg(a.l, "l");
  std::ostringstream text;
  json out;
  if (a.target == "crystal") {
    json vecs = json::array();
    for (const auto& v : crystal::enumerate_crystal(eps, l)) {
      vecs.push_back(v.to_string());
      text << v.to_string() << '\n';
    }
    out = {{"schema", "ybx/1"}, {"table", "crystal"}, {"eps", eps.to_string()}, {"l", l}, {"vectors", vecs}};
  } else if (a.target == "s-block") {
    const smatrix::SBlock blk = smatrix::s_block(eps, l, require_nonneg(a.m, "m"), cfg.jobs);
    out = io::to_json(blk);
    const smatrix::DegreeStats st = smatrix::degree_stats(blk);
    out["degree_stats"] = {{"nonzero_entries", st.nonzero_entries},
                           {"max_terms", st.max_terms},
                           {"min_q_degree", st.min_q_degree},
                           {"max_q_degree", st.max_q_degree},
                           {"min_slope", st.min_slope},
                           {"max_slope", st.max_slope},
                           {"max_numerator_z_degree", st.max_numerator_z_degree}};
    for (const auto& [key, s] : blk.entries) {
      text << "S^{" << to_string(blk.basis_l[key[0]]) << "," << to_string(blk.basis_m[key[1]]) << "}_{"
           << to_string(blk.basis_l[key[2]]) << "," << to_string(blk.basis_m[key[3]])
           << "} = " << spectral_to_fraction(s).to_string() << '\n';
    }
  } else if (a.target == "comb-r-map") {
    const int m = require_nonneg(a.m, "m");
    json rows = json::array();
    for (const auto& i : crystal::enumerate_crystal(eps, l)) {
      for (const auto& j : crystal::enumerate_crystal(eps, m)) {
        const crystal::CombR r = crystal::comb_r(i, j);
        json row = io::to_json(r);
        row["i"] = i.to_string();
        row["j"] = j.to_string();
        rows.push_back(row);
        text << i.to_string() << " (x) " << j.to_string() << " -> " << r.b.to_string() << " (x) " << r.a.to_string()
             << "  H=" << r.energy << '\n';
      }
    }
    out = {{"schema", "ybx/1"}, {"table", "comb-r-map"}, {"eps", eps.to_string()}, {"l", l}, {"m", m}, {"map", rows}};
  } else {
    throw UsageError("unknown table target: " + a.target);
  }
  if (!cfg.out_file.empty() && !cfg.json_mode()) {
    emit(cfg, out, "wrote " + cfg.out_file);
  } else {
    emit(cfg, out, text.str());
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3D R / S(z) / combinatorial R computations and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv("YBX_OUTPUT")) cfg.output = env;
  std::string output_flag;
  app.add_option("--output", output_flag, "json or table (default from YBX_OUTPUT, else table)")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for random parameter points");

  ElementArgs el;
  auto* element = app.add_subcommand("element", "print one matrix element");
  element->add_option("kind", el.kind, "r, l or s")->required()->check(CLI::IsMember({"r", "l", "s"}));
  element->add_option("--upper", el.upper, "a,b,c");
  element->add_option("--lower", el.lower, "i,j,k");
  element->add_option("--eps", el.eps, "signature bit string");
  element->add_option("--a", el.a);
  element->add_option("--b", el.b);
  element->add_option("--i", el.i);
  element->add_option("--j", el.j);
  element->add_option("--out", cfg.out_file, "also write JSON to this file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verifier; exit 0 on pass, 1 on mismatch");
  verify
      ->add_option("target", va.target)
      ->required()
      ->check(CLI::IsMember({"te-rrrr", "te-rlll", "te-n", "te-comb", "ybe-s", "ybe-comb", "intertwiner",
                             "limit-theorem", "r-props", "inverse"}));
  verify->add_option("--input", va.input, "single basis vector, e.g. 0,0,0,0,0,0");
  verify->add_option("--eps", va.eps);
  verify->add_option("--levels", va.levels, "k,l,m");
  verify->add_option("--l", va.l);
  verify->add_option("--m", va.m);
  verify->add_option("--alpha", va.alpha);
  verify->add_option("--beta", va.beta);
  verify->add_option("--gamma", va.gamma);
  verify->add_option("--fock", va.fock, "m4,m5,m6");
  verify->add_option("--column", va.column, "restrict to one column i:j");
  verify->add_option("--kind", va.kind, "rrrr or rlll (te-comb)");
  verify->add_option("--max-sum", va.max_sum);
  verify->add_option("--max-fock", va.max_fock);
  verify->add_option("--max-entry", va.max_entry);
  verify->add_option("--bound", va.bound);
  verify->add_option("--points", va.points, "random parameter points")->check(CLI::PositiveNumber);
  verify->add_option("--q", va.q);
  verify->add_option("--x", va.x);
  verify->add_option("--y", va.y);
  verify->add_flag("--signed-lower", va.signed_lower, "expect (-1)^(m-l) z^H when l < m");
  verify->add_option("--out", cfg.out_file, "also write the JSON report to this file");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "emit a full table as JSON");
  table->add_option("target", ta.target)->required()->check(CLI::IsMember({"s-block", "crystal", "comb-r-map"}));
  table->add_option("--eps", ta.eps);
  table->add_option("--l", ta.l);
  table->add_option("--m", ta.m);
  table->add_option("--out", cfg.out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!output_flag.empty()) cfg.output = output_flag;
  if (cfg.output.empty()) cfg.output = "table";
  if (cfg.output != "json" && cfg.output != "table") {
    std::cerr << "YBX_OUTPUT must be json or table\n";
    return kUsage;
  }

  try {
    if (element->parsed()) return cmd_element(cfg, el);
    if (verify->parsed()) return cmd_verify(cfg, va);
    if (table->parsed()) return cmd_table(cfg, ta);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
