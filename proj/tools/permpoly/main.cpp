// permpoly: parameter derivation, map evaluation, permutation sweeps,
// symbolic expansion and the verification suite.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permpoly/dickson.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/expand.hpp"
#include "permpoly/extension.hpp"
#include "permpoly/field_table.hpp"
#include "permpoly/maps.hpp"
#include "permpoly/params.hpp"
#include "permpoly/report.hpp"
#include "permpoly/suite.hpp"
#include "permpoly/verify.hpp"

namespace {

using namespace permpoly;
using Json = nlohmann::ordered_json;

enum class Format { Auto, Json, Csv, Text };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;
constexpr int kExitSweep = 4;
constexpr int kExitNotDivisible = 5;

struct Globals {
  Format format = Format::Auto;
  std::string out_path;
  unsigned workers = 0;
  std::optional<unsigned> m_max;
  unsigned ext_m_max = 10;
  bool count_all = false;
};

// A 0/1 flag that may also be "both".
std::vector<unsigned> flag_values(const std::string& text, const char* name) {
  if (text == "0") return {0};
  if (text == "1") return {1};
  if (text == "both") return {0, 1};
  throw ParseError(std::string(name) + " must be 0, 1 or both");
}

unsigned single_flag(const std::string& text, const char* name) {
  const auto v = flag_values(text, name);
  if (v.size() != 1) throw ParseError(std::string(name) + " must be 0 or 1 here");
  return v.front();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Format resolve(Format f, Format fallback) { return f == Format::Auto ? fallback : f; }

struct ParamsArgs {
  unsigned m = 0;
  unsigned k = 0;
};

int cmd_params(const Globals& g, const ParamsArgs& a) {
  const ParamSet base = derive_params(a.m, a.k);
  Output out(g.out_path);
  auto& os = out.stream();
  const Format f = resolve(g.format, Format::Text);
  Json combos = Json::array();
  if (f == Format::Text) {
    os << "m=" << base.m << " k=" << base.k << " r=" << base.r << " m'=" << base.m_prime << " sigma=" << base.sigma << '\n';
  } else if (f == Format::Csv) {
    os << "m,k,r,m',sigma,alpha,beta,lambda,delta,theta\n";
  }
  for (unsigned alpha = 0; alpha < 2; ++alpha) {
    for (unsigned beta = 0; beta < 2; ++beta) {
      for (unsigned lambda = 0; lambda < 2; ++lambda) {
        const ParamSet p = derive_params(a.m, a.k, alpha, beta, 0, lambda);
        if (f == Format::Text) {
          os << "alpha=" << alpha << " beta=" << beta << " lambda=" << lambda << " delta=" << p.delta
             << " theta=" << p.theta << '\n';
        } else if (f == Format::Csv) {
          os << p.m << ',' << p.k << ',' << p.r << ',' << p.m_prime << ',' << p.sigma << ',' << alpha << ',' << beta
             << ',' << lambda << ',' << p.delta << ',' << p.theta << '\n';
        } else {
          combos.push_back({{"alpha", alpha}, {"beta", beta}, {"lambda", lambda}, {"delta", p.delta}, {"theta", p.theta}});
        }
      }
    }
  }
  if (f == Format::Json) {
    Json j{{"m", base.m}, {"k", base.k}, {"r", base.r}, {"m'", base.m_prime}, {"sigma", base.sigma}, {"flags", combos}};
    os << j.dump() << '\n';
  }
  return kExitOk;
}

struct EvalArgs {
  std::string map;
  unsigned m = 0;
  std::optional<unsigned> k;
  std::string alpha = "0", beta = "0", gamma = "0";
  std::optional<unsigned> lambda;
  std::optional<std::string> x;
  std::optional<std::string> z;
  std::optional<std::uint64_t> n;
  std::string method = "recurrence";
  bool cross_check = false;
  unsigned v = 0;
};

int cmd_eval(const Globals& g, const FieldTable& table, const EvalArgs& a) {
  const auto kind = parse_map_kind(a.map);
  if (!kind) throw ParseError("unknown map '" + a.map + "'");
  const BinaryField field = table.make_field(a.m);
  const ExtensionField ext(field);

  const auto need_x = [&] {
    if (!a.x) throw ParseError("map '" + a.map + "' needs --x");
    return parse_element(field, *a.x);
  };
  const auto need_z = [&]() -> ProjectiveValue {
    if (a.z) return parse_projective(ext, *a.z);
    if (a.x) return ExtensionField::embed(parse_element(field, *a.x));
    throw ParseError("map '" + a.map + "' needs --z");
  };
  const auto need_params = [&] {
    if (!a.k) throw ParseError("map '" + a.map + "' needs --k");
    return derive_params(a.m, *a.k, single_flag(a.alpha, "--alpha"), single_flag(a.beta, "--beta"),
                         single_flag(a.gamma, "--gamma"), a.lambda);
  };

  std::string input;
  std::string value;
  switch (*kind) {
    case MapKind::FAlpha:
    case MapKind::GBeta:
    case MapKind::Tk:
    case MapKind::H: {
      const FamilyMaps maps(field, need_params());
      const Gf2mElement x = need_x();
      input = to_hex(x);
      const Gf2mElement y = *kind == MapKind::FAlpha ? maps.f_alpha(x)
                            : *kind == MapKind::GBeta ? maps.g_beta(x)
                            : *kind == MapKind::Tk    ? maps.tk(x)
                                                      : maps.h(x);
      value = to_hex(y);
      break;
    }
    case MapKind::Dickson: {
      if (!a.n) throw ParseError("map 'dickson' needs --n");
      const auto method = parse_dickson_method(a.method);
      if (!method) throw ParseError("unknown method '" + a.method + "'");
      const Gf2mElement x = need_x();
      input = to_hex(x);
      const Gf2mElement y = eval_dickson(ext, *a.n, x, *method);
      value = to_hex(y);
      if (a.cross_check) {
        bool agree = true;
        for (auto other : {DicksonMethod::Recurrence, DicksonMethod::ClosedForm, DicksonMethod::Functional}) {
          const Gf2mElement w = eval_dickson(ext, *a.n, x, other);
          if (w != y) {
            std::cerr << "cross-check: " << dickson_method_name(other) << " gives " << to_hex(w) << ", "
                      << dickson_method_name(*method) << " gives " << value << '\n';
            agree = false;
          }
        }
        if (!agree) return kExitCrossCheck;
      }
      break;
    }
    case MapKind::Phi: {
      const ProjectiveValue z = need_z();
      input = to_hex(ext, z);
      value = to_hex(ext, phi(ext, z));
      break;
    }
    case MapKind::W0:
    case MapKind::W1: {
      const ParamSet p = need_params();
      const ProjectiveValue z = need_z();
      input = to_hex(ext, z);
      value = to_hex(ext, w_map(ext, p, *kind == MapKind::W0 ? 0 : 1, z));
      break;
    }
    case MapKind::Tau: {
      if (a.v > 1) throw ParseError("--v must be 0 or 1");
      const Gf2mElement x = need_x();
      input = to_hex(x);
      value = to_hex(tau(a.v, x));
      break;
    }
  }

  Output out(g.out_path);
  auto& os = out.stream();
  switch (resolve(g.format, Format::Text)) {
    case Format::Json:
      os << Json{{"map", a.map}, {"m", a.m}, {"input", input}, {"value", value}}.dump() << '\n';
      break;
    case Format::Csv:
      os << "map,m,input,value\n" << a.map << ',' << a.m << ',' << input << ',' << value << '\n';
      break;
    default:
      os << value << '\n';
  }
  return kExitOk;
}

struct SweepArgs {
  unsigned m_min = 2;
  std::optional<unsigned> m;
  std::optional<unsigned> k_min, k_max;
  std::string alpha = "both", gamma = "both";
};

int cmd_sweep(const Globals& g, const FieldTable& table, const SweepArgs& a) {
  unsigned m_lo = a.m.value_or(a.m_min);
  unsigned m_hi = a.m.value_or(g.m_max.value_or(12));
  if (m_lo < 2 || m_lo > m_hi) throw OutOfRange("empty or invalid m range " + std::to_string(m_lo) + ".." + std::to_string(m_hi));
  const auto alphas = flag_values(a.alpha, "--alpha");
  const auto gammas = flag_values(a.gamma, "--gamma");
  const VerifyOptions opts{g.workers, g.count_all};

  Output out(g.out_path);
  auto& os = out.stream();
  const Format f = resolve(g.format, Format::Csv);
  if (f == Format::Csv) os << sweep_csv_header() << '\n';
  bool all_agree = true;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    const BinaryField field = table.make_field(m);
    const unsigned k_lo = a.k_min.value_or(1);
    const unsigned k_hi = std::min(a.k_max.value_or(m - 1), m - 1);
    for (unsigned k = k_lo; k <= k_hi; ++k) {
      if (std::gcd(k, m) != 1) {
        std::cerr << "skipping m=" << m << " k=" << k << ": gcd(k,m) != 1\n";
        continue;
      }
      for (const auto& r : check_main_theorem(field, k, opts)) {
        if (std::find(alphas.begin(), alphas.end(), r.alpha) == alphas.end()) continue;
        if (std::find(gammas.begin(), gammas.end(), r.gamma) == gammas.end()) continue;
        all_agree = all_agree && r.agrees();
        if (f == Format::Csv) {
          os << to_csv(r) << '\n';
        } else if (f == Format::Json) {
          os << to_json(r) << '\n';
        } else {
          os << to_text(r) << '\n';
        }
      }
    }
  }
  return all_agree ? kExitOk : kExitSweep;
}

struct ExpandArgs {
  unsigned m = 0;
  unsigned k = 0;
  std::string alpha = "0", gamma = "0";
  bool reduce = false;
};

int cmd_expand(const Globals& g, const ExpandArgs& a) {
  const ParamSet p = derive_params(a.m, a.k, single_flag(a.alpha, "--alpha"), 0, single_flag(a.gamma, "--gamma"));
  SparsePolyF2 poly = expand_h(p);
  if (a.reduce) poly = sp_reduce_mod_field(poly, a.m);
  Output out(g.out_path);
  auto& os = out.stream();
  switch (resolve(g.format, Format::Text)) {
    case Format::Json: {
      Json exps = Json::array();
      for (const auto& e : poly.exponents()) exps.push_back(e.str());
      os << Json{{"m", p.m}, {"k", p.k}, {"alpha", p.alpha}, {"gamma", p.gamma}, {"reduced", a.reduce}, {"exponents", exps}}.dump()
         << '\n';
      break;
    }
    case Format::Csv:
      os << "exponent\n";
      for (const auto& e : poly.exponents()) os << e.str() << '\n';
      break;
    default:
      os << to_string(poly) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Globals& g, const FieldTable& table, const std::string& suite) {
  if (!is_suite_name(suite)) throw ParseError("unknown check: " + suite);
  SuiteConfig config;
  config.m_max = g.m_max.value_or(6);
  config.ext_m_max = g.ext_m_max;
  config.table = table;
  config.options = VerifyOptions{g.workers, g.count_all};

  Output out(g.out_path);
  auto& os = out.stream();
  const Format f = resolve(g.format, Format::Json);
  if (f == Format::Csv) os << outcome_csv_header() << '\n';
  bool all_passed = true;
  run_suite(suite, config, [&](const CheckOutcome& o) {
    all_passed = all_passed && o.passed;
    if (f == Format::Json) {
      os << to_json(o, g.count_all) << '\n';
    } else if (f == Format::Csv) {
      os << to_csv(o) << '\n';
    } else {
      os << to_text(o) << '\n';
    }
    os.flush();
  });
  return all_passed ? kExitOk : kExitSweep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation polynomials H_{alpha,gamma} over GF(2^m): evaluation and exhaustive checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  app.add_option("--format", g.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads (0 = available parallelism)");
  app.add_option("--m-max", g.m_max, "Largest extension degree m (verify: 6, sweep: 12)");
  app.add_option("--ext-m-max", g.ext_m_max, "Largest m for sweeps over GF(q^2)")->capture_default_str();
  app.add_flag("--count-all", g.count_all, "Keep going after the first counterexample and count failures");

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "Derive r, m', sigma, delta and theta");
  params->add_option("--m", pa.m)->required();
  params->add_option("--k", pa.k)->required();

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one map: f g tk h dickson phi w0 w1 tau");
  eval->add_option("map", ea.map)->required();
  eval->add_option("--m", ea.m)->required();
  eval->add_option("--k", ea.k);
  eval->add_option("--alpha", ea.alpha);
  eval->add_option("--beta", ea.beta);
  eval->add_option("--gamma", ea.gamma);
  eval->add_option("--lambda", ea.lambda);
  eval->add_option("--x", ea.x, "Element of GF(2^m) in hex");
  eval->add_option("--z", ea.z, "Element of GF(q^2) in hex, or inf");
  eval->add_option("--n", ea.n, "Dickson index");
  eval->add_option("--method", ea.method, "recurrence, closed or functional")->capture_default_str();
  eval->add_flag("--cross-check", ea.cross_check, "Compare all Dickson methods");
  eval->add_option("--v", ea.v, "Shift for tau");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Brute-force permutation status of H against the parity prediction");
  sweep->add_option("--m-min", sa.m_min)->capture_default_str();
  sweep->add_option("--m", sa.m, "Single m (overrides --m-min/--m-max)");
  sweep->add_option("--k-min", sa.k_min);
  sweep->add_option("--k-max", sa.k_max);
  sweep->add_option("--alpha", sa.alpha, "0, 1 or both")->capture_default_str();
  sweep->add_option("--gamma", sa.gamma, "0, 1 or both")->capture_default_str();

  ExpandArgs xa;
  auto* expand = app.add_subcommand("expand", "Exponent set of H over F_2");
  expand->add_option("--m", xa.m)->required();
  expand->add_option("--k", xa.k)->required();
  expand->add_option("--alpha", xa.alpha);
  expand->add_option("--gamma", xa.gamma);
  expand->add_flag("--reduce", xa.reduce, "Reduce modulo X^q - X");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the exhaustive checks");
  verify->add_option("--suite", suite, "all or one check name")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const FieldTable table = FieldTable::from_environment();
    if (*params) return cmd_params(g, pa);
    if (*eval) return cmd_eval(g, table, ea);
    if (*sweep) return cmd_sweep(g, table, sa);
    if (*expand) return cmd_expand(g, xa);
    if (*verify) return cmd_verify(g, table, suite);
  } catch (const NotDivisible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotDivisible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
