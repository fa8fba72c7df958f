#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "moplab/core/parse.hpp"
#include "moplab/silab/archive.hpp"
#include "moplab/silab/resolve.hpp"

using namespace moplab;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Args {
  std::string model, shape, sub, params, suite;
  std::string format = "json";
  std::string variant = "resolved";
  std::string out;
  std::optional<int> nv, max_size;
  uint64_t seed = kDefaultSeed;
};

ModelKind parse_model(const std::string& s) {
  static const std::map<std::string, ModelKind> names{
      {"gaussian", ModelKind::GaussianHermite}, {"hermite", ModelKind::GaussianHermite},
      {"gaussian-hermite", ModelKind::GaussianHermite}, {"selberg", ModelKind::SelbergJacobi},
      {"jacobi", ModelKind::SelbergJacobi}, {"selberg-jacobi", ModelKind::SelbergJacobi},
      {"mp", ModelKind::MeixnerPollaczek}, {"meixner-pollaczek", ModelKind::MeixnerPollaczek},
      {"wilson", ModelKind::Wilson}};
  auto it = names.find(s);
  if (it == names.end()) throw UsageError("unknown model: " + s);
  return it->second;
}

// "k=v,k=v"; values are rationals or expressions in free symbols.
std::map<std::string, ParamScalar> parse_params(const std::string& text) {
  std::map<std::string, ParamScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad --params entry: " + item);
    out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return out;
}

ModelId<ParamScalar> symbolic_with(ModelKind k, const std::map<std::string, ParamScalar>& given) {
  auto m = symbolic_model(k);
  for (auto& [name, v] : given) {
    if (!m.params.count(name)) throw UsageError("parameter " + name + " is not used by " + model_name(k));
    m.params[name] = v;
  }
  return m;
}

int nvars_for(const Args& a, const Partition& r) { return a.nv.value_or(std::max(1, r.length())); }

Json flat(const std::map<Partition, ParamScalar>& m) {
  Json j = Json::object();
  for (auto it = m.rbegin(); it != m.rend(); ++it) j[it->first.str()] = it->second.str();
  return j;
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") os << "key,value\n";
  for (auto& [k, v] : j.items()) {
    std::string val = v.is_string() ? v.get<std::string>() : v.dump();
    if (format == "csv")
      os << detail::csv_field(k) << ',' << detail::csv_field(val) << '\n';
    else
      os << k << " = " << val << '\n';
  }
  return os.str();
}

std::string render(const SuiteResult& s, const std::string& format) {
  if (format == "json") return suite_json(s).dump(2) + "\n";
  if (format == "csv") return suite_csv(s);
  return suite_pretty(s);
}

void write(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

Json cmd_schur(const Args& a) {
  std::map<Partition, ParamScalar> m;
  auto s = schur(Partition::parse(a.shape));
  for (auto& [lam, c] : s.terms()) m[lam] = ParamScalar(c);
  return flat(m);
}

Json cmd_jack(const Args& a) {
  auto given = parse_params(a.params);
  ParamScalar beta = ParamScalar::symbol("beta");
  for (auto& [k, v] : given) {
    if (k != "beta") throw UsageError("jack takes only beta");
    beta = v;
  }
  std::map<Partition, ParamScalar> m;
  auto p = jack(Partition::parse(a.shape), JackParams<ParamScalar>{beta});
  for (auto& [lam, c] : p.terms()) m[lam] = c;
  return flat(m);
}

Json cmd_expand(const Args& a) {
  auto m = symbolic_with(parse_model(a.model), parse_params(a.params));
  Partition r = Partition::parse(a.shape);
  return flat(multivariate(orthogonal_family(m), r, nvars_for(a, r)).coeffs);
}

Json cmd_moments(const Args& a) {
  auto m = symbolic_with(parse_model(a.model), parse_params(a.params));
  Partition r = Partition::parse(a.shape);
  return Json{{"value", andreief_expectation(base_family(m), r, nvars_for(a, r)).str()}};
}

Json cmd_coeffs(const Args& a) {
  ModelKind k = parse_model(a.model);
  auto m = symbolic_with(k, parse_params(a.params));
  Partition r = Partition::parse(a.shape), q = Partition::parse(a.sub);
  if (!r.contains(q)) throw NotContained(q.str() + " is not contained in " + r.str());
  int n = nvars_for(a, r);
  auto fam = orthogonal_family(m);
  Json j;
  j["C"] = multivariate(fam, r, n).at(q).str();
  j["Cinv"] = inverse_expansion(fam, r, n).at(q).str();
  if (k == ModelKind::SelbergJacobi) j["ctilde"] = ctilde(r, q, n).str();
  if (k == ModelKind::Wilson) {
    try {
      j["alpha"] = alpha_factored_str(alpha_wilson(r, q, n));
    } catch (const ZeroCoefficient&) {
      j["alpha"] = nullptr;
    }
  }
  return j;
}

// A named suite, or verify_si for one model and shape.
SuiteResult cmd_verify(const Args& a) {
  SuiteOptions opt;
  opt.max_size = a.max_size;
  opt.nvars = a.nv;
  opt.seed = a.seed;
  opt.variant = parse_variant(a.variant);
  opt.params = parse_params(a.params);
  if (!a.suite.empty()) return run_suite(a.suite, opt);
  if (a.model.empty() || a.shape.empty()) throw UsageError("verify needs --suite, or --model with --shape");
  ModelKind k = parse_model(a.model);
  Partition r = Partition::parse(a.shape);
  std::vector<std::string> names = model_parameters(k);
  auto values = detail::suite_params(names, opt);
  SuiteResult res{"si", opt.seed, variant_name(opt.variant), {}};
  auto run = [&](auto tag) {
    using F = decltype(tag);
    auto m = detail::model_from<F>(k, values);
    int n = nvars_for(a, r);
    if (opt.variant != Variant::PaperLiteral) res.cases.push_back(verify_si(m, r, n, ClosedForm::resolved(k)));
    if (opt.variant != Variant::Resolved) res.cases.push_back(verify_si(m, r, n, ClosedForm::paper_literal(k)));
  };
  if (detail::all_constant(values))
    run(GaussianRational{});
  else
    run(ParamScalar{});
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate orthogonal polynomials and superintegrability checks"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", a.out, "output path (default stdout)");
  };
  auto* schur_cmd = app.add_subcommand("schur", "Schur function in power sums");
  schur_cmd->add_option("--shape", a.shape, "partition, e.g. 2,1")->required();
  common(schur_cmd);

  auto* jack_cmd = app.add_subcommand("jack", "Jack P function in power sums");
  jack_cmd->add_option("--shape", a.shape)->required();
  jack_cmd->add_option("--params", a.params, "beta=<value>");
  common(jack_cmd);

  auto model_opts = [&](CLI::App* sub, bool need_shape) {
    sub->add_option("--model", a.model, "gaussian|hermite, selberg|jacobi, mp, wilson")->required();
    auto* s = sub->add_option("--shape", a.shape);
    if (need_shape) s->required();
    sub->add_option("--nv", a.nv, "number of variables")->check(CLI::PositiveNumber);
    sub->add_option("--params", a.params, "k=v[,k=v...]");
  };
  auto* expand_cmd = app.add_subcommand("expand", "P_R in the base functions Theta_Q");
  model_opts(expand_cmd, true);
  common(expand_cmd);

  auto* moments_cmd = app.add_subcommand("moments", "<Theta_R> via the Andreief oracle");
  model_opts(moments_cmd, true);
  common(moments_cmd);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "expansion coefficients C_RQ and inverse");
  model_opts(coeffs_cmd, true);
  coeffs_cmd->add_option("--sub", a.sub, "sub-partition Q")->required();
  common(coeffs_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", a.suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--model", a.model);
  verify_cmd->add_option("--shape", a.shape);
  verify_cmd->add_option("--nv", a.nv)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--params", a.params, "k=v[,k=v...]");
  verify_cmd->add_option("--max-size", a.max_size)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", a.seed);
  verify_cmd->add_option("--variant", a.variant)->check(CLI::IsMember({"paper-literal", "resolved", "sweep"}));
  common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) {
      SuiteResult res = cmd_verify(a);
      write(render(res, a.format), a.out);
      return res.fail() == 0 ? 0 : 1;
    }
    Json j;
    if (schur_cmd->parsed()) j = cmd_schur(a);
    if (jack_cmd->parsed()) j = cmd_jack(a);
    if (expand_cmd->parsed()) j = cmd_expand(a);
    if (moments_cmd->parsed()) j = cmd_moments(a);
    if (coeffs_cmd->parsed()) j = cmd_coeffs(a);
    write(render(j, a.format), a.out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "moplab: " << e.what() << '\n';
    return 2;
  }
}
