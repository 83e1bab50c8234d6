#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clext/algebra.hpp"
#include "clext/deformations.hpp"
#include "clext/errors.hpp"
#include "clext/fock.hpp"
#include "clext/rep_theory.hpp"
#include "clext/susy.hpp"

namespace clext::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json params = json::object();
  std::vector<RelationCheck> checks;
  json data = json::object();

  void add(const std::string& name, double residual, double tol) {
    checks.push_back({name, residual, tol, residual <= tol});
  }
  void add(const RelationReport& r, const std::string& prefix = "") {
    for (const auto& c : r.checks()) checks.push_back({prefix + c.name, c.residual, c.tol, c.pass});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Storage bound to the command-line flags.
struct Raw {
  int lambda = 0, dim = 0, mu = 0, p = 0, kmax = 1, n0 = 0, nmax = 40;
  std::string alpha, format, family, config;
  double tol = 0.0, q = 1.0, k = 1.0, B = 1.0, b = 1.0, alpha_hat = 0.0, c = 1.0, eta = 0.0,
         phi = 0.0, xi = 1.0, r_mu = 0.0, lambda0 = 0.0;
};

std::string dashed(std::string key) {
  for (auto& ch : key)
    if (ch == '_') ch = '-';
  return key;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Usage("cannot parse number '" + item + "'");
    }
    if (used != item.size()) throw Usage("cannot parse number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Usage("empty number list");
  return out;
}

// Values come from flags first, then the config file, then defaults.
class Resolver {
 public:
  Resolver(const CLI::App* leaf, const Raw& raw, json config) : leaf_(leaf), raw_(raw), config_(std::move(config)) {}

  template <typename T>
  std::optional<T> get(const std::string& key, const T& flag) const {
    const CLI::Option* o = leaf_->get_option_no_throw("--" + dashed(key));
    if (o && o->count() > 0) return flag;
    if (config_.contains(key)) {
      try {
        return config_.at(key).get<T>();
      } catch (const json::exception&) {
        throw Usage("config key '" + key + "' has the wrong type");
      }
    }
    return std::nullopt;
  }

  template <typename T>
  T get_or(const std::string& key, const T& flag, const T& fallback) const {
    return get(key, flag).value_or(fallback);
  }

  template <typename T>
  T require(const std::string& key, const T& flag) const {
    auto v = get(key, flag);
    if (!v) throw Usage("--" + dashed(key) + " is required");
    return *v;
  }

  std::optional<std::vector<double>> alpha() const {
    const CLI::Option* o = leaf_->get_option_no_throw("--alpha");
    if (o && o->count() > 0) return parse_list(raw_.alpha);
    if (!config_.contains("alpha")) return std::nullopt;
    const json& a = config_.at("alpha");
    if (a.is_string()) return parse_list(a.get<std::string>());
    try {
      return a.get<std::vector<double>>();
    } catch (const json::exception&) {
      throw Usage("config key 'alpha' must be a list of numbers");
    }
  }

  const json& config() const { return config_; }
  const Raw& raw() const { return raw_; }

 private:
  const CLI::App* leaf_;
  const Raw& raw_;
  json config_;
};

double resolve_tol(const Resolver& r) {
  double fallback = kDefaultTol;
  if (const char* env = std::getenv("CLEXT_TOL")) {
    try {
      std::size_t used = 0;
      fallback = std::stod(env, &used);
      if (used != std::string(env).size()) throw Usage("");
    } catch (const std::exception&) {
      throw Usage(std::string("CLEXT_TOL is not a number: ") + env);
    }
  }
  const double tol = r.get_or("tol", r.raw().tol, fallback);
  if (!(tol > 0.0)) throw Usage("tolerance must be positive");
  return tol;
}

AlgebraParams resolve_params(const Resolver& r, std::optional<int> fixed_lambda = std::nullopt) {
  int lambda = 0;
  if (fixed_lambda) {
    lambda = *fixed_lambda;
    if (auto l = r.get("lambda", r.raw().lambda); l && *l != lambda)
      throw Usage("this command needs lambda = " + std::to_string(lambda));
  } else if (auto l = r.get("lambda", r.raw().lambda)) {
    lambda = *l;
  } else if (auto p = r.get("p", r.raw().p)) {
    lambda = *p + 1;
  } else {
    throw Usage("--lambda is required");
  }
  if (lambda < 2) throw Usage("lambda must be at least 2");
  auto alpha = r.alpha();
  if (!alpha) throw Usage("--alpha is required");
  if (static_cast<int>(alpha->size()) == lambda - 1) return AlgebraParams::from_free(lambda, *alpha);
  if (static_cast<int>(alpha->size()) == lambda) return AlgebraParams::from_full(*alpha);
  throw Usage("--alpha needs lambda-1 free values");
}

int resolve_dim(const Resolver& r, int lambda) {
  const int dim = r.get_or("dim", r.raw().dim, 20 * lambda);
  if (dim <= 0) throw Usage("--dim must be positive");
  return dim;
}

int resolve_kmax(const Resolver& r) {
  const int kmax = r.get_or("kmax", r.raw().kmax, 1);
  if (kmax < 0) throw Usage("--kmax must be nonnegative");
  return kmax;
}

json params_json(const AlgebraParams& params) {
  return {{"lambda", params.lambda()}, {"alpha", params.alpha()}};
}

json levels_json(const std::vector<Level>& levels) {
  json rows = json::array();
  for (const auto& l : levels)
    rows.push_back({{"n", l.n}, {"k", l.k}, {"mu", l.mu}, {"energy", l.energy},
                    {"degeneracy", l.degeneracy}, {"level", l.level}});
  return rows;
}

// ------------------------------------------------------------------ commands

Report cmd_algebra_info(const Resolver& r) {
  const AlgebraParams params = resolve_params(r);
  Report rep;
  rep.params = params_json(params);
  json kappa = json::array();
  for (const auto& x : kappas_from_alphas(params)) kappa.push_back({x.real(), x.imag()});
  rep.data = {{"alpha", params.alpha()}, {"beta", params.beta()}, {"gamma", params.gamma()},
              {"beta_bar", params.beta_bar()}, {"kappa", kappa}, {"fock_exists", fock_exists(params)}};
  return rep;
}

json descriptor_json(const std::optional<UnirrepDescriptor>& d) {
  if (!d) return {{"kind", "none"}};
  return {{"kind", d->kind == UnirrepKind::BFB ? "BFB" : "FD"}, {"d", d->d}, {"n0", d->n0},
          {"mu0", d->mu0}, {"c", d->c}, {"label", d->label()}};
}

Report cmd_classify(const Resolver& r) {
  const AlgebraParams params = resolve_params(r);
  const int lambda = params.lambda();
  Report rep;
  rep.params = params_json(params);
  std::vector<TableRow> rows;
  if (lambda >= 2 && lambda <= 4) rows = table_report(lambda);
  json out = json::array();
  for (int n0 = 0; n0 < lambda; ++n0) {
    const auto gdoa = classify_gdoa(params, n0);
    const auto oracle = classify_oracle(params, n0, 4 * lambda);
    bool agree = gdoa.has_value() == oracle.has_value();
    if (agree && gdoa)
      agree = gdoa->kind == oracle->kind && gdoa->d == oracle->d && std::abs(gdoa->c - oracle->c) <= kIdentityTol;
    rep.add("oracle agrees at n0 = " + std::to_string(n0), agree ? 0.0 : 1.0, 0.0);
    json row = descriptor_json(gdoa);
    row["residue"] = n0;
    row["near_boundary"] = near_boundary(params, n0);
    row["margin"] = classification_margin(params, n0);
    if (!rows.empty()) {
      std::vector<const TableRow*> hits;
      for (const auto& t : rows)
        if (t.residue == n0 && t.matches(params)) hits.push_back(&t);
      bool consistent = hits.size() <= 1 && (hits.size() == 1) == gdoa.has_value();
      if (consistent && gdoa) {
        consistent = hits[0]->kind == gdoa->kind && hits[0]->d == gdoa->d &&
                     std::abs(hits[0]->c_value(params, n0) - gdoa->c) <= 1e-9;
      }
      rep.add("table row agrees at n0 = " + std::to_string(n0), consistent ? 0.0 : 1.0, 0.0);
      if (hits.size() == 1) row["table_row"] = hits[0]->type_label() + ", c = " + hits[0]->c_text;
    }
    out.push_back(row);
  }
  rep.data["classes"] = out;
  return rep;
}

Report cmd_tables(int lambda) {
  Report rep;
  rep.params = {{"lambda", lambda}};
  json out = json::array();
  for (const auto& t : table_report(lambda)) {
    json conds = json::array();
    for (const auto& c : t.conditions) conds.push_back(c.text);
    out.push_back({{"type", t.type_label()}, {"n0", t.n0_label()}, {"c", t.c_text}, {"conditions", conds}});
  }
  rep.data["rows"] = out;
  return rep;
}

PseudoParams resolve_pseudo(const Resolver& r) {
  PseudoParams pp;
  const std::string fam = r.get_or<std::string>("family", r.raw().family, "one");
  if (fam == "one" || fam == "1") pp.family = PseudoFamily::One;
  else if (fam == "two" || fam == "2") pp.family = PseudoFamily::Two;
  else throw Usage("--family must be one or two");
  pp.mu = r.get_or("mu", r.raw().mu, 0);
  pp.c = r.get_or("c", r.raw().c, 1.0);
  pp.eta = r.get_or("eta", r.raw().eta, std::sqrt(2.0) * std::abs(pp.c));
  pp.phi = r.get_or("phi", r.raw().phi, 0.0);
  pp.r_mu = r.get_or("r_mu", r.raw().r_mu, 0.0);
  return pp;
}

json pseudo_json(const PseudoParams& pp) {
  return {{"family", pp.family == PseudoFamily::One ? "one" : "two"}, {"mu", pp.mu}, {"c", pp.c},
          {"eta", pp.eta}, {"phi", pp.phi}, {"r_mu", pp.r_mu}};
}

Report cmd_spectrum(const Resolver& r, const std::string& which) {
  Report rep;
  const int kmax = resolve_kmax(r);
  if (which == "h0") {
    const AlgebraParams params = resolve_params(r);
    rep.params = params_json(params);
    rep.data["levels"] = levels_json(h0_spectrum(params, kmax));
  } else if (which == "pssqm") {
    const AlgebraParams params = resolve_params(r);
    const int mu = r.get_or("mu", r.raw().mu, 0);
    rep.params = params_json(params);
    rep.params["mu"] = mu;
    const auto s = pssqm_spectrum(params, mu, kmax);
    const int p = params.lambda() - 1;
    rep.add("ground degeneracy = mu+1", s.ground_degeneracy == mu + 1 ? 0.0 : 1.0, 0.0);
    rep.add("excited degeneracy = p+1", s.excited_degeneracy_ok ? 0.0 : 1.0, 0.0);
    rep.add("E0 > bound", s.bound_holds ? 0.0 : 1.0, 0.0);
    rep.add("E0 = gamma-sum form", std::abs(s.ground_energy - s.ground_energy_gamma_form), 1e-10);
    rep.data = {{"levels", levels_json(s.levels)}, {"ground_energy", s.ground_energy},
                {"ground_degeneracy", s.ground_degeneracy}, {"bound", s.bound}, {"p", p}};
  } else if (which == "pseudo") {
    const AlgebraParams params = resolve_params(r, 3);
    const PseudoParams pp = resolve_pseudo(r);
    rep.params = params_json(params);
    rep.params.update(pseudo_json(pp));
    const auto levels = pseudo_spectrum(params, pp, kmax);
    rep.data = {{"levels", levels_json(levels)}, {"equally_spaced", equally_spaced(levels)}};
  } else {
    const AlgebraParams params = resolve_params(r, 3);
    const int mu = r.get_or("mu", r.raw().mu, 0);
    rep.params = params_json(params);
    rep.params["mu"] = mu;
    rep.data["levels"] = levels_json(ossqm_spectrum(params, mu, kmax));
  }
  return rep;
}

Report cmd_fock_verify(const Resolver& r) {
  const AlgebraParams params = resolve_params(r);
  const int dim = resolve_dim(r, params.lambda());
  const double tol = resolve_tol(r);
  Report rep;
  rep.params = params_json(params);
  rep.params["dim"] = dim;
  rep.params["tol"] = tol;
  const FockRep fock = build_fock(params, dim);
  rep.add(verify_defining_relations(fock, tol));
  rep.add(casimir_matrices(fock, tol).report);
  rep.add(verify_h0(fock, std::max(tol, kIdentityTol)));
  rep.data = {{"dim", dim}, {"interior", fock.interior()}};
  return rep;
}

Report cmd_susy(const Resolver& r, const std::string& which) {
  Report rep;
  const double tol = resolve_tol(r);
  if (which == "pssqm" || which == "charges") {
    const AlgebraParams params = resolve_params(r);
    const int mu = r.get_or("mu", r.raw().mu, 0);
    const int dim = resolve_dim(r, params.lambda());
    rep.params = params_json(params);
    rep.params.update({{"mu", mu}, {"dim", dim}, {"tol", tol}});
    const FockRep fock = build_fock(params, dim);
    if (which == "pssqm") {
      const auto real = pssqm_build(fock, mu);
      rep.add(pssqm_verify(real, tol));
      const auto s = pssqm_spectrum(params, mu, 1);
      rep.add("ground degeneracy = mu+1", s.ground_degeneracy == mu + 1 ? 0.0 : 1.0, 0.0);
      rep.add("excited degeneracy = p+1", s.excited_degeneracy_ok ? 0.0 : 1.0, 0.0);
      rep.add("E0 > bound", s.bound_holds ? 0.0 : 1.0, 0.0);
      rep.data = {{"r", real.r}, {"ground_energy", s.ground_energy},
                  {"ground_degeneracy", s.ground_degeneracy}, {"bound", s.bound}};
    } else {
      const auto cs = build_charge_set(fock, mu);
      rep.add(verify_charge_set(cs, tol));
      json rels = json::array();
      for (const auto& m : find_mixed_relations(cs, std::max(tol, 1e-9))) {
        rep.add("mixed: " + m.text(), m.residual, std::max(tol, 1e-9));
        rels.push_back(m.text());
      }
      rep.data = {{"mixed_relations", rels}, {"count", rels.size()}};
    }
  } else if (which == "pseudo") {
    const AlgebraParams params = resolve_params(r, 3);
    const PseudoParams pp = resolve_pseudo(r);
    const int dim = resolve_dim(r, 3);
    rep.params = params_json(params);
    rep.params.update(pseudo_json(pp));
    rep.params.update({{"dim", dim}, {"tol", tol}});
    const auto real = pseudo_build(build_fock(params, dim), pp);
    rep.add(pseudo_verify(real, tol));
    rep.data = {{"r", real.r}};
  } else {
    const AlgebraParams params = resolve_params(r, 3);
    const int mu = r.get_or("mu", r.raw().mu, 0);
    const double xi = r.get_or("xi", r.raw().xi, 1.0);
    const double phi = r.get_or("phi", r.raw().phi, 0.0);
    const int dim = resolve_dim(r, 3);
    rep.params = params_json(params);
    rep.params.update({{"mu", mu}, {"xi", xi}, {"phi", phi}, {"dim", dim}, {"tol", tol}});
    const FockRep fock = build_fock(params, dim);
    const auto real = ossqm_build(fock, mu, xi, phi);
    rep.add(ossqm_verify(real, tol));
    const auto other = ossqm_build(fock, mu, std::sqrt(2.0), 0.0);
    rep.add("H independent of (xi, phi)", relation_residual(real.H, other.H, fock.interior()), tol);
    rep.data = {{"r", real.r}};
  }
  return rep;
}

DeformationSpec resolve_deformation(const Resolver& r) {
  if (r.config().contains("deformation")) {
    DeformationSpec spec = deformation_from_json(r.config().at("deformation").dump());
    return spec;
  }
  const std::string fam = r.require<std::string>("family", r.raw().family);
  const double q = r.get_or("q", r.raw().q, 1.0);
  if (fam == "a" || fam == "A") {
    return cv_spec(q, r.get_or("alpha_hat", r.raw().alpha_hat, 0.0));
  }
  DeformationSpec spec;
  if (fam == "b" || fam == "B") spec.family = DeformedFamily::B;
  else if (fam == "c" || fam == "C") spec.family = DeformedFamily::C;
  else throw Usage("--family must be a, b or c");
  const AlgebraParams params = resolve_params(r);
  spec.alpha = params.alpha();
  spec.q = q;
  spec.k = r.get_or("k", r.raw().k, 1.0);
  spec.B = r.get_or("B", r.raw().B, 1.0);
  spec.b = r.get_or("b", r.raw().b, 1.0);
  return spec;
}

Report cmd_deform_verify(const Resolver& r) {
  const DeformationSpec spec = resolve_deformation(r);
  const double tol = resolve_tol(r);
  const int lambda = static_cast<int>(spec.alpha.size());
  const int dim = resolve_dim(r, lambda);
  Report rep;
  rep.params = json::parse(to_json(spec));
  rep.params.update({{"dim", dim}, {"tol", tol}});
  const DeformedAlgebra def = make_deformed(spec);
  const DeformedFock fock = build_deformed_fock(def, dim);
  rep.add(verify_deformed(fock, tol));
  std::vector<double> head(fock.F.begin(), fock.F.begin() + std::min<std::size_t>(fock.F.size(), 8));
  rep.data = {{"beta_def", def.beta_def}, {"D0", def.D0}, {"F", head}};
  return rep;
}

Report cmd_deform_cv(const Resolver& r) {
  const double q = r.require("q", r.raw().q);
  const double ah = r.get_or("alpha_hat", r.raw().alpha_hat, 0.0);
  const int n0 = r.get_or("n0", r.raw().n0, 0);
  const double l0 = r.get_or("lambda0", r.raw().lambda0, 0.0);
  const int nmax = r.get_or("nmax", r.raw().nmax, 40);
  const double tol = resolve_tol(r);
  if (nmax < 0) throw Usage("--nmax must be nonnegative");
  Report rep;
  rep.params = {{"q", q}, {"alpha_hat", ah}, {"n0", n0}, {"lambda0", l0}, {"nmax", nmax}, {"tol", tol}};
  json values = json::array();
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const double c = cv_lambda_closed_form(q, ah, n0, l0, n, true);
    const double rec = cv_lambda_recursion(q, ah, n0, l0, n);
    worst = std::max(worst, std::abs(c - rec) / std::max(1.0, std::abs(rec)));
    values.push_back(c);
  }
  rep.add("closed form = recursion", worst, tol);
  rep.data["lambda_n"] = values;
  return rep;
}

// ------------------------------------------------------------------ output

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void round_all(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& x : j) round_all(x);
  }
}

json to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
  json j{{"command", rep.command}, {"params", rep.params}, {"checks", checks}, {"data", rep.data}};
  round_all(j);
  return j;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const json& j, std::ostream& out) {
  out << "command: " << j["command"].get<std::string>() << "\n";
  for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
    out << "  " << it.key() << " = " << scalar_text(it.value()) << "\n";
  bool pass = true;
  for (const auto& c : j["checks"]) {
    pass = pass && c["pass"].get<bool>();
    out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>()
        << "  residual=" << c["residual"].dump() << " tol=" << c["tol"].dump() << "\n";
  }
  for (auto it = j["data"].begin(); it != j["data"].end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
      out << it.key() << ":\n";
      for (const auto& row : it.value()) out << "  " << row.dump() << "\n";
    } else {
      out << it.key() << ": " << scalar_text(it.value()) << "\n";
    }
  }
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
}

void render_csv(const json& j, std::ostream& out) {
  out << "n,k,mu,energy,degeneracy\n";
  for (const auto& row : j["data"]["levels"]) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", row["energy"].get<double>());
    out << row["n"].get<long>() << ',' << row["k"].get<long>() << ',' << row["mu"].get<int>() << ',' << buf
        << ',' << row["degeneracy"].get<int>() << "\n";
  }
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open config file " + path);
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw Usage("config file must hold a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Usage(std::string("malformed config file: ") + e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"C_lambda-extended oscillator algebras: classification, Fock matrices, SUSY checks", "clext"};
  app.require_subcommand(1);
  Raw raw;
  int table_lambda = 0;

  auto opt = [&](CLI::App* c, const std::string& name, auto& store, const std::string& desc) {
    c->add_option("--" + name, store, desc);
  };
  auto common = [&](CLI::App* c) {
    opt(c, "config", raw.config, "JSON config file; flags override its values");
    c->add_option("--format", raw.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  };
  auto algebra = [&](CLI::App* c) {
    opt(c, "lambda", raw.lambda, "order of the cyclic group");
    opt(c, "alpha", raw.alpha, "comma-separated free alpha_0..alpha_{lambda-2}");
  };
  auto pseudo = [&](CLI::App* c) {
    opt(c, "family", raw.family, "one or two");
    opt(c, "mu", raw.mu, "grade");
    opt(c, "c", raw.c, "nonzero constant c");
    opt(c, "eta", raw.eta, "family one, 0 < eta < 2|c|");
    opt(c, "phi", raw.phi, "family one phase");
    opt(c, "r-mu", raw.r_mu, "family two shift r_mu");
  };
  auto verify = [&](CLI::App* c) {
    opt(c, "dim", raw.dim, "truncation dimension, multiple of lambda (default 20 lambda)");
    opt(c, "tol", raw.tol, "residual tolerance (default 1e-10 or CLEXT_TOL)");
  };

  auto* info = app.add_subcommand("algebra", "algebra parameters")->require_subcommand(1);
  auto* info_leaf = info->add_subcommand("info", "alpha, beta, gamma, beta_bar and Fock existence");
  algebra(info_leaf);
  common(info_leaf);

  auto* cls = app.add_subcommand("classify", "unirrep classification per n0 residue");
  algebra(cls);
  common(cls);

  auto* tables = app.add_subcommand("tables", "classification table rows");
  tables->add_option("lambda", table_lambda, "2, 3 or 4")->required()->check(CLI::IsMember({2, 3, 4}));
  common(tables);

  auto* spec = app.add_subcommand("spectrum", "energy levels")->require_subcommand(1);
  auto* sp_h0 = spec->add_subcommand("h0", "bosonic oscillator H0");
  algebra(sp_h0);
  auto* sp_ps = spec->add_subcommand("pssqm", "parasupersymmetric H");
  algebra(sp_ps);
  opt(sp_ps, "p", raw.p, "order p = lambda - 1");
  opt(sp_ps, "mu", raw.mu, "grade");
  auto* sp_pseudo = spec->add_subcommand("pseudo", "pseudosupersymmetric H, lambda = 3");
  opt(sp_pseudo, "alpha", raw.alpha, "alpha_0,alpha_1");
  pseudo(sp_pseudo);
  auto* sp_or = spec->add_subcommand("ossqm", "orthosupersymmetric H, lambda = 3");
  opt(sp_or, "alpha", raw.alpha, "alpha_0,alpha_1");
  opt(sp_or, "mu", raw.mu, "0 or 1");
  for (auto* c : {sp_h0, sp_ps, sp_pseudo, sp_or}) {
    opt(c, "kmax", raw.kmax, "number of blocks beyond the first (default 1)");
    common(c);
  }

  auto* fock = app.add_subcommand("fock", "Fock-space matrices")->require_subcommand(1);
  auto* fock_v = fock->add_subcommand("verify", "defining relations, Casimirs and H0");
  algebra(fock_v);
  verify(fock_v);
  common(fock_v);

  auto* susy = app.add_subcommand("susy", "supersymmetry variants")->require_subcommand(1);
  auto* su_ps = susy->add_subcommand("pssqm", "parasupersymmetry of order p");
  auto* su_ch = susy->add_subcommand("charges", "p conserved charges and mixed relations");
  for (auto* c : {su_ps, su_ch}) {
    algebra(c);
    opt(c, "p", raw.p, "order p = lambda - 1");
    opt(c, "mu", raw.mu, "grade");
  }
  auto* su_pseudo = susy->add_subcommand("pseudo", "pseudosupersymmetry, lambda = 3");
  opt(su_pseudo, "alpha", raw.alpha, "alpha_0,alpha_1");
  pseudo(su_pseudo);
  auto* su_or = susy->add_subcommand("ossqm", "orthosupersymmetry of order 2, lambda = 3");
  opt(su_or, "alpha", raw.alpha, "alpha_0,alpha_1");
  opt(su_or, "mu", raw.mu, "0 or 1");
  opt(su_or, "xi", raw.xi, "0 < xi <= sqrt(2)");
  opt(su_or, "phi", raw.phi, "phase");
  for (auto* c : {su_ps, su_ch, su_pseudo, su_or}) {
    verify(c);
    common(c);
  }

  auto* deform = app.add_subcommand("deform", "deformed algebras")->require_subcommand(1);
  auto* de_v = deform->add_subcommand("verify", "quommutator, third Casimir and functional equations");
  algebra(de_v);
  opt(de_v, "family", raw.family, "a, b or c");
  opt(de_v, "q", raw.q, "deformation parameter q > 0");
  opt(de_v, "k", raw.k, "family b: E = b k^N");
  opt(de_v, "B", raw.B, "families b, c: K = B k^N or B q^N");
  opt(de_v, "b", raw.b, "families b, c: E prefactor");
  opt(de_v, "alpha-hat", raw.alpha_hat, "family a: alpha_0 = -alpha_1");
  verify(de_v);
  common(de_v);
  auto* de_cv = deform->add_subcommand("cv", "deformed Calogero-Vasiliev lambda_n");
  opt(de_cv, "q", raw.q, "q > 0; q = 1 uses the limit form");
  opt(de_cv, "alpha-hat", raw.alpha_hat, "alpha");
  opt(de_cv, "n0", raw.n0, "lowest N eigenvalue");
  opt(de_cv, "lambda0", raw.lambda0, "lambda_0");
  opt(de_cv, "nmax", raw.nmax, "largest n (default 40)");
  opt(de_cv, "tol", raw.tol, "residual tolerance");
  common(de_cv);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const CLI::App* leaf = &app;
  std::string path;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    path += (path.empty() ? "" : " ") + leaf->get_name();
  }

  try {
    json config = json::object();
    if (leaf->get_option_no_throw("--config") && leaf->get_option("--config")->count() > 0)
      config = load_config(raw.config);
    const Resolver r(leaf, raw, config);
    const std::string format = r.get_or<std::string>("format", raw.format, "json");
    if (format != "json" && format != "text" && format != "csv") throw Usage("--format must be json, text or csv");
    if (format == "csv" && path.rfind("spectrum", 0) != 0) throw Usage("csv output is only available for spectra");

    static const std::map<std::string, std::function<Report(const Resolver&)>> dispatch = {
        {"algebra info", cmd_algebra_info},
        {"classify", cmd_classify},
        {"spectrum h0", [](const Resolver& r) { return cmd_spectrum(r, "h0"); }},
        {"spectrum pssqm", [](const Resolver& r) { return cmd_spectrum(r, "pssqm"); }},
        {"spectrum pseudo", [](const Resolver& r) { return cmd_spectrum(r, "pseudo"); }},
        {"spectrum ossqm", [](const Resolver& r) { return cmd_spectrum(r, "ossqm"); }},
        {"fock verify", cmd_fock_verify},
        {"susy pssqm", [](const Resolver& r) { return cmd_susy(r, "pssqm"); }},
        {"susy charges", [](const Resolver& r) { return cmd_susy(r, "charges"); }},
        {"susy pseudo", [](const Resolver& r) { return cmd_susy(r, "pseudo"); }},
        {"susy ossqm", [](const Resolver& r) { return cmd_susy(r, "ossqm"); }},
        {"deform verify", cmd_deform_verify},
        {"deform cv", cmd_deform_cv},
    };
    Report rep;
    if (path == "tables") {
      rep = cmd_tables(table_lambda);
    } else {
      auto it = dispatch.find(path);
      if (it == dispatch.end()) throw Usage("unknown command '" + path + "'");
      rep = it->second(r);
    }
    rep.command = path;

    const json j = to_json(rep);
    if (format == "json") out << j.dump(2) << "\n";
    else if (format == "text") render_text(j, out);
    else render_csv(j, out);
    return rep.pass() ? kPass : kCheckFailure;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace clext::cli
