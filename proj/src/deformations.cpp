#include "clext/deformations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "clext/errors.hpp"

namespace clext {

namespace {

constexpr double kRatioTol = 1e-12;

double scaled(double diff, std::initializer_list<double> terms) {
  double s = 1.0;
  for (double t : terms) s = std::max(s, std::abs(t));
  return std::abs(diff) / s;
}

bool ratio_matches(const ScalarSequence& e, double ratio) {
  for (long n = 0; n < 3; ++n) {
    const double x = e(n), y = e(n + 1);
    if (x == 0.0 || std::abs(y / x - ratio) > kRatioTol * std::max(1.0, std::abs(ratio))) return false;
  }
  return true;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidParameters(std::string(name) + " must be finite");
}

}  // namespace

ScalarSequence::ScalarSequence(Kind kind, std::vector<double> params, std::vector<double> values)
    : kind_(kind), params_(std::move(params)), values_(std::move(values)) {
  for (double v : params_) require_finite(v, "sequence parameter");
  for (double v : values_) require_finite(v, "sequence value");
}

ScalarSequence ScalarSequence::constant(double v) { return {Kind::Constant, {v}, {}}; }
ScalarSequence ScalarSequence::power(double b, double base) { return {Kind::Power, {b, base}, {}}; }
ScalarSequence ScalarSequence::qbracket(double q) {
  if (!(q > 0.0)) throw InvalidParameters("q-bracket needs q > 0");
  return {Kind::QBracket, {q}, {}};
}
ScalarSequence ScalarSequence::table(std::vector<double> values) {
  if (values.empty()) throw InvalidParameters("table sequence needs at least one value");
  return {Kind::Table, {}, std::move(values)};
}

double ScalarSequence::operator()(long n) const {
  if (n < 0) throw InvalidParameters("sequences are evaluated at nonnegative integers");
  switch (kind_) {
    case Kind::Constant:
      return params_[0];
    case Kind::Power:
      return params_[0] * std::pow(params_[1], double(n));
    case Kind::QBracket: {
      const double q = params_[0];
      if (q == 1.0) return double(n);
      return (std::pow(q, double(n)) - std::pow(q, -double(n))) / (q - 1.0 / q);
    }
    case Kind::Table:
      if (n >= static_cast<long>(values_.size()))
        throw InvalidParameters("table sequence has no value at n = " + std::to_string(n));
      return values_[n];
  }
  return 0.0;
}

double DeformedAlgebra::K_at(long n) const {
  switch (spec.family) {
    case DeformedFamily::A:
      return E(n + 1) + spec.q * E(n);
    case DeformedFamily::B:
      return spec.B * std::pow(spec.k, double(n));
    case DeformedFamily::C:
      return spec.B * std::pow(spec.q, double(n));
  }
  return 0.0;
}

DeformedAlgebra make_deformed(const DeformationSpec& spec) {
  AlgebraParams params = AlgebraParams::from_full(spec.alpha);
  const int lambda = params.lambda();
  const double q = spec.q;
  if (!(q > 0.0) || !std::isfinite(q)) throw InvalidParameters("q must be a positive real");
  for (double v : {spec.k, spec.B, spec.b}) require_finite(v, "deformation parameter");

  std::vector<double> beta(lambda, 0.0);
  switch (spec.family) {
    case DeformedFamily::A: {
      if (lambda != 2) throw InvalidParameters("family A needs lambda = 2");
      if (!spec.E) throw InvalidParameters("family A needs E(N)");
      if (ratio_matches(*spec.E, -q)) throw RejectedFamily("E(N) = b (-q)^N is rejected for even lambda");
      if (ratio_matches(*spec.E, q))
        throw InvalidParameters("E(N) = b q^N makes the system singular; use family C");
      for (int mu = 0; mu < lambda; ++mu) beta[mu] = -params.alpha()[mu];
      return {spec, params, *spec.E, beta, params.alpha()[0] * (*spec.E)(0)};
    }
    case DeformedFamily::B: {
      if (lambda <= 2) throw InvalidParameters("family B needs lambda > 2");
      if (spec.E) throw InvalidParameters("family B fixes E(N) = b k^N");
      if (spec.b == 0.0 || spec.k == 0.0) throw InvalidParameters("family B needs b != 0 and k != 0");
      if (std::abs(spec.k - q) <= kRatioTol) throw InvalidParameters("family B needs k != q");
      if (lambda % 2 == 0 && std::abs(spec.k + q) <= kRatioTol)
        throw InvalidParameters("family B needs k != -q for even lambda");
      const double pref = spec.B * std::pow(q, lambda - 1) / (std::pow(spec.k, lambda) - std::pow(q, lambda));
      for (int mu = 0; mu < lambda; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < lambda; ++nu) s += std::pow(spec.k / q, nu) * params.alpha_at(mu + nu);
        beta[mu] = pref * s / spec.b;
      }
      double d0 = 0.0;
      for (int nu = 0; nu < lambda; ++nu) d0 += std::pow(spec.k / q, nu) * params.alpha_at(nu);
      return {spec, params, ScalarSequence::power(spec.b, spec.k), beta, -pref * d0};
    }
    case DeformedFamily::C: {
      if (spec.E) throw InvalidParameters("family C fixes E(N) = b q^N");
      if (spec.b == 0.0) throw InvalidParameters("family C needs b != 0");
      for (int mu = 1; mu < lambda; ++mu) beta[mu] = beta[mu - 1] + spec.B / (spec.b * q) * params.alpha()[mu - 1];
      return {spec, params, ScalarSequence::power(spec.b, q), beta, 0.0};
    }
  }
  throw InvalidParameters("unknown family");
}

ScalarSequence solve_D(double q, const ScalarSequence& H, double D0, int n_max) {
  if (n_max < 1) throw InvalidParameters("n_max must be at least 1");
  std::vector<double> d(n_max + 1);
  d[0] = D0;
  for (int n = 0; n < n_max; ++n) d[n + 1] = q * d[n] + H(n);
  return ScalarSequence::table(std::move(d));
}

double funct1_residual(double q, const ScalarSequence& H, const ScalarSequence& D, int n_max) {
  double out = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double a = D(n + 1), b = q * D(n), h = H(n);
    out = std::max(out, scaled(a - b - h, {a, b, h}));
  }
  return out;
}

double funct2_residual(const DeformedAlgebra& def, const std::vector<double>& beta, int n_max) {
  const int lambda = def.lambda();
  if (static_cast<int>(beta.size()) != lambda) throw InvalidParameters("beta must have lambda entries");
  double out = 0.0;
  for (int n = 0; n < n_max; ++n) {
    for (int mu = 0; mu < lambda; ++mu) {
      const double a = def.E(n + 1) * beta[(mu + 1) % lambda];
      const double b = def.spec.q * def.E(n) * beta[mu];
      const double c = def.K_at(n) * def.params.alpha()[mu];
      out = std::max(out, scaled(a - b - c, {a, b, c}));
    }
  }
  return out;
}

std::vector<double> beta_from_functional(const DeformedAlgebra& def, long n) {
  const int lambda = def.lambda();
  const double e0 = def.spec.q * def.E(n), e1 = def.E(n + 1), kn = def.K_at(n);
  const auto& alpha = def.params.alpha();
  const double det = std::pow(e1, lambda) - std::pow(e0, lambda);
  const double size = std::max(std::pow(std::abs(e1), lambda), std::pow(std::abs(e0), lambda));
  std::vector<double> beta(lambda, 0.0);
  if (std::abs(det) <= kRatioTol * size) {
    if (e1 == 0.0) throw InvalidParameters("E vanishes; beta is undetermined");
    for (int mu = 0; mu + 1 < lambda; ++mu) beta[mu + 1] = (kn * alpha[mu] + e0 * beta[mu]) / e1;
    return beta;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(lambda, lambda);
  Eigen::VectorXd rhs(lambda);
  for (int mu = 0; mu < lambda; ++mu) {
    m(mu, mu) += -e0;
    m(mu, (mu + 1) % lambda) += e1;
    rhs(mu) = kn * alpha[mu];
  }
  Eigen::VectorXd x = m.partialPivLu().solve(rhs);
  for (int mu = 0; mu < lambda; ++mu) beta[mu] = x(mu);
  return beta;
}

DeformedFock build_deformed_fock(const DeformedAlgebra& def, int dim) {
  const int lambda = def.lambda();
  if (dim <= 0 || dim % lambda != 0) throw InvalidParameters("dimension must be a positive multiple of lambda");
  DeformedFock rep{def, dim, {}, {}, {}, {}, {}, {}, {}};
  const ScalarSequence d = solve_D(def.spec.q, def.spec.H, def.D0, dim);
  for (int n = 0; n < dim; ++n) {
    rep.D.push_back(d(n));
    rep.F.push_back(d(n) + def.E(n) * def.beta_def[n % lambda]);
  }
  for (int n = 1; n < dim; ++n)
    if (rep.F[n] < -kIdentityTol * std::max(1.0, std::abs(rep.D[n])))
      throw UnitarityViolation("deformed structure function negative at n = " + std::to_string(n));

  rep.a_dag = Matrix::Zero(dim, dim);
  rep.n_op = Matrix::Zero(dim, dim);
  rep.t_op = Matrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) rep.a_dag(n + 1, n) = std::sqrt(std::max(0.0, rep.F[n + 1]));
  rep.a = rep.a_dag.adjoint();
  rep.projectors.assign(lambda, Matrix::Zero(dim, dim));
  for (int n = 0; n < dim; ++n) {
    rep.n_op(n, n) = n;
    rep.t_op(n, n) = std::polar(1.0, 2.0 * std::numbers::pi * n / lambda);
    rep.projectors[n % lambda](n, n) = 1.0;
  }
  return rep;
}

RelationReport verify_deformed(const DeformedFock& rep, double tol) {
  const int lambda = rep.def.lambda();
  const int dim = rep.dim;
  if (dim < 3 * lambda)
    throw TruncationTooSmall("dimension " + std::to_string(dim) + " below the minimum " +
                             std::to_string(3 * lambda));
  const int k = rep.interior();
  const auto& def = rep.def;
  const double q = def.spec.q;
  RelationReport report;

  Matrix aad = rep.a * rep.a_dag, ada = rep.a_dag * rep.a;
  Matrix g = Matrix::Zero(dim, dim);
  Matrix x = Matrix::Zero(dim, dim), qn = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    g(n, n) = def.H_at(n) + def.K_at(n) * def.params.alpha()[n % lambda];
    qn(n, n) = std::pow(q, -double(n));
    x(n, n) = qn(n, n).real() * (rep.D[n] + def.E(n) * def.beta_def[n % lambda]);
  }
  Matrix qada = q * ada;
  report.add("a a+ - q a+ a = H(N) + K(N) sum alpha_mu P_mu",
             relation_residual(aad - qada, g, k, {&aad, &qada}), tol);

  // C3~ = X - Y with X = q^-N (D + E beta) and Y = q^-N a+ a.
  Matrix y = qn * ada;
  report.add("C3~ = 0", relation_residual(x, y, k), tol);
  auto comm_zero = [&](const std::string& name, const Matrix& op) {
    Matrix xa = x * op, ax = op * x, ya = y * op, ay = op * y;
    report.add(name, relation_residual(xa - ax, ya - ay, k, {&xa, &ax, &ya, &ay}), tol);
  };
  comm_zero("[C3~,a] = 0", rep.a);
  comm_zero("[C3~,a+] = 0", rep.a_dag);

  Matrix c1 = Matrix::Zero(dim, dim), phase = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    c1(n, n) = std::polar(1.0, 2.0 * std::numbers::pi * n);
    phase(n, n) = std::polar(1.0, -2.0 * std::numbers::pi * n / lambda);
  }
  Matrix c2 = phase * rep.t_op;
  for (auto [name, c] : {std::pair<const char*, const Matrix*>{"[C1,a+] = 0", &c1}, {"[C2,a+] = 0", &c2}}) {
    Matrix l = *c * rep.a_dag, r = rep.a_dag * *c;
    report.add(name, relation_residual(l, r, k), tol);
  }

  report.add("D(n+1) - q D(n) = H(n)",
             funct1_residual(q, def.spec.H, ScalarSequence::table(rep.D), dim - 1), tol);
  report.add("E(n+1) beta_{mu+1} - q E(n) beta_mu = K(n) alpha_mu",
             funct2_residual(def, def.beta_def, dim - 1), tol);
  const auto b0 = beta_from_functional(def, 0), b1 = beta_from_functional(def, 1);
  double drift = 0.0;
  for (int mu = 0; mu < lambda; ++mu) {
    drift = std::max(drift, scaled(b0[mu] - b1[mu], {b0[mu], b1[mu]}));
    drift = std::max(drift, scaled(b0[mu] - def.beta_def[mu], {b0[mu], def.beta_def[mu]}));
  }
  report.add("beta solved at n = 0, 1 equals beta_def", drift, tol);
  return report;
}

double cv_lambda_closed_form(double q, double alpha_hat, int n0, double lambda0, long n, bool limit) {
  const double b = 2.0 * alpha_hat * (n0 % 2 == 0 ? 1.0 : -1.0);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  if (std::abs(q - 1.0) <= kIdentityTol) {
    if (!limit) throw InvalidParameters("closed form is singular at q = 1; request the limit form");
    return lambda0 + n + b * (1.0 - sign) / 2.0;
  }
  if (!(q > 0.0)) throw InvalidParameters("q must be a positive real");
  const double qn = std::pow(q, double(n)), qmn = std::pow(q, -double(n));
  return qn * lambda0 +
         std::pow(q, -double(n0)) * ((qn - qmn) / (q - 1.0 / q) + b * (qn - sign * qmn) / (q + 1.0 / q));
}

double cv_lambda_recursion(double q, double alpha_hat, int n0, double lambda0, long n) {
  double l = lambda0;
  for (long m = 0; m < n; ++m) {
    const double sign = (n0 + m) % 2 == 0 ? 1.0 : -1.0;
    l = q * l + std::pow(q, -double(n0 + m)) * (1.0 + 2.0 * alpha_hat * sign);
  }
  return l;
}

DeformationSpec cv_spec(double q, double alpha_hat) {
  if (!(q > 0.0)) throw InvalidParameters("q must be a positive real");
  DeformationSpec spec;
  spec.family = DeformedFamily::A;
  spec.alpha = {alpha_hat, -alpha_hat};
  spec.q = q;
  spec.H = ScalarSequence::power(1.0, 1.0 / q);
  spec.E = ScalarSequence::power(2.0 / (q + 1.0 / q), 1.0 / q);
  return spec;
}

namespace {

using nlohmann::json;

json seq_to_json(const ScalarSequence& s) {
  switch (s.kind()) {
    case ScalarSequence::Kind::Constant:
      return {{"kind", "constant"}, {"value", s.params()[0]}};
    case ScalarSequence::Kind::Power:
      return {{"kind", "power"}, {"b", s.params()[0]}, {"base", s.params()[1]}};
    case ScalarSequence::Kind::QBracket:
      return {{"kind", "qbracket"}, {"q", s.params()[0]}};
    case ScalarSequence::Kind::Table:
      return {{"kind", "table"}, {"values", s.values()}};
  }
  return {};
}

ScalarSequence seq_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ScalarSequence::constant(j.at("value").get<double>());
  if (kind == "power") return ScalarSequence::power(j.at("b").get<double>(), j.at("base").get<double>());
  if (kind == "qbracket") return ScalarSequence::qbracket(j.at("q").get<double>());
  if (kind == "table") return ScalarSequence::table(j.at("values").get<std::vector<double>>());
  throw InvalidParameters("unknown sequence kind '" + kind + "'");
}

const char* family_name(DeformedFamily f) {
  return f == DeformedFamily::A ? "A" : f == DeformedFamily::B ? "B" : "C";
}

}  // namespace

std::string to_json(const DeformationSpec& spec) {
  json j{{"family", family_name(spec.family)},
         {"alpha", spec.alpha},
         {"q", spec.q},
         {"k", spec.k},
         {"B", spec.B},
         {"b", spec.b},
         {"H", seq_to_json(spec.H)}};
  if (spec.E) j["E"] = seq_to_json(*spec.E);
  return j.dump();
}

DeformationSpec deformation_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    DeformationSpec spec;
    const std::string f = j.at("family").get<std::string>();
    if (f == "A") spec.family = DeformedFamily::A;
    else if (f == "B") spec.family = DeformedFamily::B;
    else if (f == "C") spec.family = DeformedFamily::C;
    else throw InvalidParameters("unknown family '" + f + "'");
    spec.alpha = j.at("alpha").get<std::vector<double>>();
    spec.q = j.value("q", 1.0);
    spec.k = j.value("k", 1.0);
    spec.B = j.value("B", 1.0);
    spec.b = j.value("b", 1.0);
    if (j.contains("H")) spec.H = seq_from_json(j.at("H"));
    if (j.contains("E")) spec.E = seq_from_json(j.at("E"));
    return spec;
  } catch (const json::exception& e) {
    throw InvalidParameters(std::string("malformed deformation config: ") + e.what());
  }
}

}  // namespace clext
