#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "clext/errors.hpp"
#include "clext/susy.hpp"

namespace clext {

int charge_b(int t, int nu) { return (t == nu && t != 1) ? -1 : 1; }

double charge_b_inverse(int nu, int r, int p) {
  const double d1 = nu == 1 ? 1.0 : 0.0;
  const double dr1 = r == 1 ? 1.0 : 0.0;
  const double dnr = nu == r ? 1.0 : 0.0;
  return 0.5 * (d1 * (1.0 + (2.0 - p) * dr1) + (1.0 - d1) * (dr1 - dnr));
}

int charge_c(int t, int r, int nu) { return (charge_b(t, nu + 1) - charge_b(t, nu)) * charge_b(r, nu); }

double charge_d(int t, int r, int s, int p) {
  double d = 0.0;
  for (int nu = 1; nu <= p; ++nu) d += charge_c(t, r, nu) * charge_b_inverse(nu, s, p);
  return d;
}

ChargeSet build_charge_set(const FockRep& rep, int mu) {
  const int p = rep.lambda() - 1;
  if (p < 1) throw InvalidParameters("order p must be at least 1");
  if (mu < 0 || mu > p) throw InvalidParameters("mu must lie in 0..p");
  require_dim(rep, 3 * rep.lambda());
  ChargeSet cs;
  cs.p = p;
  cs.mu = mu;
  cs.interior = rep.interior();
  for (int r = 1; r <= p; ++r) {
    Matrix q = Matrix::Zero(rep.dim, rep.dim);
    for (int nu = 1; nu <= p; ++nu) q += std::sqrt(2.0) * charge_b(r, nu) * (rep.a_dag * rep.P(mu + nu));
    cs.Q.push_back(q);
  }
  for (int t = 1; t <= p + 1; ++t) {
    Matrix m = Matrix::Zero(rep.dim, rep.dim);
    for (int nu = 1; nu <= p + 1; ++nu) m += double(charge_b(t, nu)) * rep.P(mu + nu);
    cs.I.push_back(m);
  }
  cs.H = pssqm_build(rep, mu).H;
  return cs;
}

namespace {

// Operator |n> -> w[n] |n + s>, truncated like the dense matrices it mirrors.
struct Shift {
  int s = 0;
  std::vector<Complex> w;
};

Shift to_shift(const Matrix& m, int s) {
  Shift out{s, std::vector<Complex>(m.cols(), 0.0)};
  for (int n = 0; n < m.cols(); ++n)
    if (n + s >= 0 && n + s < m.rows()) out.w[n] = m(n + s, n);
  return out;
}

// a * b
Shift compose(const Shift& a, const Shift& b) {
  const int dim = static_cast<int>(b.w.size());
  Shift out{a.s + b.s, std::vector<Complex>(dim, 0.0)};
  for (int n = 0; n < dim; ++n) {
    const int m = n + b.s;
    if (m >= 0 && m < dim) out.w[n] = a.w[m] * b.w[n];
  }
  return out;
}

Shift scale_rows(const Shift& a, const std::vector<Complex>& diag) {
  Shift out = a;
  const int dim = static_cast<int>(a.w.size());
  for (int n = 0; n < dim; ++n) {
    const int m = n + a.s;
    if (m >= 0 && m < dim) out.w[n] *= diag[m];
  }
  return out;
}

// Largest modulus on entries whose row and column both lie below k.
double shift_max(const Shift& a, int k) {
  double out = 0.0;
  for (int n = 0; n < k; ++n)
    if (n + a.s >= 0 && n + a.s < k) out = std::max(out, std::abs(a.w[n]));
  return out;
}

std::vector<Complex> diagonal_of(const Matrix& m) {
  std::vector<Complex> d(m.rows());
  for (int n = 0; n < m.rows(); ++n) d[n] = m(n, n);
  return d;
}

Matrix power(const Matrix& m, int e) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

// B_nu(x_0..x_n) = prod_l b_{x_l}^{nu+n-l}; empty products are 1.
int b_string(int nu, const std::vector<int>& x, int from, int to) {
  int out = 1;
  const int n = to - from;
  for (int l = 0; l <= n; ++l) out *= charge_b(x[from + l], nu + n - l);
  return out;
}

int swap_ends(int x, int p) { return x == 1 ? p : x == p ? 1 : x; }

std::vector<int> all_tuples_next(std::vector<int> v, int hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] <= hi) return v;
    v[i] = 1;
  }
  return {};
}

template <typename F>
void for_each_tuple(int len, int hi, F&& f) {
  std::vector<int> v(len, 1);
  while (true) {
    f(v);
    v = all_tuples_next(v, hi);
    if (v.empty()) return;
  }
}

}  // namespace

RelationReport verify_charge_set(const ChargeSet& cs, double tol, int max_exhaustive_products) {
  const int p = cs.p;
  const int k = cs.interior;
  const int dim = static_cast<int>(cs.H.rows());
  const Matrix zero = Matrix::Zero(dim, dim);
  const Matrix id = Matrix::Identity(dim, dim);
  RelationReport report;

  double nil = 0.0, comm = 0.0, multi = 0.0;
  for (const auto& q : cs.Q) {
    std::vector<Matrix> pw{id};
    for (int j = 0; j <= p; ++j) pw.push_back(pw.back() * q);
    nil = std::max(nil, relation_residual(pw[p + 1], zero, k));
    Matrix hq = cs.H * q, qh = q * cs.H;
    comm = std::max(comm, relation_residual(hq - qh, zero, k, {&hq, &qh}));
    const Matrix qd = q.adjoint();
    Matrix lhs = zero;
    for (int j = 0; j <= p; ++j) lhs += pw[p - j] * qd * pw[j];
    multi = std::max(multi, relation_residual(lhs, 2.0 * p * pw[p - 1] * cs.H, k));
  }
  report.add("Q_r^(p+1) = 0", nil, tol);
  report.add("[H,Q_r] = 0", comm, tol);
  report.add("sum_j Q_r^(p-j) Q_r+ Q_r^j = 2p Q_r^(p-1) H", multi, tol);

  report.add("I_1 = I", relation_residual(cs.I[0], id, k), tol);
  double sq = 0.0, ih = 0.0, ii = 0.0, iq = 0.0;
  for (int t = 1; t <= p + 1; ++t) {
    const Matrix& it = cs.I[t - 1];
    sq = std::max(sq, relation_residual(it * it, id, k));
    Matrix a = it * cs.H, b = cs.H * it;
    ih = std::max(ih, relation_residual(a - b, zero, k, {&a, &b}));
    for (const auto& other : cs.I) ii = std::max(ii, relation_residual(it * other, other * it, k));
    for (int r = 1; r <= p; ++r) {
      Matrix l = it * cs.Q[r - 1] - cs.Q[r - 1] * it;
      Matrix rhs = zero;
      for (int s = 1; s <= p; ++s) rhs += charge_d(t, r, s, p) * cs.Q[s - 1];
      iq = std::max(iq, relation_residual(l, rhs, k));
    }
  }
  report.add("I_t^2 = I", sq, tol);
  report.add("[I_t,H] = 0", ih, tol);
  report.add("[I_t,I_t'] = 0", ii, tol);
  report.add("[I_t,Q_r] = sum_s d_tr^s Q_s", iq, tol);

  // Every product of p+1 charges vanishes. Each Q_r raises the level by one,
  // so products are evaluated on weighted shifts; the extraction is checked
  // to be faithful first.
  std::vector<Shift> qs;
  double faithful = 0.0;
  for (const auto& q : cs.Q) {
    qs.push_back(to_shift(q, 1));
    Matrix rest = q;
    for (int n = 0; n + 1 < dim; ++n) rest(n + 1, n) = 0.0;
    faithful = std::max(faithful, rest.cwiseAbs().maxCoeff());
  }
  report.add("Q_r is a weighted raising operator", faithful, tol);
  double prod = 0.0;
  auto check = [&](const std::vector<int>& rs) {
    Shift acc = qs[rs.back() - 1];
    for (int i = static_cast<int>(rs.size()) - 2; i >= 0; --i) acc = compose(qs[rs[i] - 1], acc);
    prod = std::max(prod, shift_max(acc, k));
  };
  const double total = std::pow(double(p), p + 1);
  if (total <= max_exhaustive_products) {
    for_each_tuple(p + 1, p, check);
  } else {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> pick(1, p);
    for (int i = 0; i < max_exhaustive_products; ++i) {
      std::vector<int> rs(p + 1);
      for (auto& x : rs) x = pick(rng);
      check(rs);
    }
  }
  report.add("Q_r1 ... Q_r(p+1) = 0", prod, tol);
  return report;
}

std::string MixedRelation::text() const {
  const int p = static_cast<int>(r_seq.size());
  std::ostringstream os;
  for (int j = 0; j <= p; ++j) {
    if (j) os << " + ";
    if (t_seq[j] != 1) os << "I" << t_seq[j] << " ";
    for (int i = j; i < p; ++i) os << "Q" << r_seq[i] << " ";
    os << "Q" << s << "^+";
    for (int i = 0; i < j; ++i) os << " Q" << r_seq[i];
  }
  os << " = " << 2 * p;
  if (p > 1) os << " Q" << r << (p > 2 ? "^" + std::to_string(p - 1) : "");
  os << " H";
  return os.str();
}

int canonical_t(int p, int term, int t) {
  if (term == 0) return t <= p ? 1 : t;
  if (term == p) return (t <= p - 1 || t == p + 1) ? 1 : t;
  return t <= p - 1 ? 1 : t;
}

std::vector<MixedRelation> select_mixed_tuples(int p, bool canonical) {
  if (p < 1) throw InvalidParameters("order p must be at least 1");
  std::vector<MixedRelation> out;
  for_each_tuple(p, p, [&](const std::vector<int>& rs) {
    for (int s = 1; s <= p; ++s) {
      for (int r = 1; r <= p; ++r) {
        const std::vector<int> rr(p - 1, r);
        const int bk[3] = {0, b_string(1, rr, 0, p - 2), b_string(2, rr, 0, p - 2)};
        // Term j (0-based) carries t_{j+1}; each (k, nu) fixes the sign of
        // b_{t_{nu+2-k}}^{p+k-1}. 0 means unconstrained.
        std::vector<std::array<int, 2>> need(p + 1, {0, 0});
        bool ok = true;
        for (int kk = 1; kk <= 2 && ok; ++kk) {
          for (int nu = 1; nu <= p; ++nu) {
            const int idx = nu + 2 - kk;  // 1-based t index
            const int rest = b_string(nu, rs, idx - 1, p - 1) * charge_b(s, nu) *
                             b_string(kk, rs, 0, nu - kk);
            int& slot = need[idx - 1][kk - 1];
            const int want = bk[kk] * rest;
            if (slot != 0 && slot != want) {
              ok = false;
              break;
            }
            slot = want;
          }
        }
        if (!ok) continue;
        std::vector<std::vector<int>> allowed(p + 1);
        for (int j = 0; j <= p; ++j) {
          std::set<int> seen;
          for (int t = 1; t <= p + 1; ++t) {
            if (need[j][0] && charge_b(t, p) != need[j][0]) continue;
            if (need[j][1] && charge_b(t, p + 1) != need[j][1]) continue;
            const int v = canonical ? canonical_t(p, j, t) : t;
            if (seen.insert(v).second) allowed[j].push_back(v);
          }
          if (allowed[j].empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<std::size_t> pos(p + 1, 0);
        while (true) {
          MixedRelation rel;
          rel.r_seq = rs;
          rel.s = s;
          rel.r = r;
          for (int j = 0; j <= p; ++j) rel.t_seq.push_back(allowed[j][pos[j]]);
          out.push_back(rel);
          int j = p;
          while (j >= 0 && ++pos[j] == allowed[j].size()) pos[j--] = 0;
          if (j < 0) break;
        }
      }
    }
  });
  return out;
}

std::vector<MixedRelation> brute_force_mixed_tuples(const ChargeSet& cs, double tol) {
  const int p = cs.p;
  const int k = cs.interior;
  std::vector<Shift> q, qd;
  for (const auto& m : cs.Q) {
    q.push_back(to_shift(m, 1));
    qd.push_back(to_shift(m.adjoint(), -1));
  }
  std::vector<std::vector<Complex>> idiag;
  for (const auto& m : cs.I) idiag.push_back(diagonal_of(m));
  const auto hdiag = diagonal_of(cs.H);

  std::vector<Shift> rhs;
  for (int r = 1; r <= p; ++r) {
    Shift acc{0, hdiag};
    for (int i = 0; i < p - 1; ++i) acc = compose(q[r - 1], acc);
    for (auto& x : acc.w) x *= 2.0 * p;
    rhs.push_back(acc);
  }

  std::vector<MixedRelation> out;
  for_each_tuple(p, p, [&](const std::vector<int>& rs) {
    for (int s = 1; s <= p; ++s) {
      // scaled[j][t-1] = I_t W_j.
      std::vector<std::vector<Shift>> scaled(p + 1);
      double scale = 1.0;
      for (int j = 0; j <= p; ++j) {
        Shift w{0, std::vector<Complex>(q[0].w.size(), 1.0)};
        // Q_{r_j} ... Q_{r_p} Q_s+ Q_{r_1} ... Q_{r_{j-1}}, built right to left.
        for (int i = j - 1; i >= 0; --i) w = compose(q[rs[i] - 1], w);
        w = compose(qd[s - 1], w);
        for (int i = p - 1; i >= j; --i) w = compose(q[rs[i] - 1], w);
        scale = std::max(scale, shift_max(w, k));
        for (const auto& d : idiag) scaled[j].push_back(scale_rows(w, d));
      }
      for_each_tuple(p + 1, p + 1, [&](const std::vector<int>& ts) {
        Shift sum = scaled[0][ts[0] - 1];
        for (int j = 1; j <= p; ++j)
          for (std::size_t n = 0; n < sum.w.size(); ++n) sum.w[n] += scaled[j][ts[j] - 1].w[n];
        for (int r = 1; r <= p; ++r) {
          Shift diff = sum;
          for (std::size_t n = 0; n < diff.w.size(); ++n) diff.w[n] -= rhs[r - 1].w[n];
          const double res = shift_max(diff, k) / std::max(scale, shift_max(rhs[r - 1], k));
          if (res <= tol) out.push_back(MixedRelation{rs, s, ts, r, res, true});
        }
      });
    }
  });
  return out;
}

Matrix mixed_lhs(const ChargeSet& cs, const MixedRelation& rel) {
  const int p = cs.p;
  const int dim = static_cast<int>(cs.H.rows());
  Matrix sum = Matrix::Zero(dim, dim);
  for (int j = 0; j <= p; ++j) {
    Matrix w = cs.I[rel.t_seq[j] - 1];
    for (int i = j; i < p; ++i) w = w * cs.Q[rel.r_seq[i] - 1];
    w = w * cs.Q[rel.s - 1].adjoint();
    for (int i = 0; i < j; ++i) w = w * cs.Q[rel.r_seq[i] - 1];
    sum += w;
  }
  return sum;
}

Matrix mixed_rhs(const ChargeSet& cs, const MixedRelation& rel) {
  return 2.0 * cs.p * power(cs.Q[rel.r - 1], cs.p - 1) * cs.H;
}

std::vector<MixedRelation> find_mixed_relations(const ChargeSet& cs, double tol) {
  const int p = cs.p;
  auto sel = select_mixed_tuples(p, true);

  // Relations related by I_{p+1} conjugation, which swaps Q_1 and Q_p, form
  // one class.
  using Key = std::tuple<int, std::vector<int>, int>;
  std::map<Key, std::vector<MixedRelation>> classes;
  for (const auto& rel : sel) {
    std::vector<int> sw(rel.r_seq);
    for (auto& x : sw) x = swap_ends(x, p);
    auto a = std::make_pair(rel.r_seq, rel.s);
    auto b = std::make_pair(sw, swap_ends(rel.s, p));
    const auto& m = std::min(a, b);
    classes[Key{rel.r, m.first, m.second}].push_back(rel);
  }
  auto rank = [p](const MixedRelation& x) {
    int middle = 0, total = 0;
    for (int j = 0; j <= p; ++j) {
      if (x.t_seq[j] != 1) {
        ++total;
        if (j > 0 && j < p) ++middle;
      }
    }
    return std::make_tuple(middle, total, x.t_seq, x.r_seq, x.s);
  };

  std::vector<MixedRelation> out;
  for (auto& [key, members] : classes) {
    auto best = *std::min_element(members.begin(), members.end(),
                                  [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
    // For p >= 2 the single-charge relation is dropped; it is the multilinear
    // relation of Q_r itself.
    const bool pure =
        std::all_of(best.t_seq.begin(), best.t_seq.end(), [](int t) { return t == 1; }) &&
        std::all_of(best.r_seq.begin(), best.r_seq.end(), [&](int x) { return x == best.r; }) &&
        best.s == best.r;
    if (pure && p >= 2) continue;
    best.residual = relation_residual(mixed_lhs(cs, best), mixed_rhs(cs, best), cs.interior);
    best.pass = best.residual <= tol;
    out.push_back(best);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.r_seq, x.s, x.r, x.t_seq) < std::tie(y.r_seq, y.s, y.r, y.t_seq);
  });
  return out;
}

}  // namespace clext
