#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moplab/core/report.hpp"
#include "moplab/core/univariate.hpp"
#include "moplab/detquotient/multivariate.hpp"
#include "moplab/models/models.hpp"
#include "moplab/symfun/schur.hpp"

namespace moplab {

struct ZeroCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

// Numerator shift and xi orientation for C_RQ = prod xi_{R,Q}(...) / alpha.
struct AlphaConvention {
  int shift = -1;  // xi_{R,Q}(N + shift + a + b), ...
  bool transposed = false;
  // a, b, c fixed; d = z - a - b - c
  std::array<Rational, 3> abc{Rational(1, 3), Rational(2, 7), Rational(5, 11)};

  std::string str() const {
    return std::string("shift=N") + (shift ? std::to_string(shift) : "") + (transposed ? ",xi=transposed" : ",xi=plain");
  }
};

struct AlphaRecord {
  Partition r, q;
  int n = 0;
  ParamScalar alpha;      // raw * eps * S_{R/Q}{delta_1}
  ParamScalar alpha_raw;  // numerator product / C_RQ
  std::optional<LinearFactorization> factored;
  bool interacting = false;            // printed convention
  bool interacting_geometric = false;  // rows share a column
  std::string convention;
};

inline ParamScalar z_symbol() { return ParamScalar::symbol("z"); }

// Theta_R = sum C_RQ W_Q over the normalized Wilson family, as a function of z.
inline ParamScalar wilson_c(const Partition& r, const Partition& q, int n, const AlphaConvention& cv) {
  ParamScalar a(cv.abc[0]), b(cv.abc[1]), c(cv.abc[2]);
  ParamScalar d = z_symbol() - a - b - c;
  return inverse_expansion(wilson_family(a, b, c, d, true), r, n).at(q);
}

// alpha = eps S_{R/Q}{delta_1} prod xi_{R,Q} / C_RQ with eps = (-1)^{|Q| + N(N-1)/2};
// the sign and skew factor make C_RR = 1 and the N = 1 case the single-variable one.
inline AlphaRecord alpha_wilson(const Partition& r, const Partition& q, int n, const AlphaConvention& cv = {}) {
  ParamScalar c = wilson_c(r, q, n, cv);
  if (c.is_zero()) throw ZeroCoefficient("C_{" + r.str() + "," + q.str() + "} vanishes at N=" + std::to_string(n));
  ParamScalar a(cv.abc[0]), b(cv.abc[1]), cc(cv.abc[2]);
  ParamScalar d = z_symbol() - a - b - cc;
  ParamScalar base(n + cv.shift);
  ParamScalar num = xi_ratio(r, q, ParamScalar(n), cv.transposed) * xi_ratio(r, q, base + a + b, cv.transposed) *
                    xi_ratio(r, q, base + a + cc, cv.transposed) * xi_ratio(r, q, base + a + d, cv.transposed);
  AlphaRecord rec;
  rec.r = r;
  rec.q = q;
  rec.n = n;
  rec.alpha_raw = num / c;
  rec.alpha = rec.alpha_raw * ParamScalar(eval_delta(skew_schur(r, q), 1)) *
              sign_pow<ParamScalar>(q.size() + n * (n - 1) / 2);
  URational u = reduce_univariate(rec.alpha, symbol_id("z"));
  if (u.den.degree() == 0) rec.factored = factor_linear(u.num);
  rec.interacting = rows_interact(r, q, RowsConvention::Printed);
  rec.interacting_geometric = rows_interact(r, q, RowsConvention::Geometric);
  rec.convention = cv.str();
  return rec;
}

inline std::string alpha_factored_str(const AlphaRecord& rec) {
  if (!rec.factored) return rec.alpha.str();
  std::string body = linear_factors_str(*rec.factored, "z");
  if (rec.factored->constant.is_one()) return body.empty() ? "1" : body;
  return rec.factored->constant.str() + (body.empty() ? "" : "*" + body);
}

// True when alpha is nonzero and does not depend on how z is split among a, b, c, d.
inline bool alpha_depends_on_z_only(const Partition& r, const Partition& q, int n, AlphaConvention cv) {
  ParamScalar first = alpha_wilson(r, q, n, cv).alpha;
  if (first.is_zero()) return false;
  cv.abc = {Rational(3, 5), Rational(1, 9), Rational(7, 4)};
  return first == alpha_wilson(r, q, n, cv).alpha;
}

// ---- closed-form candidates -------------------------------------------------

// (z + q - 1 + 2N)_{r-q} as printed; resolved: (z + 2N - 2 + 2q)_{r-q}.
inline ParamScalar alpha_single_row(int r, int q, int n, bool printed) {
  ParamScalar z = z_symbol();
  return printed ? pochhammer(z + ParamScalar(q - 1 + 2 * n), r - q) : pochhammer(z + ParamScalar(2 * n - 2 + 2 * q), r - q);
}

// Two-row formula. `swapped` exchanges the branch conditions (q1 >= r2 takes the
// product, q1 < r2 the quotient). nullopt when no branch applies.
inline std::optional<ParamScalar> alpha_two_row(const Partition& r, const Partition& q, int n, bool swapped) {
  const int r1 = r.row(1), r2 = r.row(2), q1 = q.row(1), q2 = q.row(2);
  ParamScalar z = z_symbol();
  ParamScalar first = pochhammer(ParamScalar(2 * n + 2 * q1 - 2) + z, r1 - q1);
  auto quotient = [&] {
    int len = std::min(r1, q1 - q2 + r2) - q2 + 1;
    return first * pochhammer(ParamScalar(2 * n + 2 * q2 - 4) + z, len) / (ParamScalar(2 * n + q1 + q2 - 4) + z);
  };
  auto product = [&] { return first * pochhammer(ParamScalar(2 * n + 2 * q2 - 4) + z, r2 - q2); };
  if (!swapped) {
    if (q1 > r2) return quotient();
    if (q1 < r2) return product();
    return std::nullopt;
  }
  return q1 >= r2 ? product() : quotient();
}

// prod_i (z + 2(N - 1 + Q_i))_{R_i - Q_i} as printed; resolved uses N - i.
inline ParamScalar alpha_noninteracting(const Partition& r, const Partition& q, int n, bool printed) {
  ParamScalar out(1), z = z_symbol();
  for (int i = 1; i <= r.length(); ++i) {
    int shift = printed ? 2 * (n - 1 + q.row(i)) : 2 * (n - i + q.row(i));
    out = out * pochhammer(z + ParamScalar(shift), r.row(i) - q.row(i));
  }
  return out;
}

// The N = 3 examples as printed; the first entry has no value in the source.
struct AlphaExample {
  Partition r, q;
  std::optional<ParamScalar> value;
};

inline std::vector<AlphaExample> alpha_examples_n3() {
  ParamScalar z = z_symbol();
  auto f = [&](std::initializer_list<int> shifts) {
    ParamScalar out(1);
    for (int s : shifts) out = out * factored(z + ParamScalar(s));
    return out;
  };
  return {
      {Partition{3, 2, 1}, Partition{2, 1}, std::nullopt},
      {Partition{3, 3, 2}, Partition{3, 2, 1}, f({2, 6})},
      {Partition{3, 3, 1}, Partition{3, 1}, f({0, 4, 5})},
      {Partition{3, 3, 1}, Partition{3, 1}, f({0, 4, 5})},
      {Partition{3, 2, 1}, Partition{2}, f({1, 2, 3, 8})},
      {Partition{2, 2, 2}, Partition{1, 1, 1}, f({4, 5, 6})},
      {Partition{3, 3, 3}, Partition{2, 2, 1}, f({2, 5, 7, 8})},
  };
}

inline Report alpha_report(const std::string& id, const AlphaRecord& rec, const ParamScalar& formula) {
  return make_report(id, "wilson", rec.r, rec.q, rec.n, rec.alpha, formula, rec.convention);
}

// Single-row, two-row and non-interacting formulas against the lab for all
// Q inside R, |R| <= max_size, l(R) <= min(N, 3). `printed` picks the printed
// variant of each formula, otherwise the resolved one.
inline std::vector<Report> alpha_conjecture_suite(int max_size, int n, bool printed, const AlphaConvention& cv = {}) {
  std::vector<Report> out;
  const std::string tag = printed ? ":printed" : ":resolved";
  for (auto& r : partitions_up_to(max_size, std::min(n, 3))) {
    if (r.size() == 0) continue;
    for (auto& q : subshapes(r, n)) {
      AlphaRecord rec;
      try {
        rec = alpha_wilson(r, q, n, cv);
      } catch (const ZeroCoefficient& e) {
        out.push_back(make_report("alpha:zero", "wilson", r, q, n, ParamScalar(0), ParamScalar(1), e.what()));
        continue;
      }
      if (r.length() == 1) out.push_back(alpha_report("alpha:single-row" + tag, rec, alpha_single_row(r.row(1), q.row(1), n, printed)));
      if (r.length() == 2)
        if (auto f = alpha_two_row(r, q, n, !printed)) out.push_back(alpha_report("alpha:two-row" + tag, rec, *f));
      bool inter = printed ? rec.interacting : rec.interacting_geometric;
      if (!inter) out.push_back(alpha_report("alpha:non-interacting" + tag, rec, alpha_noninteracting(r, q, n, printed)));
    }
  }
  return out;
}

}  // namespace moplab
