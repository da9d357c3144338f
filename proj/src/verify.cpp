#include "umbra/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "umbra/error.hpp"
#include "umbra/poly_ring.hpp"
#include "umbra/umbral.hpp"
#include "umbra/virasoro.hpp"

namespace umbra {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

InstanceRng::InstanceRng(std::uint64_t seed, std::string_view stream) : engine_(seed ^ fnv1a(stream)) {}

std::uint64_t InstanceRng::next() { return engine_(); }

int InstanceRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

Rational InstanceRng::rational() { return Rational(integer(-9, 9), integer(1, 9)); }

Rational InstanceRng::nonzero() {
  Rational r = rational();
  while (r.is_zero()) r = rational();
  return r;
}

TruncatedSeries InstanceRng::series(int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(rational());
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries InstanceRng::zero_constant(int order) {
  std::vector<Rational> c{Rational(0)};
  for (int k = 1; k <= order; ++k) c.push_back(rational());
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries InstanceRng::delta(int order) {
  std::vector<Rational> c{Rational(0)};
  for (int k = 1; k <= order; ++k) c.push_back(k == 1 ? nonzero() : rational());
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries InstanceRng::unit(int order) {
  std::vector<Rational> c{Rational(1)};
  for (int k = 1; k <= order; ++k) c.push_back(rational());
  return TruncatedSeries(order, std::move(c));
}

UnivarPoly InstanceRng::poly(int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(k == degree ? nonzero() : rational());
  return UnivarPoly(std::move(c));
}

namespace {

/// Accumulates exact checks and remembers the first mismatch.
class Checker {
 public:
  explicit Checker(VerifyResult& result) : r_(result) {}

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.checks;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.first_failure = describe();
    }
  }

  template <class T>
  void equal(const std::string& where, const T& lhs, const T& rhs) {
    check(lhs == rhs, [&] { return where + ": " + text(lhs) + " != " + text(rhs); });
  }

  void series(const std::string& where, const TruncatedSeries& lhs, const TruncatedSeries& rhs, int upto) {
    for (int k = 0; k <= upto; ++k) {
      const bool present = k <= lhs.order() && k <= rhs.order();
      check(present && lhs[k] == rhs[k], [&] {
        if (!present) return where + ": coefficient t^" + std::to_string(k) + " not known";
        return where + ": coefficient t^" + std::to_string(k) + ": " + lhs[k].str() + " != " + rhs[k].str();
      });
    }
  }

  void adopt(const AdjointReport& report) {
    r_.checks += report.checks;
    if (!report.holds && r_.pass) {
      r_.pass = false;
      r_.first_failure = report.first_failure.value_or("adjoint relation failed");
    }
  }

  void note(std::string n) { r_.notes.push_back(std::move(n)); }

 private:
  static std::string text(const Rational& r) { return r.str(); }
  static std::string text(const UnivarPoly& p) { return p.pretty(); }
  static std::string text(const MultiPoly& p) { return p.str(); }
  static std::string text(const FockPoly& p) { return p.str(); }
  static std::string text(bool b) { return b ? "true" : "false"; }

  VerifyResult& r_;
};

std::string at(const char* label, std::initializer_list<std::pair<const char*, long long>> idx) {
  std::ostringstream os;
  os << label;
  const char* sep = " [";
  for (const auto& [k, v] : idx) {
    os << sep << k << "=" << v;
    sep = ", ";
  }
  os << "]";
  return os.str();
}

using Entry = std::function<void(Checker&, const VerifyOptions&, InstanceRng&)>;

struct Registration {
  std::string citation;
  Entry run;
};

// ---- series and ring entries ----

void run_bell(Checker& c, const VerifyOptions& o, InstanceRng&) {
  const int n = o.order;
  const TruncatedSeries e = TruncatedSeries::exp_t(n);
  const TruncatedSeries bell = compose(e, e - TruncatedSeries::constant(Rational(1), n));
  std::vector<Rational> oracle{Rational(1)};
  for (int k = 0; k < n; ++k) {
    Rational next(0);
    for (int j = 0; j <= k; ++j) next += binomial(k, j) * oracle[static_cast<std::size_t>(j)];
    oracle.push_back(next);
  }
  for (int k = 0; k <= n; ++k) c.equal(at("Bell number", {{"n", k}}), bell.egf(k), oracle[static_cast<std::size_t>(k)]);
}

MultiPoly random_ring_element(InstanceRng& rng) {
  MultiPoly p = MultiPoly::term(Monomial{}, rng.rational());
  for (int t = 0; t < 2; ++t) {
    MultiPoly m = MultiPoly::y(rng.integer(-2, 2));
    if (rng.integer(0, 1) == 1) m = m * MultiPoly::x(rng.integer(1, 3));
    p = p + rng.nonzero() * m;
  }
  return p;
}

void compare_taylor(Checker& c, const std::string& label, const GenSeries<TruncatedSeries>& lhs,
                    const GenSeries<TruncatedSeries>& rhs) {
  const int w = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= w; ++k) {
    const int upto = std::min(lhs[k].order(), rhs[k].order());
    c.series(label + " w^" + std::to_string(k), lhs[k], rhs[k], upto);
  }
}

void run_automorphism(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int ring_order = std::min(o.order, 8);
  for (int i = 0; i < o.instances; ++i) {
    const MultiPoly a = random_ring_element(rng);
    const MultiPoly b = random_ring_element(rng);
    const auto lhs = exp_wD(a * b, ring_order);
    const auto rhs = exp_wD(a, ring_order) * exp_wD(b, ring_order);
    for (int k = 0; k <= ring_order; ++k)
      c.equal(at("e^{wD}(ab)", {{"instance", i}, {"w", k}}), lhs[k], rhs[k]);

    const TruncatedSeries f = rng.series(o.order);
    const TruncatedSeries g = rng.series(o.order);
    compare_taylor(c, at("e^{w d/dx}(fg)", {{"instance", i}}), taylor_expand(f * g),
                   taylor_expand(f) * taylor_expand(g));
  }
}

void run_taylor(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  for (int i = 0; i < o.instances; ++i) {
    // Polynomial form: sum_k w^k f^{(k)}(x)/k! against the binomial expansion of f(x+w).
    const UnivarPoly f = rng.poly(o.order);
    UnivarPoly d = f;
    for (int k = 0; k <= o.order; ++k) {
      std::vector<Rational> oracle;
      for (int j = 0; j + k <= f.degree(); ++j) oracle.push_back(binomial(j + k, k) * f[j + k]);
      c.equal(at("f(x+w) coefficient of w^k", {{"instance", i}, {"k", k}}), d * (Rational(1) / factorial(k)),
              UnivarPoly(std::move(oracle)));
      d = d.derivative();
    }
    // Series form.
    const TruncatedSeries h = rng.series(o.order);
    const auto ex = taylor_expand(h);
    for (int k = 0; k <= o.order; ++k)
      for (int j = 0; j + k <= o.order; ++j)
        c.equal(at("h(x+w)", {{"instance", i}, {"w", k}, {"x", j}}), ex[k][j], binomial(j + k, k) * h[j + k]);
  }
}

void run_faa(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int n = o.order;
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries f = rng.series(2 * n);
    const TruncatedSeries g = rng.delta(2 * n);
    const auto lhs = taylor_expand(compose(f, g)).truncated(n);
    const auto rhs = composite_derivative_expansion(f, g, n);
    for (int k = 0; k <= n; ++k)
      c.series(at("e^{w d/dx} f(g(x))", {{"instance", i}, {"w", k}}), lhs[k], rhs[k], n);
  }
}

void run_fdbu(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int n = o.order;
  const auto lhs = exp_wD(MultiPoly::y(0), n);
  const auto rhs = faa_rhs(n);
  for (int k = 0; k <= n; ++k) c.equal(at("e^{wD}y_0", {{"w", k}}), lhs[k], rhs[k]);
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries a = rng.series(n);
    const TruncatedSeries b = rng.delta(n);
    const auto image = psi_chi(lhs, a, b);
    const auto direct = substitute_xB(a, b, n);
    for (int k = 0; k <= n; ++k) c.equal(at("A(xB(w))", {{"instance", i}, {"w", k}}), image[k], direct[k]);
  }
}

void run_adjoint(AdjointKind kind, int extra, Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries a = rng.series(o.order + extra);
    const TruncatedSeries b = kind == AdjointKind::Diff ? rng.series(o.order + extra) : rng.delta(o.order + extra);
    c.adopt(adjoint_report(kind, a, b, o.order));
  }
}

void run_bstar(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries b = rng.delta(o.order);
    const TruncatedSeries via_inverse = mul_inverse(comp_inverse(b).derivative());
    const TruncatedSeries star = b_star(b);
    c.series(at("B* = 1/(B bar)'", {{"instance", i}}), star, via_inverse, star.order());
  }
}

void run_umbral_basis(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int n = o.order;
  const TruncatedSeries touchard = TruncatedSeries::exp_t(n + 1) - TruncatedSeries::constant(Rational(1), n + 1);
  c.equal(std::string("B_2 for B = e^t - 1"), umbral_sequence(touchard, 2), UnivarPoly::parse("0,1,1"));
  for (int i = 0; i <= o.instances; ++i) {
    const TruncatedSeries b = i == 0 ? touchard : rng.delta(n + 1);
    const auto seq = umbral_sequences(b, n + 1);
    for (int k = 0; k <= n; ++k) {
      const auto& bk = seq[static_cast<std::size_t>(k)];
      c.equal(at("theta_B x^n", {{"instance", i}, {"n", k}}), theta(b, UnivarPoly::monomial(k)), bk);
      c.equal(at("D_B B_n", {{"instance", i}, {"n", k}}), shift_D(b, bk), seq[static_cast<std::size_t>(k + 1)]);
    }
  }
}

// ---- Fock space entries ----

constexpr int kModeWindow = 4;

void run_vir_bracket(Checker& c, const VerifyOptions& o, InstanceRng&) {
  for (const FockPoly& p : fock_basis(o.order)) {
    std::map<int, FockPoly> single;
    for (int m = -2 * kModeWindow; m <= 2 * kModeWindow; ++m) single[m] = L_op(m, p);
    for (int m = -kModeWindow; m <= kModeWindow; ++m) {
      for (int n = -kModeWindow; n <= kModeWindow; ++n) {
        const FockPoly lhs = L_op(m, single[n]) - L_op(n, single[m]);
        FockPoly rhs = Rational(m - n) * single[m + n];
        if (m + n == 0) rhs += Rational(m * m * m - m, 12) * p;
        c.equal(at("[L(m),L(n)]", {{"m", m}, {"n", n}}) + " on " + p.str(), lhs, rhs);
      }
    }
  }
}

void run_heis(Checker& c, const VerifyOptions& o, InstanceRng&) {
  for (const FockPoly& p : fock_basis(o.order)) {
    for (int m = -kModeWindow; m <= kModeWindow; ++m) {
      for (int n = -kModeWindow; n <= kModeWindow; ++n) {
        const FockPoly lhs = h_op(m, h_op(n, p)) - h_op(n, h_op(m, p));
        const FockPoly rhs = m + n == 0 ? Rational(m) * p : FockPoly{};
        c.equal(at("[h(m),h(n)]", {{"m", m}, {"n", n}}) + " on " + p.str(), lhs, rhs);
      }
    }
  }
}

void run_l0_weight(Checker& c, const VerifyOptions& o, InstanceRng&) {
  c.equal(std::string("L(0)y"), L_op(0, FockPoly::vacuum()), Rational(1, 2) * FockPoly::vacuum());
  for (const FockPoly& p : fock_basis(o.order)) {
    const Rational wp = weight(p);
    c.equal("L(0) on " + p.str(), L_op(0, p), wp * p);
    for (int m = -kModeWindow; m <= kModeWindow; ++m) {
      const FockPoly image = L_op(m, p);
      if (!image.is_zero()) c.equal(at("weight of L(m)p", {{"m", m}}) + " for " + p.str(), weight(image), wp - Rational(m));
    }
  }
}

void run_lm1_eq_d(Checker& c, const VerifyOptions& o, InstanceRng&) {
  for (const FockPoly& p : fock_basis(o.order))
    c.equal("L(-1) vs D on " + p.str(), L_op(-1, p), FockPoly::collapse_y(derivation_D(p.to_multipoly(0))));
}

void run_ladder(Checker& c, const VerifyOptions& o, InstanceRng&) {
  const int n_max = o.order;
  std::vector<FockPoly> v{FockPoly::vacuum()};
  for (int n = 1; n <= n_max + 1; ++n) v.push_back(L_op(-1, v.back()));
  for (int n = 0; n <= n_max; ++n) {
    for (int m = -1; m <= n_max; ++m) {
      const FockPoly lhs = L_op(m, v[static_cast<std::size_t>(n)]);
      const FockPoly rhs = m <= n ? f_rec(m, n) * v[static_cast<std::size_t>(n - m)] : FockPoly{};
      c.equal(at("L(m)L(-1)^n y", {{"m", m}, {"n", n}}), lhs, rhs);
    }
    if (n >= 1) c.equal(at("f_n(n) = (n+1) f_{n-1}(n-1)", {{"n", n}}), f_rec(n, n), Rational(n + 1) * f_rec(n - 1, n - 1));
  }
}

void run_f_closed(Checker& c, const VerifyOptions& o, InstanceRng&) {
  for (int m = -1; m <= o.order; ++m)
    for (int n = 0; n <= 2 * o.order; ++n)
      c.equal(at("f_rec = f_closed", {{"m", m}, {"n", n}}), f_rec(m, n), f_closed(m, Rational(n)));
  for (int n = 0; n <= 2 * o.order; ++n) {
    const Rational r(n);
    c.equal(at("f_0(n) = n + 1/2", {{"n", n}}), f_rec(0, n), r + Rational(1, 2));
    c.equal(at("f_1(n) = n^2", {{"n", n}}), f_rec(1, n), r * r);
    c.equal(at("f_2(n) = n(n-1)(2n-1)/2", {{"n", n}}), f_rec(2, n),
            Rational(1, 2) * r * (r - Rational(1)) * (Rational(2) * r - Rational(1)));
  }
}

void run_recsquare(Checker& c, const VerifyOptions& o, InstanceRng&) {
  for (int m = 0; m <= o.order; ++m) {
    Rational partial(0);
    for (int n = 0; n <= 2 * o.order; ++n) {
      c.equal(at("f_m(n) = f_m(0) + (m+1) sum f_{m-1}(i)", {{"m", m}, {"n", n}}), f_rec(m, n),
              f_rec(m, 0) + Rational(m + 1) * partial);
      partial += f_rec(m - 1, n);
    }
  }
}

void run_genshift_gf(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int n = o.order;
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries b = rng.delta(n + 2);
    const auto seq = umbral_sequences(b, n);
    const auto gf = exp_xB(b, n + 1);
    for (int m = -1; m <= kModeWindow; ++m) {
      const auto rhs = virasoro_w_operator(m, gf);
      for (int k = 0; k <= n; ++k) {
        const UnivarPoly lhs =
            gen_umbral_shift_m(b, m, seq[static_cast<std::size_t>(k)]) * (Rational(1) / factorial(k));
        c.equal(at("generating function", {{"instance", i}, {"m", m}, {"w", k}}), lhs, rhs[k]);
      }
    }
    const UnivarPoly p = rng.poly(n);
    c.equal(at("D_B(-1) = D_B", {{"instance", i}}), gen_umbral_shift_m(b, -1, p), shift_D(b, p));
  }
}

void run_umbvir(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  const int n_max = o.order;
  std::vector<FockPoly> v{FockPoly::vacuum()};
  for (int n = 1; n <= n_max; ++n) v.push_back(L_op(-1, v.back()));
  for (int i = 0; i < o.instances; ++i) {
    const TruncatedSeries b = rng.delta(n_max + 2);
    for (int n = 0; n < n_max; ++n)
      c.equal(at("D_B phi_B L(-1)^n y", {{"instance", i}, {"n", n}}), shift_D(b, phi_B(v[static_cast<std::size_t>(n)], b)),
              phi_B(v[static_cast<std::size_t>(n + 1)], b));
  }
}

void run_sheffer(Checker& c, const VerifyOptions& o, InstanceRng& rng) {
  c.equal(std::string("t_0(-2)"), sheffer_ts(0, Rational(-2)).t, Rational(1));
  c.equal(std::string("t_1(-2)"), sheffer_ts(1, Rational(-2)).t, Rational(-1, 2));
  const int points = std::max(o.instances, 20);
  for (int i = 0; i < points; ++i) {
    const Rational x = rng.rational();
    for (int n = 0; n <= o.order; ++n) {
      const ShefferValues v = sheffer_ts(n, x);
      c.equal(at("t_n(x) = f_{n-1}(x+n)", {{"point", i}, {"n", n}}), v.t, f_closed(n - 1, x + Rational(n)));
      c.equal(at("s_n = t_n/n!", {{"point", i}, {"n", n}}), v.s, v.t / factorial(n));
      if (n >= 1)
        c.equal(at("s_n(x) = s_{n-1}(x) + s_n(x-1)", {{"point", i}, {"n", n}}), v.s,
                sheffer_ts(n - 1, x).s + sheffer_ts(n, x - Rational(1)).s);
    }
  }
  for (int x = 0; x <= 4; ++x)
    for (int n = 0; n <= o.order; ++n)
      c.equal(at("t_n at integer x against the recurrence", {{"x", x}, {"n", n}}), sheffer_ts(n, Rational(x)).t,
              f_rec(n - 1, x + n));
}

void run_f_heuristic(Checker& c, const VerifyOptions& o, InstanceRng&) {
  int outside = 0;
  int outside_hold = 0;
  for (int l = -1; l <= o.order; ++l) {
    for (int m = -1; m <= o.order; ++m) {
      if (l + m < -1) continue;
      for (int n = 0; n <= o.order; ++n) {
        const bool holds = f_heuristic_cell(l, m, n);
        if (l + m <= n) {
          c.check(holds, [&] { return at("heuristic identity", {{"l", l}, {"m", m}, {"n", n}}); });
        } else {
          ++outside;
          if (holds) ++outside_hold;
        }
      }
    }
  }
  c.note("cells with l+m > n: " + std::to_string(outside_hold) + " of " + std::to_string(outside) + " hold");
}

const std::vector<std::pair<std::string, Registration>>& registry() {
  static const std::vector<std::pair<std::string, Registration>> entries = [] {
    std::vector<std::pair<std::string, Registration>> e;
    auto adj = [](AdjointKind k, int extra) {
      return [k, extra](Checker& c, const VerifyOptions& o, InstanceRng& r) { run_adjoint(k, extra, c, o, r); };
    };
    e.push_back({"AUTOMORPHISM", {"the automorphism property", run_automorphism}});
    e.push_back({"TAYLOR", {"e^{w d/dx}f(x)=f(x+w)", run_taylor}});
    e.push_back({"FAA", {"Let g(x) have zero constant term", run_faa}});
    e.push_back({"FDBU", {"e^{wD}y_{0}=\\sum_{n >= 0}", run_fdbu}});
    e.push_back({"BELL", {"compose(exp, exp-1)", run_bell}});
    e.push_back({"ADJNEW", {"All the identities are proved by setting x=1", adj(AdjointKind::AdjNew, 2)}});
    e.push_back({"ADJ-MUL", {"viewed as a multiplication operator", adj(AdjointKind::Mul, 3)}});
    e.push_back({"ADJ-DIFF", {"viewed as a multiplication operator", adj(AdjointKind::Diff, 1)}});
    e.push_back({"ADJ-SUBST", {"S_{B} and theta_{B} are adjoint", adj(AdjointKind::Subst, 1)}});
    e.push_back({"ADJ-SHIFT", {"D_{B} and B^{*}(v) o d/dv", adj(AdjointKind::Shift, 1)}});
    e.push_back({"BSTAR", {"follows from the chain rule", run_bstar}});
    e.push_back({"UMBRAL-BASIS", {"theta_B x^n = B_n(x), D_B B_n = B_{n+1}", run_umbral_basis}});
    e.push_back({"VIR-BRACKET", {"(1/12)(m^{3}-m)delta_{m+n,0}", run_vir_bracket}});
    e.push_back({"HEIS", {"abm delta_{m+n,0}c", run_heis}});
    e.push_back({"L0-WEIGHT", {"the lowest weight of the module is", run_l0_weight}});
    e.push_back({"LM1-EQ-D", {"is identical to the operator D", run_lm1_eq_d}});
    e.push_back({"LADDER", {"f_{m}(n)L(-1)^{n-m}y", run_ladder}});
    e.push_back({"F-CLOSED", {"(2n-m+1)", run_f_closed}});
    e.push_back({"RECSQUARE", {"(m+1)sum_{i=0}^{n-1}f_{m-1}(i)", run_recsquare}});
    e.push_back({"GENSHIFT-GF", {"w^{m+1}d/dw + (m+1)/2 w^{m}", run_genshift_gf}});
    e.push_back({"UMBVIR", {"phi_{B} o L(-1)^{n+1}y", run_umbvir}});
    e.push_back({"SHEFFER-TS", {"particularly simple recursion", run_sheffer}});
    e.push_back({"F-HEURISTIC", {"unmathematically ignore the restriction", run_f_heuristic}});
    return e;
  }();
  return entries;
}

const Registration& lookup(std::string_view tag) {
  for (const auto& [name, reg] : registry())
    if (name == tag) return reg;
  throw MathError(ErrorCode::UnknownIdentityTag, "unknown identity tag '" + std::string(tag) + "'");
}

}  // namespace

const std::vector<std::string>& registry_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& entry : registry()) t.push_back(entry.first);
    return t;
  }();
  return tags;
}

std::string_view registry_citation(std::string_view tag) { return lookup(tag).citation; }

VerifyResult run_entry(std::string_view tag, const VerifyOptions& options) {
  if (options.order < 0) throw MathError(ErrorCode::InvalidArgument, "order must be nonnegative");
  const Registration& reg = lookup(tag);
  VerifyResult result;
  result.tag = std::string(tag);
  result.citation = reg.citation;
  Checker checker(result);
  InstanceRng rng(options.seed, tag);
  try {
    reg.run(checker, options, rng);
  } catch (const MathError& e) {
    checker.check(false, [&] { return std::string("domain error: ") + e.what(); });
  }
  return result;
}

std::vector<VerifyResult> run_entries(const std::vector<std::string>& tags, const VerifyOptions& options) {
  for (const auto& t : tags) lookup(t);
  std::vector<std::future<VerifyResult>> pending;
  pending.reserve(tags.size());
  for (const auto& t : tags) pending.push_back(std::async(std::launch::async, [&t, &options] { return run_entry(t, options); }));
  std::vector<VerifyResult> out;
  out.reserve(tags.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace umbra
