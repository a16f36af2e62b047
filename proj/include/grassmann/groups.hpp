#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassmann/endomorphism.hpp"
#include "grassmann/linsolve.hpp"

namespace grassmann {

enum class GroupKind {
  Omega,
  OmegaS,
  Gamma,
  GammaPow,
  GammaAsc,
  GammaGraded,
  U,
  UPow,
  Phi,
  PhiI,
  PhiPrime,
  PhiPow,
  PhiPrimeLayer,
  Sigma,
  SigmaPrime,
  SigmaPrimePow,
  SigmaDoublePrime,
  GEv,
  GOd,
  GZs,
};

struct GroupId {
  GroupKind kind;
  int param = 0;

  static GroupId omega() { return {GroupKind::Omega}; }
  static GroupId omega_s(int s) { return {GroupKind::OmegaS, s}; }
  static GroupId gamma() { return {GroupKind::Gamma}; }
  static GroupId gamma_pow(int i) { return {GroupKind::GammaPow, i}; }
  static GroupId gamma_asc(int two_s) { return {GroupKind::GammaAsc, two_s}; }
  static GroupId gamma_graded(int s) { return {GroupKind::GammaGraded, s}; }
  static GroupId u() { return {GroupKind::U}; }
  static GroupId u_pow(int i) { return {GroupKind::UPow, i}; }
  static GroupId phi() { return {GroupKind::Phi}; }
  static GroupId phi_i(int i) { return {GroupKind::PhiI, i}; }
  static GroupId phi_prime() { return {GroupKind::PhiPrime}; }
  static GroupId phi_pow(int k) { return {GroupKind::PhiPow, k}; }
  static GroupId phi_prime_layer(int k) { return {GroupKind::PhiPrimeLayer, k}; }
  static GroupId sigma() { return {GroupKind::Sigma}; }
  static GroupId sigma_prime() { return {GroupKind::SigmaPrime}; }
  static GroupId sigma_prime_pow(int j) { return {GroupKind::SigmaPrimePow, j}; }
  static GroupId sigma_double_prime() { return {GroupKind::SigmaDoublePrime}; }
  static GroupId g_ev() { return {GroupKind::GEv}; }
  static GroupId g_od() { return {GroupKind::GOd}; }
  static GroupId g_zs(int s) { return {GroupKind::GZs, s}; }

  friend bool operator==(const GroupId &, const GroupId &) = default;
};

struct GroupName {
  GroupKind kind;
  const char *name;
  bool takes_param;
};

inline constexpr GroupName kGroupNames[] = {
    {GroupKind::Omega, "omega", false},
    {GroupKind::OmegaS, "omega_s", true},
    {GroupKind::Gamma, "gamma", false},
    {GroupKind::GammaPow, "gamma_pow", true},
    {GroupKind::GammaAsc, "gamma_asc", true},
    {GroupKind::GammaGraded, "gamma_graded", true},
    {GroupKind::U, "u", false},
    {GroupKind::UPow, "u_pow", true},
    {GroupKind::Phi, "phi", false},
    {GroupKind::PhiI, "phi_i", true},
    {GroupKind::PhiPrime, "phi_prime", false},
    {GroupKind::PhiPow, "phi_pow", true},
    {GroupKind::PhiPrimeLayer, "phi_prime_layer", true},
    {GroupKind::Sigma, "sigma", false},
    {GroupKind::SigmaPrime, "sigma_prime", false},
    {GroupKind::SigmaPrimePow, "sigma_prime_pow", true},
    {GroupKind::SigmaDoublePrime, "sigma_double_prime", false},
    {GroupKind::GEv, "g_ev", false},
    {GroupKind::GOd, "g_od", false},
    {GroupKind::GZs, "g_zs", true},
};

inline std::string to_string(const GroupId &g) {
  for (auto &e : kGroupNames)
    if (e.kind == g.kind) return e.takes_param ? std::string(e.name) + ":" + std::to_string(g.param) : e.name;
  return "?";
}

// "gamma", "gamma_asc:4", "phi_i:2", ...
inline GroupId parse_group(const std::string &text) {
  std::string name = text, arg;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  for (auto &e : kGroupNames) {
    if (name != e.name) continue;
    if (e.takes_param != !arg.empty())
      throw ParseError(e.takes_param ? "group " + name + " needs a parameter, e.g. " + name + ":3"
                                     : "group " + name + " takes no parameter");
    int p = 0;
    if (e.takes_param) {
      if (arg.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad group parameter '" + arg + "'");
      p = std::stoi(arg);
    }
    return {e.kind, p};
  }
  throw ParseError("unknown group '" + text + "'");
}

template <Coefficient K>
std::vector<Element<K>> differences(const Endomorphism<K> &s) {
  std::vector<Element<K>> d;
  for (int i = 1; i <= s.n(); ++i) d.push_back(s.image(i) - Element<K>::generator(s.n(), i));
  return d;
}

namespace detail {

template <Coefficient K>
bool all_diffs(const Endomorphism<K> &s, auto pred) {
  for (auto &d : differences(s))
    if (!pred(d)) return false;
  return true;
}

template <Coefficient K>
bool in_gamma(const Endomorphism<K> &s) {
  return all_diffs(s, [](const Element<K> &d) { return d.is_odd() && d.in_power_of_m(3); });
}

template <Coefficient K>
bool preserves_ideal(const Endomorphism<K> &s, int i) {
  return left_mul(i, s.image(i)).is_zero();
}

template <Coefficient K>
bool preserves_all_ideals(const Endomorphism<K> &s) {
  for (int i = 1; i <= s.n(); ++i)
    if (!preserves_ideal(s, i)) return false;
  return true;
}

template <Coefficient K>
bool images_supported(const Endomorphism<K> &s, auto degree_ok) {
  for (auto &im : s.images())
    for (auto &t : im.terms())
      if (!degree_ok(degree(t.first))) return false;
  return true;
}

}  // namespace detail

template <Coefficient K>
struct GammaWord;

template <Coefficient K>
GammaWord<K> decompose_gamma(const Endomorphism<K> &s);

template <Coefficient K>
struct MembershipResult {
  bool member = false;
  std::optional<Element<K>> witness;  // the element a of omega_{1+a} for the inner groups
};

// Solves omega_{1+a} = s for an odd a without a top-degree term.
template <Coefficient K>
std::optional<Element<K>> inner_witness(const Endomorphism<K> &s) {
  int n = s.n();
  std::vector<Element<K>> u;
  K half = K(2).inv();
  for (auto &d : differences(s)) u.push_back(-half * d);
  try {
    auto fam = solve_xi_system(u);
    Element<K> a = fam.particular.filter([n](Mask m) { return degree(m) < n; });
    if (!a.is_odd()) return std::nullopt;
    if (!(inner(Element<K>::one(n) + a) == s)) return std::nullopt;
    return a;
  } catch (const UnsolvableError &) {
    return std::nullopt;
  }
}

template <Coefficient K>
MembershipResult<K> member_with_witness(const Endomorphism<K> &s, const GroupId &g) {
  using detail::all_diffs;
  using detail::in_gamma;
  int n = s.n();
  if (!is_automorphism(s)) throw DomainError("membership is decided for automorphisms only");
  auto need_param = [&](bool ok) {
    if (!ok) throw DomainError("bad parameter for group " + to_string(g));
  };
  MembershipResult<K> r;
  switch (g.kind) {
    case GroupKind::Omega:
    case GroupKind::OmegaS: {
      if (g.kind == GroupKind::OmegaS) need_param(g.param >= 1 && g.param % 2 == 1);
      auto a = inner_witness(s);
      if (!a) return r;
      if (g.kind == GroupKind::OmegaS)
        for (auto &t : a->terms())
          if (degree(t.first) % g.param) return r;
      r.member = true;
      r.witness = a;
      return r;
    }
    case GroupKind::Gamma: r.member = in_gamma(s); return r;
    case GroupKind::GammaPow:
      need_param(g.param >= 1);
      r.member = in_gamma(s) && all_diffs(s, [&](const Element<K> &d) { return d.in_power_of_m(g.param); });
      return r;
    case GroupKind::GammaAsc:
      need_param(g.param >= 0);
      r.member = in_gamma(s) && jacobian(s).valuation >= g.param;
      return r;
    case GroupKind::GammaGraded:
      need_param(g.param >= 2 && g.param % 2 == 0);
      r.member = in_gamma(s) && all_diffs(s, [&](const Element<K> &d) {
                   for (auto &t : d.terms())
                     if (degree(t.first) <= 1 || (degree(t.first) - 1) % g.param) return false;
                   return true;
                 });
      return r;
    case GroupKind::U:
    case GroupKind::UPow: {
      int p = g.kind == GroupKind::U ? 2 : g.param;
      need_param(p >= 1);
      r.member = all_diffs(s, [&](const Element<K> &d) { return d.in_power_of_m(std::max(p, 2)); });
      return r;
    }
    case GroupKind::Phi: r.member = in_gamma(s) && detail::preserves_all_ideals(s); return r;
    case GroupKind::PhiI:
      need_param(g.param >= 1 && g.param <= n);
      r.member = in_gamma(s) && detail::preserves_ideal(s, g.param);
      return r;
    case GroupKind::PhiPrime: r.member = detail::preserves_all_ideals(s); return r;
    case GroupKind::PhiPow:
      need_param(g.param >= 1);
      r.member = member_with_witness(s, GroupId::phi()).member &&
                 member_with_witness(s, GroupId::gamma_pow(g.param)).member;
      return r;
    case GroupKind::PhiPrimeLayer: {
      need_param(g.param >= 3 && g.param % 2 == 1);
      int two_s = g.param - 1;
      if (!member_with_witness(s, GroupId::phi_pow(g.param)).member) return r;
      for (int i = 1; i <= n; ++i) {
        Element<K> b = skew_partial(i, s.image(i)).degree_part(two_s);
        for (auto &t : b.terms())
          if (i < n - two_s || !in_layer_module(n, i, t.first)) return r;
      }
      r.member = true;
      return r;
    }
    case GroupKind::Sigma: r.member = in_gamma(s) && jacobian(s).det == Element<K>::one(n); return r;
    case GroupKind::SigmaPrime:
      r.member = member_with_witness(s, GroupId::sigma()).member && detail::preserves_all_ideals(s);
      return r;
    case GroupKind::SigmaPrimePow:
      need_param(g.param >= 1);
      r.member = member_with_witness(s, GroupId::sigma_prime()).member &&
                 member_with_witness(s, GroupId::gamma_pow(g.param)).member;
      return r;
    case GroupKind::SigmaDoublePrime: {
      if (!member_with_witness(s, GroupId::sigma()).member) return r;
      auto w = decompose_gamma(s);
      r.member = member_with_witness(w.phi, GroupId::sigma_prime_pow(5)).member;
      return r;
    }
    case GroupKind::GEv:
      r.member = detail::images_supported(s, [](int d) { return d == 1 || d % 2 == 0; });
      return r;
    case GroupKind::GOd: r.member = detail::images_supported(s, [](int d) { return d % 2 == 1; }); return r;
    case GroupKind::GZs:
      need_param(g.param >= 1);
      r.member = detail::images_supported(s, [&](int d) { return d % g.param == 1 % g.param; });
      return r;
  }
  return r;
}

template <Coefficient K>
bool member(const Endomorphism<K> &s, const GroupId &g) {
  return member_with_witness(s, g).member;
}

// ---------------------------------------------------------------------------
// sigma = omega_{1+a} gamma_b sigma_A, gamma_b(x_i) = x_i + b_i

template <Coefficient K>
struct OgaFactors {
  Element<K> a;
  std::vector<Element<K>> b;
  Matrix<K> A;

  Endomorphism<K> omega() const { return inner(Element<K>::one(a.n()) + a); }
  Endomorphism<K> gamma() const { return gamma_shift(b); }
  Endomorphism<K> linear_map() const { return linear(A); }
  Endomorphism<K> recompose() const { return omega() * gamma() * linear_map(); }
};

template <Coefficient K>
OgaFactors<K> decompose_omega_gamma_linear(const Endomorphism<K> &s, bool cross_check = true) {
  int n = s.n();
  if (!is_automorphism(s)) throw NotInvertibleError("not an automorphism");
  OgaFactors<K> f;
  f.A = s.linear_part();
  Matrix<K> ainv = f.A.inverse();
  auto mix = [&](const std::vector<Element<K>> &v) {
    std::vector<Element<K>> r(n, Element<K>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!ainv(i, k).is_zero()) r[i] += ainv(i, k) * v[k];
    return r;
  };
  std::vector<Element<K>> od, ev;
  for (auto &im : s.images()) {
    od.push_back(im.odd_part());
    ev.push_back(im.even_part());
  }
  f.b = mix(od);
  for (int i = 0; i < n; ++i) f.b[i] -= Element<K>::generator(n, i + 1);
  Endomorphism<K> g = gamma_shift(f.b);
  Endomorphism<K> ginv = inverse_by_iteration(g);
  if (cross_check && !(inverse_by_formula(g) == ginv))
    throw InternalError("inversion strategies disagree on gamma_b");
  std::vector<Element<K>> gev;
  for (auto &e : ev) gev.push_back(ginv.apply(e));
  std::vector<Element<K>> ap = mix(gev);
  Element<K> sum = skew_partial(1, ap[0]);
  for (int i = 1; i < n; ++i)
    sum += Element<K>::monomial(n, full_mask(i)) * partial_multi(full_mask(i), skew_partial(i + 1, ap[i]));
  Element<K> a = g.apply(-K(2).inv() * sum);
  f.a = a.filter([n](Mask m) { return degree(m) < n; });
  if (!f.a.is_odd()) throw InternalError("inner part is not odd");
  if (!(f.recompose() == s)) throw InternalError("omega-gamma-linear factors do not recompose");
  return f;
}

// ---------------------------------------------------------------------------
// sigma = ... omega_{1+a_5} sigma_{b_5} omega_{1+a_3} sigma_{b_3} omega_{1+a_1}

template <Coefficient K>
struct UFactor {
  enum Kind { Inner, Shift } kind;
  int degree;                  // degree of the leading terms it absorbs
  Element<K> a;                // Inner: omega_{1+a}, a of degree degree-1
  std::vector<Element<K>> b;   // Shift: x_i -> x_i + b_i, b_i of degree `degree`

  Endomorphism<K> map() const {
    return kind == Inner ? inner(Element<K>::one(a.n()) + a) : gamma_shift(b);
  }
};

template <Coefficient K>
struct UnipotentWord {
  int n = 0;
  std::vector<UFactor<K>> factors;  // left to right, highest degree first

  Endomorphism<K> recompose() const {
    Endomorphism<K> r = Endomorphism<K>::identity(n);
    for (auto &f : factors) r = r * f.map();
    return r;
  }
};

// Odd a with 2 a x_i = l_i for the even leading terms l_i = x_i b_i:
// a = c_2 + sum_i x_1...x_i c_{i+2}, c_2 = -b_1/2, c_{i+2} = -1/2 d_i...d_1(b_{i+1}).
template <Coefficient K>
Element<K> absorb_even_layer(const std::vector<Element<K>> &lead, int k) {
  int n = static_cast<int>(lead.size());
  K mhalf = -K(2).inv();
  std::vector<Element<K>> b;
  for (int i = 1; i <= n; ++i) {
    Element<K> bi = skew_partial(i, lead[i - 1]);
    if (!(left_mul(i, bi) == lead[i - 1])) throw NotInGroupError("leading term of x" + std::to_string(i) + " is not in (x" + std::to_string(i) + ")");
    b.push_back(bi);
  }
  Element<K> a = mhalf * b[0];
  for (int i = 1; i < n; ++i)
    a += Element<K>::monomial(n, full_mask(i)) * (mhalf * partial_multi(full_mask(i), b[i]));
  return a.degree_part(k - 1);
}

template <Coefficient K>
UnipotentWord<K> decompose_unipotent(const Endomorphism<K> &s) {
  int n = s.n();
  if (!member(s, GroupId::u())) throw NotInGroupError("linear part is not the identity");
  UnipotentWord<K> w;
  w.n = n;
  Endomorphism<K> r = s;
  std::vector<UFactor<K>> right_first;
  for (int k = 2; k <= n; ++k) {
    auto d = differences(r);
    std::vector<Element<K>> lead;
    for (auto &e : d) {
      if (!e.in_power_of_m(k)) throw InternalError("residual left U^" + std::to_string(k));
      lead.push_back(e.degree_part(k));
    }
    if (k % 2) {
      UFactor<K> f{UFactor<K>::Shift, k, Element<K>(n), lead};
      r = r * inverse(f.map());
      right_first.push_back(std::move(f));
    } else {
      Element<K> a = absorb_even_layer(lead, k);
      UFactor<K> f{UFactor<K>::Inner, k, a, {}};
      r = r * inner(Element<K>::one(n) - a);
      right_first.push_back(std::move(f));
    }
  }
  if (!r.is_identity()) throw InternalError("unipotent residual is not the identity");
  w.factors.assign(right_first.rbegin(), right_first.rend());
  if (!(w.recompose() == s)) throw InternalError("unipotent factors do not recompose");
  return w;
}

// ---------------------------------------------------------------------------
// sigma = phi xi_{od(n)} ... xi_5 xi_3 with phi in Phi

// xi_{1,b_1} xi_{2,b_2} ... xi_{n,b_n}, each b_i odd of the factor's degree and free of x_i.
template <Coefficient K>
struct XiFactor {
  int degree;
  std::vector<Element<K>> b;

  Endomorphism<K> map() const {
    int n = static_cast<int>(b.size());
    Endomorphism<K> r = Endomorphism<K>::identity(n);
    for (int i = 1; i <= n; ++i)
      if (!b[i - 1].is_zero()) r = r * shift(i, b[i - 1]);
    return r;
  }
};

template <Coefficient K>
struct GammaWord {
  Endomorphism<K> phi;
  std::vector<XiFactor<K>> xis;  // xis[0] is xi_3, xis[1] is xi_5, ...

  Endomorphism<K> recompose() const {
    Endomorphism<K> r = phi;
    for (auto it = xis.rbegin(); it != xis.rend(); ++it) r = r * it->map();
    return r;
  }
};

template <Coefficient K>
GammaWord<K> decompose_gamma(const Endomorphism<K> &s) {
  int n = s.n();
  if (!member(s, GroupId::gamma())) throw NotInGroupError("not in Gamma");
  Endomorphism<K> psi = inverse(s);
  GammaWord<K> w;
  for (int j = 3; j <= n; j += 2) {
    XiFactor<K> xi{j, {}};
    for (int i = 1; i <= n; ++i) xi.b.push_back(-phi_i(i, psi.image(i)).degree_part(j));
    psi = xi.map() * psi;
    w.xis.push_back(std::move(xi));
  }
  if (!member(psi, GroupId::phi())) throw InternalError("residual of the Gamma decomposition is not in Phi");
  w.phi = inverse(psi);
  if (!(w.recompose() == s)) throw InternalError("Gamma factors do not recompose");
  return w;
}

// ---------------------------------------------------------------------------
// Sigma' coordinates: sigma = sigma_3 sigma_5 ..., each an ordered product of
// rho_{i, j(alpha); lambda x^alpha}

template <Coefficient K>
struct SigmaPrimeWord {
  int n = 0;
  std::vector<KernelCoordinate<K>> coordinates;  // s ascending, then extraction order

  Endomorphism<K> layer(int s) const {
    Endomorphism<K> r = Endomorphism<K>::identity(n);
    for (auto &c : coordinates)
      if (c.s == s && !c.lambda.is_zero()) r = r * rho(n, c.i, c.j, c.alpha, c.lambda);
    return r;
  }

  Endomorphism<K> recompose() const {
    Endomorphism<K> r = Endomorphism<K>::identity(n);
    for (int s = 1; s <= max_layer(n); ++s) r = r * layer(s);
    return r;
  }
};

template <Coefficient K>
SigmaPrimeWord<K> decompose_sigma_prime(const Endomorphism<K> &s) {
  int n = s.n();
  if (!member(s, GroupId::sigma_prime())) throw NotInGroupError("not in Sigma'");
  SigmaPrimeWord<K> w;
  w.n = n;
  Endomorphism<K> r = s;
  for (int l = 1; l <= max_layer(n); ++l) {
    std::vector<Element<K>> v;
    for (int i = 1; i <= n; ++i) {
      Element<K> q = skew_partial(i, r.image(i)) - Element<K>::one(n);
      if (!q.in_power_of_m(2 * l)) throw InternalError("Sigma' residual has low-degree terms");
      v.push_back(q.degree_part(2 * l));
    }
    auto ks = kernel_split(v, l);
    if (!ks.residual.sum().is_zero() || std::any_of(ks.residual.parts.begin(), ks.residual.parts.end(),
                                                    [](const Element<K> &p) { return !p.is_zero(); }))
      throw InternalError("nonzero layer residual for an element with Jacobian 1");
    w.coordinates.insert(w.coordinates.end(), ks.coordinates.begin(), ks.coordinates.end());
    r = inverse(w.layer(l)) * r;
  }
  if (!r.is_identity()) throw InternalError("Sigma' residual is not the identity");
  if (!(w.recompose() == s)) throw InternalError("Sigma' coordinates do not recompose");
  return w;
}

// ---------------------------------------------------------------------------
// sigma = phi'_{a(2)} phi'_{a(4)} ... gamma with gamma in Sigma

// x_i -> x_i (1 + a_i) for the parts a_i of the layer split of a.
template <Coefficient K>
Endomorphism<K> phi_prime_layer(const Element<K> &a, int s) {
  int n = a.n();
  auto ls = layer_split(a, s);
  auto im = Endomorphism<K>::identity(n).images();
  for (int i = std::max(1, n - 2 * s); i <= n; ++i) im[i - 1] += im[i - 1] * ls.part(i);
  return Endomorphism<K>::trusted(std::move(im));
}

template <Coefficient K>
struct LayerWord {
  std::vector<Element<K>> a;  // a[s-1] = a(2s)
  Endomorphism<K> gamma;

  Endomorphism<K> factor(int s) const { return phi_prime_layer(a.at(s - 1), s); }
  Endomorphism<K> recompose() const {
    Endomorphism<K> r = Endomorphism<K>::identity(gamma.n());
    for (std::size_t s = 1; s <= a.size(); ++s) r = r * factor(static_cast<int>(s));
    return r * gamma;
  }
};

template <Coefficient K>
LayerWord<K> decompose_layers(const Endomorphism<K> &s) {
  int n = s.n();
  if (!member(s, GroupId::gamma())) throw NotInGroupError("not in Gamma");
  LayerWord<K> w;
  Endomorphism<K> r = s;
  for (int l = 1; l <= max_layer(n); ++l) {
    Element<K> j = jacobian(r).det - Element<K>::one(n);
    if (!j.in_power_of_m(2 * l)) throw InternalError("layer residual has a low-degree Jacobian term");
    Element<K> a = j.degree_part(2 * l);
    w.a.push_back(a);
    r = inverse(phi_prime_layer(a, l)) * r;
  }
  if (!member(r, GroupId::sigma())) throw InternalError("layer residual is not in Sigma");
  w.gamma = r;
  if (!(w.recompose() == s)) throw InternalError("layer factors do not recompose");
  return w;
}

// ---------------------------------------------------------------------------
// Preimages of the Jacobian map

template <Coefficient K>
struct Preimage {
  Endomorphism<K> sigma;
  Element<K> jacobian;  // J(sigma)
  K top;                // coefficient of x_1...x_n in J(sigma)
  bool exact = false;   // J(sigma) equals the target
};

// Peels the lowest layer of u with phi'_{a(2s)} and continues with
// phi'^{-1}(J(phi')^{-1} u). For even n the top coefficient is forced;
// with require_exact a mismatch there is reported as no preimage.
template <Coefficient K>
Preimage<K> jacobian_preimage(const Element<K> &u, bool require_exact = false) {
  int n = u.n();
  if (!(u.constant_term() == K(1)) || !u.is_even())
    throw DomainError("target must be even with constant term 1");
  Endomorphism<K> sigma = Endomorphism<K>::identity(n);
  Element<K> cur = u;
  for (int l = 1; l <= max_layer(n); ++l) {
    Element<K> rest = cur - Element<K>::one(n);
    if (!rest.in_power_of_m(2 * l)) throw InternalError("preimage residual has a low-degree term");
    Element<K> a = rest.degree_part(2 * l);
    if (a.is_zero()) continue;
    Endomorphism<K> f = phi_prime_layer(a, l);
    sigma = sigma * f;
    cur = inverse(f).apply(invert_unit(jacobian(f).det) * cur);
  }
  Preimage<K> p{sigma, jacobian(sigma).det, K(0), false};
  p.top = p.jacobian.coeff(full_mask(n));
  p.exact = p.jacobian == u;
  Element<K> off = p.jacobian - u;
  if (!off.filter([n](Mask m) { return degree(m) < n; }).is_zero())
    throw InternalError("preimage misses the target below the top degree");
  if (!p.exact && n % 2 == 1) throw InternalError("odd n preimage is not exact");
  if (require_exact && !p.exact)
    throw NoPreimageError("the coefficient of x1...x" + std::to_string(n) + " in J is forced to " + p.top.to_string() +
                          ", target has " + u.coeff(full_mask(n)).to_string());
  return p;
}

}  // namespace grassmann
