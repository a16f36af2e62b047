#pragma once

#include <cstdint>
#include <string>

#include "grassmann/error.hpp"
#include "grassmann/linsolve.hpp"

namespace grassmann {

enum class DimKind {
  Gamma,
  Phi,
  Sigma,
  SigmaPrime,
  SigmaDoublePrime,
  SigmaPrimeCapDoublePrime,
  FDoublePrime,
  GammaAsc,  // param 2s
  GammaModSigma,
  SigmaModDoublePrime,
};

struct DimTag {
  DimKind kind;
  int param = 0;
  friend bool operator==(const DimTag &, const DimTag &) = default;
};

struct DimName {
  DimKind kind;
  const char *name;
  bool takes_param;
};

inline constexpr DimName kDimNames[] = {
    {DimKind::Gamma, "gamma", false},
    {DimKind::Phi, "phi", false},
    {DimKind::Sigma, "sigma", false},
    {DimKind::SigmaPrime, "sigma_prime", false},
    {DimKind::SigmaDoublePrime, "sigma_double_prime", false},
    {DimKind::SigmaPrimeCapDoublePrime, "sigma_prime_cap_double_prime", false},
    {DimKind::FDoublePrime, "f_double_prime", false},
    {DimKind::GammaAsc, "gamma_asc", true},
    {DimKind::GammaModSigma, "gamma_mod_sigma", false},
    {DimKind::SigmaModDoublePrime, "sigma_mod_double_prime", false},
};

inline std::string to_string(const DimTag &t) {
  for (auto &e : kDimNames)
    if (e.kind == t.kind) return e.takes_param ? std::string(e.name) + ":" + std::to_string(t.param) : e.name;
  return "?";
}

inline DimTag parse_dim_tag(const std::string &text) {
  std::string name = text, arg;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  for (auto &e : kDimNames) {
    if (name != e.name) continue;
    if (e.takes_param != !arg.empty()) throw ParseError("bad parameter for dimension tag '" + text + "'");
    if (!e.takes_param) return {e.kind, 0};
    if (arg.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad parameter '" + arg + "'");
    return {e.kind, std::stoi(arg)};
  }
  throw UnsupportedError("no dimension for '" + text + "'");
}

inline int parity_pi(int n) { return n % 2 ? 1 : 2; }

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline void check_dim_args(const DimTag &t, int n) {
  bool sigma_family = t.kind != DimKind::Gamma && t.kind != DimKind::Phi && t.kind != DimKind::FDoublePrime;
  if (n < (sigma_family ? 4 : 2) || n > kMaxN)
    throw UnsupportedError("dimension of " + to_string(t) + " is not available for n=" + std::to_string(n));
  if (t.kind == DimKind::GammaAsc && (t.param < 2 || t.param % 2))
    throw UnsupportedError("gamma_asc needs an even parameter 2s >= 2");
}

}  // namespace detail

// Closed forms.
inline std::int64_t dim_formula(const DimTag &t, int n) {
  detail::check_dim_args(t, n);
  std::int64_t p2 = std::int64_t(1) << (n - 2), pi = parity_pi(n), nn = n;
  std::int64_t sigma = (nn - 1) * 2 * p2 - nn * nn + pi;
  std::int64_t quot = (nn - 3) * binomial(n, 2);
  switch (t.kind) {
    case DimKind::Gamma: return nn * (2 * p2 - nn);
    case DimKind::Phi: return nn * (p2 - 1);
    case DimKind::Sigma: return sigma;
    case DimKind::SigmaPrime: return (nn - 2) * p2 - nn + pi;
    case DimKind::SigmaDoublePrime: return sigma - quot;
    case DimKind::SigmaPrimeCapDoublePrime: return (nn - 2) * p2 - nn + pi - quot;
    case DimKind::FDoublePrime: return nn * (p2 - nn + 1);
    case DimKind::GammaAsc: {
      std::int64_t r = sigma;
      for (int i = t.param / 2; i <= (n - 1) / 2; ++i) r += binomial(n, 2 * i);
      return r;
    }
    case DimKind::GammaModSigma: return 2 * p2 - pi;
    case DimKind::SigmaModDoublePrime: return quot;
  }
  throw UnsupportedError("unknown dimension tag");
}

namespace detail {

// Number of monomials in `vars` variables whose degree satisfies pred.
inline std::int64_t count_monomials(int vars, auto pred) {
  std::int64_t c = 0;
  for (Mask m = 0; m < (Mask(1) << vars); ++m)
    if (pred(degree(m))) ++c;
  return c;
}

inline std::int64_t sigma_prime_coords(int n, int from_s) {
  std::int64_t c = 0;
  for (int s = from_s; s <= max_layer(n); ++s) c += kernel_rank(n, s);
  return c;
}

}  // namespace detail

// Coordinate counts: monomials of the free parameters and the avoidance domains S'_{i,s}.
inline std::int64_t dim_by_coordinates(const DimTag &t, int n) {
  using detail::count_monomials;
  detail::check_dim_args(t, n);
  auto odd3 = [](int d) { return d % 2 == 1 && d >= 3; };
  std::int64_t f2 = n * count_monomials(n - 1, odd3);
  std::int64_t sp = detail::sigma_prime_coords(n, 1);
  std::int64_t sp2 = detail::sigma_prime_coords(n, 2);
  std::int64_t quot = sp - sp2;
  auto layers_from = [&](int s) {
    return count_monomials(n, [&](int d) { return d % 2 == 0 && d >= 2 * s && d < n; });
  };
  switch (t.kind) {
    case DimKind::Gamma: return n * count_monomials(n, odd3);
    case DimKind::Phi: return n * count_monomials(n - 1, [](int d) { return d % 2 == 0 && d >= 2; });
    case DimKind::Sigma: return sp + f2;
    case DimKind::SigmaPrime: return sp;
    case DimKind::SigmaDoublePrime: return sp2 + f2;
    case DimKind::SigmaPrimeCapDoublePrime: return sp2;
    case DimKind::FDoublePrime: return f2;
    case DimKind::GammaAsc: return sp + f2 + layers_from(t.param / 2);
    case DimKind::GammaModSigma: return layers_from(1);
    case DimKind::SigmaModDoublePrime: return quot;
  }
  throw UnsupportedError("unknown dimension tag");
}

}  // namespace grassmann
