#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/dimensions.hpp"
#include "grassmann/generators.hpp"
#include "grassmann/groups.hpp"
#include "grassmann/identities.hpp"
#include "grassmann/random.hpp"

namespace grassmann {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  int samples = 0;
  std::string counterexample{};
  double seconds = 0;
};

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> s{"calculus", "solvers",    "inverse",    "chain",     "factorizations",
                                          "groups",   "identities", "dimensions", "generators"};
  return s;
}

// Whether x_i a = u_i (or d_i a = u_i) has a solution, by Gaussian elimination on
// the 2^n coefficients of a. Independent of the closed-form solvers.
template <Coefficient K>
bool linear_system_solvable(const std::vector<Element<K>> &u, bool partial) {
  int n = static_cast<int>(u.size());
  std::size_t cols = std::size_t(1) << n;
  std::vector<std::vector<K>> rows;
  for (int i = 1; i <= n; ++i)
    for (Mask m = 0; m < cols; ++m) {
      std::vector<K> r(cols + 1, K(0));
      for (Mask a = 0; a < cols; ++a) {
        Element<K> img = partial ? skew_partial(i, Element<K>::monomial(n, a)) : left_mul(i, Element<K>::monomial(n, a));
        r[a] = img.coeff(m);
      }
      r[cols] = u[i - 1].coeff(m);
      rows.push_back(std::move(r));
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c <= cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    if (c == cols) return false;
    std::swap(rows[p], rows[rank]);
    K inv = rows[rank][c].inv();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      K f = rows[r][c] * inv;
      for (std::size_t k = c; k <= cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return true;
}

namespace detail {

template <Coefficient K>
struct SuiteContext {
  int n;
  int samples;
  std::uint64_t seed;
  std::string suite;
  std::vector<CheckResult> *out;

  Rng rng_for(const std::string &name, int k) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(std::hash<std::string>{}(name)), static_cast<std::uint32_t>(k)};
    return Rng(seq);
  }

  // check returns a counterexample description on failure.
  void property(const std::string &name, int count, const std::function<std::optional<std::string>(Rng &)> &check) const {
    CheckResult r{.suite = suite, .name = name};
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < count; ++k) {
      Rng rng = rng_for(name, k);
      std::optional<std::string> bad;
      try {
        bad = check(rng);
      } catch (const std::exception &e) {
        bad = std::string("exception: ") + e.what();
      }
      ++r.samples;
      if (bad) {
        r.passed = false;
        r.counterexample = "sample " + std::to_string(k) + ": " + *bad;
        break;
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out->push_back(std::move(r));
  }

  void property(const std::string &name, const std::function<std::optional<std::string>(Rng &)> &check) const {
    property(name, samples, check);
  }
};

template <Coefficient K>
Element<K> any_element(int n, Rng &rng) {
  return random_element<K>(n, rng, [](Mask) { return true; }, 0.4);
}

template <Coefficient K>
Endomorphism<K> random_gamma_gl(int n, Rng &rng) {
  return random_gamma<K>(n, rng, 0.4) * linear(random_invertible_matrix<K>(n, rng));
}

inline std::optional<std::string> fail_if(bool bad, const std::string &what) {
  if (bad) return what;
  return std::nullopt;
}

template <Coefficient K>
std::string show(const Endomorphism<K> &s) {
  std::string r = to_string(s);
  for (auto &c : r)
    if (c == '\n') c = ';';
  return r;
}

template <Coefficient K>
void suite_calculus(const SuiteContext<K> &c) {
  int n = c.n;
  c.property("skew_leibniz", [&](Rng &rng) -> std::optional<std::string> {
    auto a = any_element<K>(n, rng), b = any_element<K>(n, rng);
    for (int i = 1; i <= n; ++i)
      if (!(skew_partial(i, a * b) == skew_partial(i, a) * b + involution(a) * skew_partial(i, b)))
        return "a=" + to_string(a) + " b=" + to_string(b) + " i=" + std::to_string(i);
    return std::nullopt;
  });
  c.property("partial_relations", [&](Rng &rng) -> std::optional<std::string> {
    auto e = any_element<K>(n, rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!(skew_partial(i, skew_partial(j, e)) + skew_partial(j, skew_partial(i, e))).is_zero())
          return "d_i d_j + d_j d_i != 0 on " + to_string(e);
        Element<K> xj = Element<K>::generator(n, j);
        Element<K> lhs = skew_partial(i, xj * e) + xj * skew_partial(i, e);
        if (!(lhs == (i == j ? e : Element<K>(n)))) return "d_i x_j + x_j d_i != delta_ij on " + to_string(e);
      }
    return std::nullopt;
  });
  c.property("taylor_reconstruction", [&](Rng &rng) {
    auto e = any_element<K>(n, rng);
    return fail_if(!(taylor_reconstruct(e, TaylorMode::AtZero) == e && taylor_reconstruct(e, TaylorMode::Projected) == e),
                   to_string(e));
  });
  c.property("identity_operator", [&](Rng &rng) {
    auto e = any_element<K>(n, rng);
    return fail_if(!(identity_decomposition(e) == e), to_string(e));
  });
  c.property("projection_expansion", [&](Rng &rng) {
    auto e = any_element<K>(n, rng);
    return fail_if(!(phi_expansion(e) == Element<K>::constant(n, phi_projection(e))), to_string(e));
  });
  c.property("print_parse_roundtrip", [&](Rng &rng) {
    auto e = any_element<K>(n, rng);
    auto s = random_automorphism<K>(n, rng, 0.3);
    return fail_if(!(parse_element<K>(n, to_string(e)) == e && parse_endomorphism<K>(n, to_string(s)) == s), to_string(e));
  });
}

template <Coefficient K>
void suite_solvers(const SuiteContext<K> &c) {
  int n = c.n;
  Element<K> theta = Element<K>::monomial(n, full_mask(n));
  c.property("xi_system_roundtrip", [&](Rng &rng) -> std::optional<std::string> {
    auto a = any_element<K>(n, rng);
    std::vector<Element<K>> u;
    for (int i = 1; i <= n; ++i) u.push_back(left_mul(i, a));
    auto f = solve_xi_system(u);
    Element<K> d = f.particular - a;
    if (!(d.filter([n](Mask m) { return degree(m) < n; }).is_zero())) return "family misses a=" + to_string(a);
    return fail_if(!(f.direction == theta), "wrong free direction");
  });
  c.property("partial_system_roundtrip", [&](Rng &rng) -> std::optional<std::string> {
    auto a = any_element<K>(n, rng);
    std::vector<Element<K>> u;
    for (int i = 1; i <= n; ++i) u.push_back(skew_partial(i, a));
    auto f = solve_partial_system(u);
    return fail_if(!(f.particular - a).is_constant() || !(f.direction == Element<K>::one(n)), "family misses a=" + to_string(a));
  });
  auto detection = [&](bool partial) {
    return [&, partial](Rng &rng) -> std::optional<std::string> {
      auto a = any_element<K>(n, rng);
      std::vector<Element<K>> u;
      for (int i = 1; i <= n; ++i) u.push_back(partial ? skew_partial(i, a) : left_mul(i, a));
      std::uniform_int_distribution<int> pick(0, n - 1);
      std::uniform_int_distribution<Mask> mono(0, full_mask(n));
      u[pick(rng)] += Element<K>::monomial(n, mono(rng), random_scalar<K>(rng));
      bool solvable = linear_system_solvable(u, partial);
      bool solved = true;
      try {
        if (partial)
          solve_partial_system(u);
        else
          solve_xi_system(u);
      } catch (const UnsolvableError &) {
        solved = false;
      }
      return fail_if(solved != solvable, std::string("solver says ") + (solved ? "solvable" : "unsolvable") +
                                             ", elimination says " + (solvable ? "solvable" : "unsolvable"));
    };
  };
  c.property("xi_system_detection", detection(false));
  c.property("partial_system_detection", detection(true));
}

template <Coefficient K>
void suite_inverse(const SuiteContext<K> &c) {
  int n = c.n;
  c.property("formula_matches_iteration", [&](Rng &rng) {
    auto s = random_gamma_gl<K>(n, rng);
    auto f = inverse_by_formula(s), it = inverse_by_iteration(s);
    return fail_if(!(f == it && (s * f).is_identity() && (f * s).is_identity()), show(s));
  });
  c.property("inverse_full_group", [&](Rng &rng) {
    auto s = random_automorphism<K>(n, rng, 0.4);
    auto t = inverse(s);
    return fail_if(!((s * t).is_identity() && (t * s).is_identity()), show(s));
  });
}

template <Coefficient K>
void suite_chain(const SuiteContext<K> &c) {
  int n = c.n;
  c.property("chain_rule", [&](Rng &rng) {
    auto s = random_gamma_gl<K>(n, rng), t = random_gamma_gl<K>(n, rng);
    return fail_if(!(jacobian(s * t).det == s.apply(jacobian(t).det) * jacobian(s).det), show(s) + " | " + show(t));
  });
  c.property("inverse_rule", [&](Rng &rng) {
    auto s = random_gamma_gl<K>(n, rng);
    auto si = inverse(s);
    return fail_if(!(jacobian(si).det == si.apply(invert_unit(jacobian(s).det))), show(s));
  });
}

template <Coefficient K>
void suite_factorizations(const SuiteContext<K> &c) {
  int n = c.n;
  c.property("omega_gamma_linear", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_automorphism<K>(n, rng, 0.4);
    auto f = decompose_omega_gamma_linear(s);
    if (!(f.recompose() == s)) return show(s);
    return fail_if(!member(f.omega(), GroupId::omega()) || !member(f.gamma(), GroupId::gamma()) ||
                       !f.a.is_odd() || f.a.max_degree() >= n,
                   "factor outside its group for " + show(s));
  });
  c.property("unipotent", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_unipotent<K>(n, rng, 0.4);
    auto w = decompose_unipotent(s);
    if (!(w.recompose() == s)) return show(s);
    for (auto &f : w.factors)
      if (!member(f.map(), f.kind == UFactor<K>::Inner ? GroupId::omega() : GroupId::gamma()))
        return "factor outside its group for " + show(s);
    return std::nullopt;
  });
  c.property("gamma_word", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_gamma<K>(n, rng, 0.4);
    auto w = decompose_gamma(s);
    if (!(w.recompose() == s) || !member(w.phi, GroupId::phi())) return show(s);
    for (auto &x : w.xis)
      if (!member(x.map(), GroupId::sigma())) return "xi factor outside Sigma for " + show(s);
    return std::nullopt;
  });
  c.property("sigma_prime_word", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_sigma_prime<K>(n, rng, 6);
    auto w = decompose_sigma_prime(s);
    if (!(w.recompose() == s)) return show(s);
    for (int l = 1; l <= max_layer(n); ++l)
      if (!member(w.layer(l), GroupId::sigma_prime_pow(2 * l + 1))) return "layer outside Sigma' for " + show(s);
    return std::nullopt;
  });
  c.property("layers", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_gamma<K>(n, rng, 0.4);
    auto w = decompose_layers(s);
    if (!(w.recompose() == s) || !member(w.gamma, GroupId::sigma())) return show(s);
    for (int l = 1; l <= max_layer(n); ++l)
      if (!member(w.factor(l), GroupId::phi_prime_layer(2 * l + 1))) return "layer factor outside its group for " + show(s);
    return std::nullopt;
  });
}

template <Coefficient K>
void suite_groups(const SuiteContext<K> &c) {
  int n = c.n;
  c.property("sigma_closure", [&](Rng &rng) {
    auto s = random_sigma<K>(n, rng, 4), t = random_sigma<K>(n, rng, 4);
    return fail_if(!member(s * t, GroupId::sigma()) || !member(inverse(s), GroupId::sigma()), show(s));
  });
  c.property("coset_criterion", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_gamma<K>(n, rng, 0.4);
    auto same = s * random_sigma<K>(n, rng, 4);
    auto other = random_gamma<K>(n, rng, 0.4);
    if (!(jacobian(s).det == jacobian(same).det) || !member(inverse(s) * same, GroupId::sigma())) return show(s);
    bool eq = jacobian(s).det == jacobian(other).det;
    return fail_if(eq != member(inverse(s) * other, GroupId::sigma()), show(s) + " | " + show(other));
  });
  c.property("ascent_chain", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_gamma<K>(n, rng, 0.4);
    for (int l = 1; 2 * l <= n; ++l)
      if (member(s, GroupId::gamma_asc(2 * l + 2)) && !member(s, GroupId::gamma_asc(2 * l))) return show(s);
    // strip layers below 2l to land in Gamma_{2l}
    auto w = decompose_layers(s);
    Endomorphism<K> r = w.gamma;
    for (int l = max_layer(n); l >= 1; --l) {
      r = w.factor(l) * r;
      if (!member(r, GroupId::gamma_asc(2 * l))) return "stripped element not in Gamma_" + std::to_string(2 * l);
    }
    return std::nullopt;
  });
  c.property("power_in_ascent", [&](Rng &rng) -> std::optional<std::string> {
    auto s = random_gamma<K>(n, rng, 0.4);
    for (int l = 1; 2 * l + 1 <= n; ++l) {
      std::vector<Element<K>> b;
      for (int i = 1; i <= n; ++i) b.push_back((s.image(i) - Element<K>::generator(n, i)).degrees_at_least(2 * l + 1));
      auto t = gamma_shift(b);
      if (!member(t, GroupId::gamma_asc(2 * l))) return "Gamma^" + std::to_string(2 * l + 1) + " element outside Gamma_" + std::to_string(2 * l);
    }
    return std::nullopt;
  });
  c.property("even_collapse", [&](Rng &rng) -> std::optional<std::string> {
    if (n % 2) return std::nullopt;
    auto s = random_gamma<K>(n, rng, 0.4);
    auto w = decompose_layers(s);
    Endomorphism<K> r = w.factor(max_layer(n)) * w.gamma;  // valuation >= n - 2
    if (jacobian(w.gamma).valuation >= n && !(jacobian(w.gamma).det == Element<K>::one(n))) return show(s);
    return fail_if(jacobian(r).valuation >= n && !(jacobian(r).det == Element<K>::one(n)), show(s));
  });
}

template <Coefficient K>
void suite_identities(const SuiteContext<K> &c) {
  for (auto &e : kIdentityNames)
    c.property(e.name, 1, [&](Rng &) {
      return fail_if(!check_identity<K>(e.tag, default_params(e.tag)), "identity does not hold");
    });
}

template <Coefficient K>
void suite_dimensions(const SuiteContext<K> &c) {
  int n = c.n;
  if (n < 4) return;
  for (auto &d : kDimNames) {
    std::vector<DimTag> tags;
    if (d.takes_param)
      for (int s = 1; 2 * s <= n + 2; ++s) tags.push_back({d.kind, 2 * s});
    else
      tags.push_back({d.kind, 0});
    for (auto &t : tags)
      c.property("formula_vs_coordinates_" + to_string(t), 1, [&, t](Rng &) {
        return fail_if(dim_formula(t, n) != dim_by_coordinates(t, n),
                       std::to_string(dim_formula(t, n)) + " vs " + std::to_string(dim_by_coordinates(t, n)));
      });
  }
  c.property("sigma_splits", 1, [&](Rng &) {
    return fail_if(dim_formula({DimKind::Sigma}, n) !=
                           dim_formula({DimKind::SigmaPrime}, n) + dim_formula({DimKind::FDoublePrime}, n) ||
                       dim_formula({DimKind::Gamma}, n) !=
                           dim_formula({DimKind::Sigma}, n) + (std::int64_t(1) << (n - 1)) - parity_pi(n),
                   "dimension identities fail");
  });
}

template <Coefficient K>
void suite_generators(const SuiteContext<K> &c) {
  int n = c.n;
  std::vector<std::pair<GroupId, DimKind>> groups{{GroupId::gamma(), DimKind::Gamma}, {GroupId::phi(), DimKind::Phi}};
  if (n >= 4) groups.push_back({GroupId::sigma_double_prime(), DimKind::SigmaDoublePrime});
  if (n >= 7) groups.push_back({GroupId::sigma(), DimKind::Sigma});
  for (auto &[g, dk] : groups) {
    c.property("members_" + to_string(g), 1, [&, g](Rng &) -> std::optional<std::string> {
      for (auto &d : enumerate_generators(g, n))
        if (!member(instantiate(d, n, K(1)), g)) return to_string(d, n);
      return std::nullopt;
    });
    c.property("generates_" + to_string(g), 1, [&, g, dk](Rng &) {
      auto dim = generated_lie_dimension<K>(enumerate_generators(g, n), n);
      auto want = dim_formula({dk}, n);
      return fail_if(static_cast<std::int64_t>(dim) != want,
                     "tangent span " + std::to_string(dim) + ", group dimension " + std::to_string(want));
    });
  }
}

}  // namespace detail

// Runs the named suite ("all" for every suite) with `samples` random cases per property.
template <Coefficient K>
std::vector<CheckResult> run_suite(const std::string &suite, int n, int samples, std::uint64_t seed) {
  check_n(n);
  std::vector<CheckResult> out;
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
    names = {suite};
  else
    throw ParseError("unknown suite '" + suite + "'");
  for (auto &s : names) {
    detail::SuiteContext<K> c{n, samples, seed, s, &out};
    if (s == "calculus") detail::suite_calculus(c);
    if (s == "solvers") detail::suite_solvers(c);
    if (s == "inverse") detail::suite_inverse(c);
    if (s == "chain") detail::suite_chain(c);
    if (s == "factorizations") detail::suite_factorizations(c);
    if (s == "groups") detail::suite_groups(c);
    if (s == "identities") detail::suite_identities(c);
    if (s == "dimensions") detail::suite_dimensions(c);
    if (s == "generators") detail::suite_generators(c);
  }
  return out;
}

}  // namespace grassmann
