#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grassmann/grassmann.hpp"

namespace grassmann::cli {

using json = nlohmann::json;

inline constexpr int kJsonVersion = 1;

struct CliConfig {
  int n = 0;
  std::string field = "rational";
  long p = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
};

// "@path" reads the text from a file.
inline std::string load(const std::string &arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <Coefficient K>
json to_json(const Element<K> &e) {
  json terms = json::array();
  for (auto &[m, c] : e.terms()) terms.push_back({{"mask", m}, {"coefficient", c.to_string()}});
  return {{"n", e.n()}, {"terms", terms}, {"text", to_string(e)}};
}

template <Coefficient K>
json to_json(const Endomorphism<K> &s) {
  json im = json::array();
  for (auto &e : s.images()) im.push_back(to_json(e));
  return {{"n", s.n()}, {"images", im}, {"text", to_string(s)}};
}

template <Coefficient K>
json to_json(const Matrix<K> &a) {
  json rows = json::array();
  for (int i = 0; i < a.n(); ++i) {
    json r = json::array();
    for (int j = 0; j < a.n(); ++j) r.push_back(a(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

inline std::string indent(const std::string &s, const std::string &pad = "  ") {
  std::string r = pad;
  for (char c : s) {
    r += c;
    if (c == '\n') r += pad;
  }
  return r;
}

struct Request {
  std::string command;
  std::vector<std::string> elements;
  std::string endo;
  std::string mode;
  std::string group;
  std::string strategy = "iteration";
  std::string suite = "all";
  std::string identity = "all";
  int samples = 20;
  bool exact = false;
  bool matrix = false;
};

// Each command fills `result` for JSON and writes its text form to `text`.
template <Coefficient K>
int execute(const CliConfig &cfg, const Request &rq, json &result, std::ostream &text) {
  int n = cfg.n;
  auto need_n = [&] {
    if (n < 1 || n > kMaxN) throw DimensionError("--n must be in 1.." + std::to_string(kMaxN));
  };
  auto endo = [&] {
    need_n();
    if (rq.endo.empty()) throw ParseError("--endo is required");
    return parse_endomorphism<K>(n, load(rq.endo));
  };
  auto element = [&](std::size_t k) {
    need_n();
    if (rq.elements.size() <= k) throw ParseError("missing element argument");
    return parse_element<K>(n, load(rq.elements[k]));
  };
  const std::string &c = rq.command;

  if (c == "mul") {
    need_n();
    Element<K> r = element(0);
    for (std::size_t k = 1; k < rq.elements.size(); ++k) r = r * element(k);
    result = to_json(r);
    text << to_string(r) << "\n";
    return 0;
  }
  if (c == "apply") {
    auto s = endo();
    auto r = s.apply(element(0));
    result = to_json(r);
    text << to_string(r) << "\n";
    return 0;
  }
  if (c == "jacobian") {
    auto s = endo();
    auto jd = jacobian(s);
    result = {{"det", to_json(jd.det)}, {"valuation", jd.valuation}};
    if (rq.matrix) {
      json m = json::array();
      for (auto &row : jd.matrix) {
        json r = json::array();
        for (auto &e : row) r.push_back(to_json(e));
        m.push_back(r);
      }
      result["matrix"] = m;
      for (std::size_t i = 0; i < jd.matrix.size(); ++i)
        for (std::size_t j = 0; j < jd.matrix.size(); ++j)
          text << "d" << j + 1 << " sigma(x" << i + 1 << ") = " << to_string(jd.matrix[i][j]) << "\n";
    }
    text << to_string(jd.det) << "\n";
    return 0;
  }
  if (c == "invert") {
    auto s = endo();
    Endomorphism<K> r;
    if (rq.strategy == "formula")
      r = inverse_by_formula(s);
    else if (rq.strategy == "iteration")
      r = inverse_by_iteration(s);
    else if (rq.strategy == "both") {
      r = inverse_by_iteration(s);
      if (!(inverse_by_formula(s) == r)) throw InternalError("inversion strategies disagree");
    } else
      throw ParseError("unknown strategy '" + rq.strategy + "'");
    result = to_json(r);
    text << to_string(r) << "\n";
    return 0;
  }
  if (c == "decompose") {
    auto s = endo();
    result = {{"mode", rq.mode}};
    if (rq.mode == "oga") {
      auto f = decompose_omega_gamma_linear(s);
      json b = json::array();
      for (auto &e : f.b) b.push_back(to_json(e));
      result["a"] = to_json(f.a);
      result["b"] = b;
      result["A"] = to_json(f.A);
      text << "a = " << to_string(f.a) << "\n";
      for (int i = 0; i < n; ++i) text << "b" << i + 1 << " = " << to_string(f.b[i]) << "\n";
      text << "A = " << f.A.to_string() << "\n";
    } else if (rq.mode == "unipotent") {
      auto w = decompose_unipotent(s);
      json fs = json::array();
      for (auto &f : w.factors) {
        if (f.kind == UFactor<K>::Inner) {
          fs.push_back({{"kind", "inner"}, {"degree", f.degree}, {"a", to_json(f.a)}});
          text << "inner  degree " << f.degree << ": a = " << to_string(f.a) << "\n";
        } else {
          json b = json::array();
          for (auto &e : f.b) b.push_back(to_json(e));
          fs.push_back({{"kind", "shift"}, {"degree", f.degree}, {"b", b}});
          text << "shift  degree " << f.degree << ":";
          for (int i = 0; i < n; ++i) text << (i ? "; " : " ") << "b" << i + 1 << " = " << to_string(f.b[i]);
          text << "\n";
        }
      }
      result["factors"] = fs;
    } else if (rq.mode == "gamma") {
      auto w = decompose_gamma(s);
      result["phi"] = to_json(w.phi);
      json xs = json::array();
      text << "phi:\n" << indent(to_string(w.phi)) << "\n";
      for (auto &x : w.xis) {
        json b = json::array();
        for (auto &e : x.b) b.push_back(to_json(e));
        xs.push_back({{"degree", x.degree}, {"b", b}});
        text << "xi" << x.degree << ":";
        for (int i = 0; i < n; ++i) text << (i ? "; " : " ") << "b" << i + 1 << " = " << to_string(x.b[i]);
        text << "\n";
      }
      result["xi"] = xs;
    } else if (rq.mode == "sigma-prime") {
      auto w = decompose_sigma_prime(s);
      json cs = json::array();
      for (auto &k : w.coordinates) {
        cs.push_back({{"s", k.s}, {"i", k.i}, {"j", k.j}, {"alpha", k.alpha}, {"lambda", k.lambda.to_string()}});
        if (!k.lambda.is_zero())
          text << "s=" << k.s << " i=" << k.i << " j=" << k.j << " alpha=" << monomial_string(k.alpha)
               << " lambda=" << k.lambda.to_string() << "\n";
      }
      result["coordinates"] = cs;
    } else if (rq.mode == "layers") {
      auto w = decompose_layers(s);
      json as = json::array();
      for (std::size_t l = 0; l < w.a.size(); ++l) {
        as.push_back(to_json(w.a[l]));
        text << "a(" << 2 * (l + 1) << ") = " << to_string(w.a[l]) << "\n";
      }
      result["a"] = as;
      result["gamma"] = to_json(w.gamma);
      text << "gamma:\n" << indent(to_string(w.gamma)) << "\n";
    } else {
      throw ParseError("unknown mode '" + rq.mode + "'");
    }
    result["verified"] = true;
    return 0;
  }
  if (c == "member") {
    auto s = endo();
    auto g = parse_group(rq.group);
    auto r = member_with_witness(s, g);
    result = {{"group", to_string(g)}, {"member", r.member}};
    text << (r.member ? "true" : "false") << "\n";
    if (r.witness) {
      result["witness"] = to_json(*r.witness);
      text << "a = " << to_string(*r.witness) << "\n";
    }
    return 0;
  }
  if (c == "preimage") {
    auto u = element(0);
    auto p = jacobian_preimage(u, rq.exact);
    result = {{"sigma", to_json(p.sigma)}, {"jacobian", to_json(p.jacobian)}, {"top", p.top.to_string()}, {"exact", p.exact}};
    text << to_string(p.sigma) << "\n";
    text << "J = " << to_string(p.jacobian) << "\n";
    if (!p.exact) text << "top coefficient forced to " << p.top.to_string() << "\n";
    return 0;
  }
  if (c == "dims") {
    need_n();
    auto t = parse_dim_tag(rq.group);
    auto f = dim_formula(t, n), k = dim_by_coordinates(t, n);
    result = {{"group", to_string(t)}, {"formula", f}, {"coordinates", k}};
    text << "formula=" << f << " coordinates=" << k << "\n";
    return f == k ? 0 : 1;
  }
  if (c == "generators") {
    need_n();
    auto g = parse_group(rq.group);
    auto gens = enumerate_generators(g, n);
    json gs = json::array();
    for (auto &d : gens) {
      static const char *kinds[] = {"sigma", "rho", "xi", "omega"};
      gs.push_back({{"kind", kinds[d.kind]}, {"i", d.i}, {"j", d.j}, {"alpha", d.alpha}, {"text", to_string(d, n)}});
      text << to_string(d, n) << "\n";
    }
    result = {{"group", to_string(g)}, {"count", gens.size()}, {"generators", gs}};
    text << gens.size() << " generators\n";
    return 0;
  }
  if (c == "identity") {
    std::vector<IdentityTag> tags;
    if (rq.identity == "all")
      for (auto &e : kIdentityNames) tags.push_back(e.tag);
    else
      tags.push_back(parse_identity(rq.identity));
    json rs = json::array();
    bool all = true;
    for (auto t : tags) {
      bool ok = check_identity<K>(t, default_params(t));
      all = all && ok;
      rs.push_back({{"identity", to_string(t)}, {"holds", ok}});
      text << (ok ? "PASS " : "FAIL ") << to_string(t) << "\n";
    }
    result = {{"identities", rs}};
    return all ? 0 : 1;
  }
  if (c == "verify") {
    int vn = n ? n : 5;
    auto rs = run_suite<K>(rq.suite, vn, rq.samples, cfg.seed);
    json arr = json::array();
    bool all = true;
    for (auto &r : rs) {
      all = all && r.passed;
      arr.push_back({{"suite", r.suite}, {"property", r.name}, {"passed", r.passed}, {"samples", r.samples},
                     {"counterexample", r.counterexample}});
      text << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " (" << r.samples << ")\n";
      if (!r.passed) text << "  counterexample: " << r.counterexample << "\n";
    }
    result = {{"n", vn}, {"seed", cfg.seed}, {"checks", arr}, {"passed", all}};
    return all ? 0 : 1;
  }
  throw ParseError("unknown command '" + c + "'");
}

// Entry point; returns the process exit status. 0 success, 1 failed check, 2 error.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Computations in the Grassmann algebra and its automorphism group"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  CliConfig cfg;
  Request rq;
  auto common = [&](CLI::App *s, bool needs_n = true) {
    auto o = s->add_option("--n", cfg.n, "number of generators");
    if (needs_n) o->required();
    s->add_option("--field", cfg.field, "rational, prime or prime:<p>");
    s->add_option("--p", cfg.p, "characteristic for --field prime");
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto endo_opt = [&](CLI::App *s) { s->add_option("--endo", rq.endo, "endomorphism, e.g. \"x1 -> x1 + x1x2x3; x2 -> x2\"")->required(); };

  auto *mul = app.add_subcommand("mul", "multiply elements left to right");
  common(mul);
  mul->add_option("elements", rq.elements)->required();
  auto *apply_c = app.add_subcommand("apply", "apply an endomorphism to an element");
  common(apply_c);
  endo_opt(apply_c);
  apply_c->add_option("element", rq.elements)->required()->expected(1);
  auto *jac = app.add_subcommand("jacobian", "Jacobian determinant");
  common(jac);
  endo_opt(jac);
  jac->add_flag("--matrix", rq.matrix, "also print the Jacobian matrix");
  auto *inv = app.add_subcommand("invert", "inverse automorphism");
  common(inv);
  endo_opt(inv);
  inv->add_option("--strategy", rq.strategy, "iteration, formula or both");
  auto *dec = app.add_subcommand("decompose", "factor an automorphism");
  common(dec);
  endo_opt(dec);
  dec->add_option("--mode", rq.mode)->required()->check(CLI::IsMember({"oga", "unipotent", "gamma", "sigma-prime", "layers"}));
  auto *mem = app.add_subcommand("member", "subgroup membership");
  common(mem);
  endo_opt(mem);
  mem->add_option("--group", rq.group)->required();
  auto *pre = app.add_subcommand("preimage", "automorphism with a given Jacobian");
  common(pre);
  pre->add_option("target", rq.elements)->required()->expected(1);
  pre->add_flag("--exact", rq.exact, "fail unless the Jacobian equals the target exactly");
  auto *dims = app.add_subcommand("dims", "dimension by closed form and by coordinates");
  common(dims);
  dims->add_option("--group", rq.group)->required();
  auto *gens = app.add_subcommand("generators", "one-parameter generating subgroups");
  common(gens);
  gens->add_option("--group", rq.group)->required();
  auto *ident = app.add_subcommand("identity", "check commutator and product identities");
  common(ident, false);
  ident->add_option("--name", rq.identity, "identity name or all");
  auto *ver = app.add_subcommand("verify", "seeded property checks");
  common(ver, false);
  ver->add_option("--suite", rq.suite, "suite name or all");
  ver->add_option("--samples", rq.samples, "random cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }
  for (auto *s : app.get_subcommands()) rq.command = s->get_name();

  try {
    if (cfg.field.rfind("prime:", 0) == 0) {
      cfg.p = std::stol(cfg.field.substr(6));
      cfg.field = "prime";
    }
    json result;
    std::ostringstream text;
    int status;
    std::string field_name;
    if (cfg.field == "rational") {
      status = execute<Rational>(cfg, rq, result, text);
      field_name = Rational::field_name();
    } else if (cfg.field == "prime") {
      if (cfg.p == 0) throw ParseError("--field prime needs --p or prime:<p>");
      Fp::Modulus guard(cfg.p);
      status = execute<Fp>(cfg, rq, result, text);
      field_name = Fp::field_name();
    } else {
      throw ParseError("unknown field '" + cfg.field + "'");
    }
    if (cfg.format == "json")
      out << json{{"version", kJsonVersion}, {"command", rq.command}, {"field", field_name}, {"n", cfg.n}, {"result", result}}.dump(2)
          << "\n";
    else
      out << text.str();
    return status;
  } catch (const Error &e) {
    if (cfg.format == "json")
      out << json{{"version", kJsonVersion}, {"command", rq.command}, {"error", {{"kind", e.kind()}, {"message", e.message()}}}}.dump(2)
          << "\n";
    err << "error (" << e.kind() << "): " << e.message() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace grassmann::cli
