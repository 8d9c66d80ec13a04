// spherepoly: exact computations with polynomials on high-dimensional
// spheres.  Subcommands expose orthogonal families, pairings, harmonic
// decomposition, the spherical Laplacian, large-N convergence tables and a
// Monte Carlo verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spherepoly/spherepoly.hpp"

namespace {

using nlohmann::json;
using namespace spherepoly;

struct GlobalOptions {
  std::string format;  // "", "json" or "csv"
  std::string out_path;
  std::uint64_t seed = 42;
  std::uint64_t samples = 100000;
};

void add_global_flags(CLI::App* cmd, GlobalOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
  cmd->add_option("--seed", opts.seed, "RNG seed for randomized suites");
  cmd->add_option("--samples", opts.samples, "Monte Carlo sample count");
}

void emit(const GlobalOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
  out << payload;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_a2(const std::string& text, int n) {
  if (text == "N") return Rational(long(n));
  return Rational::from_string(text);
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("invalid N list entry: " + item);
    }
    pos = comma + 1;
  }
  return out;
}

std::string float17(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value.to_double());
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

void emit_poly(const GlobalOptions& opts, const Polynomial& p) {
  if (opts.format == "csv") throw UsageError("csv output is only available for limit-table");
  const std::string text = format_poly(p);
  if (opts.format == "json")
    emit(opts, json{{"poly", text}}.dump());
  else
    emit(opts, text);
}

void emit_value(const GlobalOptions& opts, const Rational& value) {
  if (opts.format == "csv") throw UsageError("csv output is only available for limit-table");
  if (opts.format == "json")
    emit(opts, json{{"value", value.str()}}.dump());
  else
    emit(opts, value.str());
}

const char* kind_name(LimitKind kind) {
  switch (kind) {
    case LimitKind::inner_product: return "inner_product";
    case LimitKind::projected_monomial: return "projected_monomial";
    case LimitKind::zonal_to_hermite: return "zonal_to_hermite";
    case LimitKind::slap_to_hermite: return "slap_to_hermite";
  }
  return "?";
}

void emit_table(const GlobalOptions& opts, const LimitTable& table) {
  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& [n, error] : table.rows)
      rows.push_back({{"N", n}, {"error", error.str()}, {"error_float", error.to_double()}});
    emit(opts, json{{"kind", kind_name(table.kind)}, {"target", table.target}, {"rows", rows}}
                   .dump());
    return;
  }
  std::string out = "N,error,error_float\r\n";
  for (const auto& [n, error] : table.rows) {
    out += csv_field(std::to_string(n)) + ',' + csv_field(error.str()) + ',' +
           csv_field(float17(error)) + "\r\n";
  }
  emit(opts, out);
}

int run_verify(const GlobalOptions& opts, const std::string& suite) {
  std::vector<CheckResult> results;
  if (suite == "identities") {
    results = identity_suite(opts.seed);
  } else if (suite == "mc") {
    results = mc_suite(opts.seed, opts.samples);
  } else if (suite == "all") {
    results = identity_suite(opts.seed);
    auto mc = mc_suite(opts.seed, opts.samples);
    results.insert(results.end(), mc.begin(), mc.end());
  } else {
    throw UsageError("unknown suite: " + suite);
  }
  int failed = 0;
  json rows = json::array();
  for (const CheckResult& r : results) {
    if (!r.pass) ++failed;
    json row{{"property", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  // The MC suite is statistical: one 5-sigma miss out of twenty is tolerated.
  const int allowed = suite == "identities" ? 0 : 1;
  json report{{"suite", suite},
              {"results", rows},
              {"passed", static_cast<int>(results.size()) - failed},
              {"failed", failed}};
  emit(opts, report.dump(2));
  return failed > allowed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial algebra on high-dimensional spheres"};
  app.require_subcommand(1);
  GlobalOptions opts;

  int order = 0, dim = 0;
  std::string poly_text, q_text, a2_text = "N", b_text, kind_text, n_list_text, suite = "identities";
  bool gaussian_flag = false;

  auto* hermite = app.add_subcommand("hermite", "Monic probabilists' Hermite polynomial H_m");
  hermite->add_option("-m,--order", order, "Order m")->required()->check(CLI::NonNegativeNumber);
  add_global_flags(hermite, opts);

  auto* gegenbauer =
      app.add_subcommand("gegenbauer", "Monic Gegenbauer polynomial of parameter b");
  gegenbauer->add_option("-b,--parameter", b_text, "Parameter b (rational, e.g. 3/2)")->required();
  gegenbauer->add_option("-m,--order", order, "Order m")->required()->check(CLI::NonNegativeNumber);
  add_global_flags(gegenbauer, opts);

  auto* zonal = app.add_subcommand("zonal", "Monic zonal polynomial q_m on S^{N-1}(a)");
  zonal->add_option("-m,--order", order, "Order m")->required()->check(CLI::NonNegativeNumber);
  zonal->add_option("-N,--dimension", dim, "Ambient dimension N")->required();
  zonal->add_option("--a2", a2_text, "Squared radius (rational, or N for a^2 = N)");
  zonal->add_flag("--harmonic", gaussian_flag, "Emit the zonal harmonic L_a q_m instead");
  add_global_flags(zonal, opts);

  auto* inner = app.add_subcommand("inner", "Exact inner product of two polynomials");
  inner->add_option("-p,--left", poly_text, "Left polynomial")->required();
  inner->add_option("-q,--right", q_text, "Right polynomial")->required();
  inner->add_flag("--gaussian", gaussian_flag, "Use the Gaussian pairing");
  inner->add_option("-N,--dimension", dim, "Sphere dimension N");
  inner->add_option("--a2", a2_text, "Squared radius (rational, or N for a^2 = N)");
  add_global_flags(inner, opts);

  auto* slap = app.add_subcommand("slap", "Spherical Laplacian of a polynomial");
  slap->add_option("-p,--poly", poly_text, "Polynomial")->required();
  slap->add_option("-N,--dimension", dim, "Sphere dimension N")->required();
  slap->add_option("--a2", a2_text, "Squared radius (rational, or N for a^2 = N)");
  add_global_flags(slap, opts);

  auto* decompose = app.add_subcommand("decompose", "Base-||X||^2 harmonic expansion");
  decompose->add_option("-p,--poly", poly_text, "Polynomial")->required();
  decompose->add_option("-N,--dimension", dim, "Ambient dimension N")->required();
  add_global_flags(decompose, opts);

  auto* la = app.add_subcommand("la", "Harmonic restriction projection L_a");
  la->add_option("-p,--poly", poly_text, "Polynomial")->required();
  la->add_option("-N,--dimension", dim, "Sphere dimension N")->required();
  la->add_option("--a2", a2_text, "Squared radius (rational, or N for a^2 = N)");
  add_global_flags(la, opts);

  auto* casimir_cmd = app.add_subcommand("casimir", "Quadratic Casimir ||M||^2 applied to p");
  casimir_cmd->add_option("-p,--poly", poly_text, "Polynomial")->required();
  casimir_cmd->add_option("-N,--dimension", dim, "Ambient dimension N")->required();
  add_global_flags(casimir_cmd, opts);

  auto* reduce = app.add_subcommand("reduce", "Canonical reduction mod the sphere ideal");
  reduce->add_option("-p,--poly", poly_text, "Polynomial")->required();
  reduce->add_option("-N,--dimension", dim, "Sphere dimension N")->required();
  reduce->add_option("--a2", a2_text, "Squared radius (rational, or N for a^2 = N)");
  add_global_flags(reduce, opts);

  auto* table = app.add_subcommand("limit-table", "Large-N convergence table");
  table->add_option("--kind", kind_text, "inner_product|projected_monomial|zonal_to_hermite|slap_to_hermite")
      ->required();
  table->add_option("-p,--poly", poly_text, "Payload polynomial");
  table->add_option("-q,--right", q_text, "Right polynomial (inner_product)");
  table->add_option("-m,--order", order, "Order m (zonal_to_hermite)");
  table->add_option("--N-list", n_list_text, "Comma-separated increasing dimensions")->required();
  add_global_flags(table, opts);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "identities|mc|all");
  add_global_flags(verify, opts);

  try {
    app.parse(argc, argv);

    if (hermite->parsed()) {
      emit_poly(opts, hermite_poly(order));
    } else if (gegenbauer->parsed()) {
      emit_poly(opts, gegenbauer_monic(Rational::from_string(b_text), order));
    } else if (zonal->parsed()) {
      const SphereSpec s(dim, parse_a2(a2_text, dim));
      emit_poly(opts, gaussian_flag ? zonal_harmonic(order, s) : zonal_poly(order, s));
    } else if (inner->parsed()) {
      const Polynomial p = parse_poly(poly_text), q = parse_poly(q_text);
      if (gaussian_flag == (dim != 0))
        throw UsageError("choose exactly one of --gaussian or -N/--a2");
      if (gaussian_flag)
        emit_value(opts, gaussian_inner(p, q));
      else
        emit_value(opts, sphere_inner(p, q, SphereSpec(dim, parse_a2(a2_text, dim))));
    } else if (slap->parsed()) {
      const SphereSpec s(dim, parse_a2(a2_text, dim));
      emit_poly(opts, sphere_laplacian(parse_poly(poly_text), s).value);
    } else if (decompose->parsed()) {
      if (opts.format == "csv") throw UsageError("csv output is only available for limit-table");
      const Polynomial p = parse_poly(poly_text);
      const AmbientDim ambient(dim);
      const auto expansion = base_r2_expansion(p, ambient);
      json components = json::array();
      Polynomial sum;
      bool check = true;
      for (std::size_t i = 0; i < expansion.components.size(); ++i) {
        const Polynomial& c = expansion.components[i];
        check = check && laplacian(c, ambient).is_zero();
        sum += pow(norm_sq_poly(dim), static_cast<unsigned long>(i)) * c;
        components.push_back(format_poly(c));
      }
      check = check && sum == p;
      emit(opts, json{{"harmonic_components", components}, {"check", check}}.dump());
    } else if (la->parsed()) {
      const SphereSpec s(dim, parse_a2(a2_text, dim));
      emit_poly(opts, la_project(parse_poly(poly_text), s));
    } else if (casimir_cmd->parsed()) {
      emit_poly(opts, casimir(parse_poly(poly_text), AmbientDim(dim)));
    } else if (reduce->parsed()) {
      if (opts.format == "csv") throw UsageError("csv output is only available for limit-table");
      const SphereSpec s(dim, parse_a2(a2_text, dim));
      const SphereRemainder r = reduce_mod_sphere(parse_poly(poly_text), s);
      if (opts.format == "json")
        emit(opts, json{{"remainder", format_poly(r.remainder)},
                        {"quotient", format_poly(r.quotient)}}
                       .dump());
      else
        emit(opts, "remainder: " + format_poly(r.remainder) +
                       "\nquotient: " + format_poly(r.quotient));
    } else if (table->parsed()) {
      const std::vector<int> n_list = parse_n_list(n_list_text);
      LimitTable t{LimitKind::inner_product, "", {}};
      if (kind_text == "inner_product") {
        if (poly_text.empty() || q_text.empty())
          throw UsageError("inner_product needs -p and -q");
        t = limit_table_inner(parse_poly(poly_text), parse_poly(q_text), n_list);
      } else if (kind_text == "projected_monomial") {
        if (poly_text.empty()) throw UsageError("projected_monomial needs -p");
        t = limit_table_projected(parse_poly(poly_text), n_list);
      } else if (kind_text == "zonal_to_hermite") {
        t = limit_table_zonal(order, n_list);
      } else if (kind_text == "slap_to_hermite") {
        if (poly_text.empty()) throw UsageError("slap_to_hermite needs -p");
        t = limit_table_slap(parse_poly(poly_text), n_list);
      } else {
        throw UsageError("unknown table kind: " + kind_text);
      }
      emit_table(opts, t);
    } else if (verify->parsed()) {
      if (opts.format == "csv") throw UsageError("csv output is only available for limit-table");
      return run_verify(opts, suite);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
