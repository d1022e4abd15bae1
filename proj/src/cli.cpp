#include "molien/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "molien/errors.hpp"
#include "molien/oracle.hpp"

namespace molien {

using nlohmann::json;

namespace {

FamilyRequest::Kind parse_family(const std::string& name) {
  using Kind = FamilyRequest::Kind;
  static const std::vector<std::pair<std::vector<std::string>, Kind>> table = {
      {{"symmetric", "a", "A"}, Kind::symmetric},
      {{"hyperoctahedral", "b", "B"}, Kind::hyperoctahedral},
      {{"demihyperoctahedral", "d", "D"}, Kind::demihyperoctahedral},
      {{"dihedral", "i", "I"}, Kind::dihedral},
      {{"g-de-e-n", "g", "G"}, Kind::g_de_e_n},
      {{"g2-example", "g2", "G2"}, Kind::g2_example},
      {{"custom"}, Kind::custom},
  };
  for (const auto& [names, kind] : table)
    if (std::find(names.begin(), names.end(), name) != names.end()) return kind;
  throw ValidationError("unknown family '" + name + "'");
}

std::vector<int> parse_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ValidationError("malformed vector '" + text + "'");
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',')
    throw ValidationError("malformed vector '" + text + "'");
  return out;
}

std::uint64_t parse_cap(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value == 0 || text.front() == '-')
    throw ValidationError(std::string(what) + " must be a positive integer");
  return value;
}

void build_app(CLI::App& app, RunConfig& config, std::string& family,
               std::vector<std::string>& gens, std::string& format,
               std::optional<std::uint64_t>& cap,
               std::optional<std::uint64_t>& oracle_cap, int& dim) {
  app.add_option("--family", family,
                 "symmetric|a, hyperoctahedral|b, demihyperoctahedral|d, "
                 "dihedral|i, g-de-e-n|g, g2-example|g2, custom");
  app.add_option("--n", config.family.n, "rank n (coordinates of V)");
  app.add_option("--N,--modulus", config.family.modulus,
                 "modulus N (dihedral, custom)");
  app.add_option("--dim", dim, "ambient dimension n for custom H");
  app.add_option("--d", config.family.d, "d of G(de,e,n)");
  app.add_option("--e", config.family.e, "e of G(de,e,n)");
  app.add_option("--gen", gens, "generator of H, e.g. 1,1,1 (repeatable)");
  app.add_option("--k", config.k, "number of copies of V");
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check-oracle", config.check_oracle,
               "compare against brute-force dimension counts");
  app.add_option("--depth", config.depth, "oracle truncation depth");
  app.add_option("--cap", cap, "subgroup / polynomial enumeration cap");
  app.add_option("--oracle-cap", oracle_cap,
                 "exponent matrices per multidegree in the oracle");
  app.add_option("-o,--output", config.output_path, "write report here");
  app.add_option("--batch", config.batch_path,
                 "file with one spec per line; emits a JSON array");
}

json integer_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

json exact(const Rational& q) {
  if (q.get_den() == 1) return integer_or_string(q.get_num());
  return to_fraction_string(q);
}

json terms_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms())
    terms.push_back({{"exponents", t.exponents},
                     {"coeff", to_fraction_string(t.coeff)}});
  return terms;
}

json factors_json(const std::vector<BinomialFactor>& den) {
  json out = json::array();
  for (const auto& f : den) out.push_back({{"var", f.var + 1}, {"m", f.m}});
  return out;
}

json univariate_json(const std::vector<dense::Poly>& polys) {
  json out = json::array();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    json coeffs = json::array();
    for (const auto& c : polys[i]) coeffs.push_back(to_fraction_string(c));
    out.push_back({{"var", i + 1}, {"coeffs", coeffs}});
  }
  return out;
}

bool has_residual(const QResult& r) {
  return std::any_of(r.residual_denominators.begin(),
                     r.residual_denominators.end(),
                     [](const dense::Poly& p) { return p.size() > 1; });
}

json report_object(const RunReport& report) {
  const QResult& r = report.result;
  const GroupSpec& g = r.group;
  json q = {
      {"polynomial", r.is_polynomial},
      {"terms", terms_json(r.q.numerator)},
      {"denominator", factors_json(r.q.denominator)},
  };
  if (!r.is_polynomial)
    q["reduced_denominator"] = univariate_json(r.reduced_denominators);
  if (has_residual(r))
    q["residual_denominator"] = univariate_json(r.residual_denominators);

  json oracle = {{"checked", report.oracle.has_value()},
                 {"depth", nullptr},
                 {"agrees", nullptr}};
  if (report.oracle) {
    oracle["depth"] = report.oracle->depth;
    oracle["agrees"] = report.oracle->agrees;
  }
  return {
      {"group",
       {{"family", family_name(g.family)},
        {"label", g.label},
        {"N", g.modulus},
        {"n", g.n},
        {"orderH", integer_or_string(g.order_h)},
        {"orderG", integer_or_string(g.order_g)}}},
      {"k", r.k},
      {"R1",
       {{"terms", terms_json(r.r_1.numerator)},
        {"denominator", factors_json(r.r_1.denominator)}}},
      {"Q", q},
      {"rank", r.rank ? exact(*r.rank) : json(nullptr)},
      {"expected_rank", integer_or_string(r.expected_rank)},
      {"separable", r.is_separable ? json(*r.is_separable) : json(nullptr)},
      {"scaled_limit", to_fraction_string(report.scaled_limit)},
      {"oracle", oracle},
      {"failures", report.failures},
      {"status", report.exit_status()},
  };
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

int status_of(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e)) return exit_capacity;
  if (dynamic_cast<const ConsistencyError*>(&e)) return exit_inconsistent;
  return exit_validation;
}

int run_batch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.batch_path);
  if (!in) {
    err << "error: cannot read batch file " << config.batch_path << "\n";
    return exit_validation;
  }
  json results = json::array();
  int worst = exit_ok;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const auto words = split_words(line);
    if (words.empty() || words.front().starts_with("#")) continue;
    int status = exit_ok;
    try {
      RunConfig one = parse_spec(words);
      if (!one.batch_path.empty())
        throw ValidationError("--batch cannot be nested");
      one.limits = config.limits;
      RunReport report = evaluate(one);
      json entry = report_object(report);
      entry["line"] = number;
      results.push_back(std::move(entry));
      status = report.exit_status();
    } catch (const std::exception& e) {
      status = status_of(e);
      err << "line " << number << ": " << e.what() << "\n";
      results.push_back({{"line", number}, {"error", e.what()}, {"status", status}});
    }
    worst = std::max(worst, status);
  }
  out << results.dump(2) << "\n";
  return worst;
}

}  // namespace

std::string usage() {
  RunConfig config;
  std::string family, format;
  std::vector<std::string> gens;
  std::optional<std::uint64_t> cap, oracle_cap;
  int dim = 0;
  CLI::App app{"Diagonal-invariant Hilbert series for G = H x| S_n", "molien"};
  build_app(app, config, family, gens, format, cap, oracle_cap, dim);
  return app.help();
}

RunConfig parse_spec(const std::vector<std::string>& args) {
  RunConfig config;
  std::string family;
  std::string format = "text";
  std::vector<std::string> gens;
  std::optional<std::uint64_t> cap, oracle_cap;
  int dim = 0;

  CLI::App app{"Diagonal-invariant Hilbert series for G = H x| S_n", "molien"};
  build_app(app, config, family, gens, format, cap, oracle_cap, dim);

  std::vector<const char*> argv{"molien"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    config.show_help = true;
    return config;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  if (const char* env = std::getenv("MOLIEN_CAP"); env && *env) {
    const auto value = parse_cap(env, "MOLIEN_CAP");
    config.limits.enumeration_cap = value;
    config.limits.oracle_cap = value;
  }
  if (cap) config.limits.enumeration_cap = parse_cap(std::to_string(*cap), "--cap");
  if (oracle_cap)
    config.limits.oracle_cap = parse_cap(std::to_string(*oracle_cap), "--oracle-cap");

  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (config.k < 1) throw ValidationError("--k must be at least 1");
  if (!config.batch_path.empty() && family.empty()) return config;
  if (family.empty()) throw ValidationError("--family is required");

  config.family.kind = parse_family(family);
  if (config.family.kind == FamilyRequest::Kind::custom) {
    if (dim != 0) config.family.n = dim;
    if (config.family.n < 1) throw ValidationError("custom H needs --dim");
    if (config.family.modulus < 2) throw ValidationError("custom H needs --modulus >= 2");
    for (const auto& g : gens) {
      auto v = parse_vector(g);
      if (v.size() != static_cast<std::size_t>(config.family.n))
        throw ValidationError("generator '" + g + "' does not have length " +
                              std::to_string(config.family.n));
      for (int r : v)
        if (r < 0 || r >= config.family.modulus)
          throw ValidationError("generator '" + g + "' has a residue outside [0, " +
                                std::to_string(config.family.modulus - 1) + "]");
      config.family.generators.push_back(std::move(v));
    }
  } else if (!gens.empty()) {
    throw ValidationError("--gen only applies to --family custom");
  }
  return config;
}

RunReport evaluate(const RunConfig& config) {
  const GroupSpec spec = family_subgroup(config.family, config.limits);
  RunReport report;
  report.result = compute_Q(spec, config.k, config.limits);
  report.scaled_limit = scaled_limit(spec, config.k, config.limits);

  const QResult& r = report.result;
  if (r.is_polynomial && *r.rank != Rational(r.expected_rank))
    report.failures.push_back("rank " + r.rank->get_str() + " != |G|^" +
                              std::to_string(config.k - 1) + " = " +
                              r.expected_rank.get_str());
  const Rational expected_limit = 1 / Rational(spec.order_g);
  if (report.scaled_limit != expected_limit)
    report.failures.push_back("scaled limit " + report.scaled_limit.get_str() +
                              " != 1/|G| = " + expected_limit.get_str());
  if (config.check_oracle) {
    const MultiPoly engine = truncate(r.r_k, config.depth);
    const MultiPoly brute = oracle_series(spec, config.k, config.depth, config.limits);
    report.oracle = OracleCheck{config.depth, engine == brute};
    if (!report.oracle->agrees)
      report.failures.push_back("engine and oracle disagree up to depth " +
                                std::to_string(config.depth));
  }
  return report;
}

std::string report_text(const RunReport& report) {
  const QResult& r = report.result;
  const GroupSpec& g = r.group;
  std::ostringstream out;
  out << "group: " << g.label << " (" << family_name(g.family) << "), N="
      << g.modulus << ", n=" << g.n << ", |H|=" << g.order_h.get_str()
      << ", |G|=" << g.order_g.get_str() << "\n";
  out << "k = " << r.k << "\n";
  out << "R_1 = " << r.r_1.to_string() << "\n";
  if (r.is_polynomial) {
    out << "Q = " << r.q.numerator.to_string() << "\n";
    out << "rank " << r.rank->get_str()
        << (*r.rank == Rational(r.expected_rank) ? " = " : " != ") << "|G|^"
        << r.k - 1;
    if (r.k != 2) out << " = " << r.expected_rank.get_str();
    out << "\n";
    out << "separable: " << (*r.is_separable ? "yes" : "no") << "\n";
  } else {
    out << "Q is NOT a polynomial\n";
    out << "  Q = " << r.q.to_string() << "\n";
    for (std::size_t i = 0; i < r.residual_denominators.size(); ++i)
      if (r.residual_denominators[i].size() > 1)
        out << "  further divided by "
            << dense::to_string(r.residual_denominators[i], "h" + std::to_string(i + 1))
            << "\n";
    for (std::size_t i = 0; i < r.reduced_denominators.size(); ++i)
      out << "  reduced denominator in h" << i + 1 << ": "
          << dense::to_string(r.reduced_denominators[i], "h" + std::to_string(i + 1))
          << "\n";
    out << "expected rank |G|^" << r.k - 1 << " = " << r.expected_rank.get_str()
        << "\n";
  }
  const Rational expected_limit = 1 / Rational(g.order_g);
  out << "scaled limit: " << report.scaled_limit.get_str()
      << (report.scaled_limit == expected_limit ? " = " : " != ") << "1/|G|\n";
  if (report.oracle)
    out << "oracle (depth " << report.oracle->depth << "): "
        << (report.oracle->agrees ? "agrees" : "DISAGREES") << "\n";
  for (const auto& f : report.failures) out << "FAILED: " << f << "\n";
  return out.str();
}

std::string report_json(const RunReport& report, int indent) {
  return report_object(report).dump(indent);
}

MultiPoly q_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const auto k = doc.at("k").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : doc.at("Q").at("terms")) {
      auto exps = t.at("exponents").get<Exponents>();
      terms.push_back(Term{std::move(exps),
                           parse_fraction(t.at("coeff").get<std::string>())});
    }
    return MultiPoly::from_terms(k, std::move(terms));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report JSON: ") + e.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path);
    if (!file) {
      err << "error: cannot write " << config.output_path << "\n";
      return exit_validation;
    }
  }
  std::ostream& sink = config.output_path.empty() ? out : file;
  if (config.show_help) {
    sink << usage();
    return exit_ok;
  }
  if (!config.batch_path.empty()) return run_batch(config, sink, err);
  try {
    const RunReport report = evaluate(config);
    if (config.format == OutputFormat::json) {
      sink << report_json(report) << "\n";
    } else {
      sink << report_text(report);
    }
    for (const auto& f : report.failures) err << "consistency failure: " << f << "\n";
    return report.exit_status();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return status_of(e);
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  try {
    return run(parse_spec(args), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return status_of(e);
  }
}

}  // namespace molien
