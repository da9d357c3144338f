#include "umbra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "umbra/dsl.hpp"
#include "umbra/error.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"
#include "umbra/verify.hpp"
#include "umbra/virasoro.hpp"

namespace umbra::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
  int order = 10;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string output;
};

Format format_of(const RunConfig& cfg) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  return Format::Text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

ordered_json rational_list(std::span<const Rational> v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

void emit_poly(std::ostream& os, Format f, const UnivarPoly& p) {
  switch (f) {
    case Format::Text: os << p.pretty() << "\n"; break;
    case Format::Csv:
      os << "degree,coefficient\n";
      for (int k = 0; k <= std::max(p.degree(), 0); ++k) os << k << "," << p[k].str() << "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["coefficients"] = p.is_zero() ? ordered_json::array({"0"}) : rational_list(p.coeffs());
      j["pretty"] = p.pretty();
      os << j.dump(2) << "\n";
      break;
    }
  }
}

/// Series argument evaluated to at least `needed` terms.
TruncatedSeries series_arg(const std::string& text, int needed) { return dsl::eval_text(text, needed); }

int cmd_bell(const RunConfig& cfg, std::ostream& os) {
  const TruncatedSeries e = TruncatedSeries::exp_t(cfg.order);
  const TruncatedSeries b = compose(e, e - TruncatedSeries::constant(Rational(1), cfg.order));
  const std::vector<Rational> egf = b.egf_coeffs();
  switch (format_of(cfg)) {
    case Format::Text:
      for (std::size_t k = 0; k < egf.size(); ++k) os << (k ? " " : "") << egf[k];
      os << "\n";
      break;
    case Format::Csv:
      os << "n,value\n";
      for (std::size_t k = 0; k < egf.size(); ++k) os << k << "," << egf[k] << "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["order"] = cfg.order;
      j["egf"] = rational_list(egf);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_umbral_seq(const RunConfig& cfg, const std::string& b_text, int n, std::ostream& os) {
  if (n < 0) throw MathError(ErrorCode::InvalidArgument, "--n must be nonnegative");
  const TruncatedSeries b = series_arg(b_text, std::max(cfg.order, n));
  const auto seq = umbral_sequences(b, n);
  switch (format_of(cfg)) {
    case Format::Text:
      for (int k = 0; k <= n; ++k) os << "B_" << k << "(x) = " << seq[static_cast<std::size_t>(k)].pretty() << "\n";
      break;
    case Format::Csv:
      os << "n";
      for (int d = 0; d <= n; ++d) os << ",c_" << d;
      os << "\n";
      for (int k = 0; k <= n; ++k) {
        os << k;
        for (int d = 0; d <= n; ++d) os << "," << seq[static_cast<std::size_t>(k)][d];
        os << "\n";
      }
      break;
    case Format::Json: {
      ordered_json j;
      j["B"] = b_text;
      j["sequences"] = ordered_json::array();
      for (int k = 0; k <= n; ++k) {
        const auto& p = seq[static_cast<std::size_t>(k)];
        ordered_json e;
        e["n"] = k;
        e["coefficients"] = rational_list(p.coeffs());
        e["pretty"] = p.pretty();
        j["sequences"].push_back(e);
      }
      os << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_fmn_table(const RunConfig& cfg, int max_m, int max_n, std::ostream& os) {
  if (max_m < -1 || max_n < 0) throw MathError(ErrorCode::IndexOutOfRange, "need --max-m >= -1 and --max-n >= 0");
  const FTable table(max_m, max_n);
  switch (format_of(cfg)) {
    case Format::Csv: os << table.to_csv(); break;
    case Format::Json: os << table.to_json() << "\n"; break;
    case Format::Text: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header{"m\\n"};
      for (int n = 0; n <= max_n; ++n) header.push_back(std::to_string(n));
      cells.push_back(header);
      for (int m = -1; m <= max_m; ++m) {
        std::vector<std::string> row{std::to_string(m)};
        for (int n = 0; n <= max_n; ++n) row.push_back(table.at(m, n).str());
        cells.push_back(row);
      }
      std::vector<std::size_t> width(cells[0].size(), 0);
      for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i)
          os << (i ? "  " : "") << std::string(width[i] - row[i].size(), ' ') << row[i];
        os << "\n";
      }
      break;
    }
  }
  return kOk;
}

int cmd_pair(const RunConfig& cfg, const std::string& a_text, const std::string& p_text, std::ostream& os) {
  const UnivarPoly p = UnivarPoly::parse(p_text);
  const TruncatedSeries a = series_arg(a_text, std::max(cfg.order, p.degree()));
  const Rational value = pairing(a, p);
  switch (format_of(cfg)) {
    case Format::Text: os << value << "\n"; break;
    case Format::Csv: os << "value\n" << value << "\n"; break;
    case Format::Json: {
      ordered_json j;
      j["value"] = value.str();
      os << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& id, int instances, std::ostream& os) {
  std::vector<std::string> tags;
  if (id == "ALL") {
    tags = registry_tags();
  } else {
    tags.push_back(id);
  }
  VerifyOptions options;
  options.order = cfg.order;
  options.seed = cfg.seed;
  options.instances = instances;
  const auto results = run_entries(tags, options);
  const auto passed = std::count_if(results.begin(), results.end(), [](const VerifyResult& r) { return r.pass; });

  switch (format_of(cfg)) {
    case Format::Text:
      for (const auto& r : results) {
        os << r.tag << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks << " checks) [\"" << r.citation << "\"]\n";
        if (r.first_failure) os << "  first failure: " << *r.first_failure << "\n";
        for (const auto& n : r.notes) os << "  note: " << n << "\n";
      }
      os << "summary: " << passed << "/" << results.size() << " passed (order=" << cfg.order << ", seed=" << cfg.seed
         << ")\n";
      break;
    case Format::Csv:
      os << "tag,result,checks,first_failure,notes\n";
      for (const auto& r : results) {
        std::string notes;
        for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
        os << r.tag << "," << (r.pass ? "PASS" : "FAIL") << "," << r.checks << ","
           << csv_field(r.first_failure.value_or("")) << "," << csv_field(notes) << "\n";
      }
      break;
    case Format::Json: {
      ordered_json j;
      j["order"] = cfg.order;
      j["seed"] = cfg.seed;
      j["results"] = ordered_json::array();
      for (const auto& r : results) {
        ordered_json e;
        e["tag"] = r.tag;
        e["citation"] = r.citation;
        e["pass"] = r.pass;
        e["checks"] = r.checks;
        e["first_failure"] = r.first_failure ? ordered_json(*r.first_failure) : ordered_json(nullptr);
        e["notes"] = r.notes;
        j["results"].push_back(e);
      }
      j["passed"] = passed;
      j["total"] = results.size();
      os << j.dump(2) << "\n";
      break;
    }
  }
  return passed == static_cast<long>(results.size()) ? kOk : kIdentityFailure;
}

void print_syntax_error(std::ostream& err, const std::string& text, const dsl::SyntaxError& e) {
  err << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n"
      << "series grammar:\n"
      << dsl::grammar_help();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact formal power series, umbral calculus and Virasoro ladder computations.", "umbra"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.footer(std::string("Series arguments (--A, --B) use the grammar:\n") + std::string(dsl::grammar_help()) +
             "Polynomial arguments (--p) are comma-separated rationals, lowest degree first, e.g. 0,1,1/2.\n"
             "Exit codes: 0 success, 1 identity failure, 2 usage, parse or domain error.");

  RunConfig cfg;
  app.add_option("--order", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomised identity instances")->capture_default_str();
  app.add_option("--output", cfg.output, "Write the report to this file instead of standard output");

  auto* bell = app.add_subcommand("bell", "EGF coefficients of exp(exp(t)-1) (Bell numbers)");

  std::string b_text, a_text, p_text, id = "ALL";
  int n = 0, m = -1, max_m = 3, max_n = 5, instances = 3;

  auto* useq = app.add_subcommand("umbral-seq", "Umbral sequence B_0(x), ..., B_n(x) of a delta series");
  useq->add_option("--B", b_text, "Delta series B(t)")->required();
  useq->add_option("--n", n, "Largest index")->required();

  auto* theta_cmd = app.add_subcommand("theta", "theta_B: x^n -> B_n(x)");
  theta_cmd->add_option("--B", b_text, "Delta series B(t)")->required();
  theta_cmd->add_option("--p", p_text, "Polynomial p(x)")->required();

  auto* shift = app.add_subcommand("shift", "Generalised umbral shift D_B(m): B_n -> f_m(n) B_{n-m}");
  shift->add_option("--B", b_text, "Delta series B(t)")->required();
  shift->add_option("--m", m, "Shift index m >= -1")->capture_default_str();
  shift->add_option("--p", p_text, "Polynomial p(x)")->required();

  auto* fmn = app.add_subcommand("fmn-table", "Table of ladder coefficients f_m(n)");
  fmn->add_option("--max-m", max_m, "Largest m")->capture_default_str();
  fmn->add_option("--max-n", max_n, "Largest n")->capture_default_str();

  auto* pair_cmd = app.add_subcommand("pair", "Umbral pairing <A | p(x)>");
  pair_cmd->add_option("--A", a_text, "Series A(t)")->required();
  pair_cmd->add_option("--p", p_text, "Polynomial p(x)")->required();

  auto* verify = app.add_subcommand("verify", "Check identities from the registry");
  verify->add_option("--id", id, "Registry tag or ALL")->capture_default_str();
  verify->add_option("--instances", instances, "Random instances per entry")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::ostringstream report;
  int code = kOk;
  std::string current_text;
  try {
    if (bell->parsed()) {
      code = cmd_bell(cfg, report);
    } else if (useq->parsed()) {
      current_text = b_text;
      code = cmd_umbral_seq(cfg, b_text, n, report);
    } else if (theta_cmd->parsed()) {
      const UnivarPoly p = UnivarPoly::parse(p_text);
      current_text = b_text;
      const TruncatedSeries b = series_arg(b_text, std::max(cfg.order, p.degree()));
      emit_poly(report, format_of(cfg), theta(b, p));
    } else if (shift->parsed()) {
      const UnivarPoly p = UnivarPoly::parse(p_text);
      current_text = b_text;
      const TruncatedSeries b = series_arg(b_text, std::max(cfg.order, p.degree() + 1));
      emit_poly(report, format_of(cfg), gen_umbral_shift_m(b, m, p));
    } else if (fmn->parsed()) {
      code = cmd_fmn_table(cfg, max_m, max_n, report);
    } else if (pair_cmd->parsed()) {
      current_text = a_text;
      code = cmd_pair(cfg, a_text, p_text, report);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, id, instances, report);
    }
  } catch (const dsl::SyntaxError& e) {
    print_syntax_error(err, current_text, e);
    return kUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << cfg.output << "'\n";
      return kUsage;
    }
    file << report.str();
  }
  return code;
}

}  // namespace umbra::cli
