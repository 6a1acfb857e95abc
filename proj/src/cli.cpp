#include "lucasbinom/cli.hpp"

#include "lucasbinom/binomials.hpp"
#include "lucasbinom/errors.hpp"
#include "lucasbinom/identities.hpp"
#include "lucasbinom/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lucasbinom::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::optional<Quotient>;

const char* family_name(Family f) {
  switch (f) {
    case Family::U:
      return "u";
    case Family::V:
      return "v";
    case Family::H:
      return "h";
    case Family::Mixed:
      return "mixed";
    case Family::Multinomial:
      break;
  }
  return "multinomial";
}

const char* family_symbol(Family f) {
  switch (f) {
    case Family::U:
      return "U";
    case Family::V:
      return "V";
    default:
      return "H";
  }
}

SequenceHandle family_handle(const CliConfig& cfg) {
  const auto& p = cfg.params;
  switch (cfg.family) {
    case Family::U:
      return lucas_u(p.s, p.t);
    case Family::V:
      return lucas_v(p.s, p.t);
    case Family::H:
    case Family::Multinomial:
      return SequenceHandle(p);
    case Family::Mixed:
      break;
  }
  throw ParseError("family 'mixed' has no single sequence");
}

std::string cell_text(const Cell& c) { return c ? c->to_string() : "ZERO-TERM"; }

json cell_json(const Cell& c) { return c ? json(c->to_string()) : json(nullptr); }

json params_json(const CliConfig& cfg) {
  json j;
  j["family"] = family_name(cfg.family);
  j["s"] = cfg.params.s.to_string();
  j["t"] = cfg.params.t.to_string();
  if (cfg.family == Family::H || cfg.family == Family::Multinomial) {
    j["a"] = cfg.params.a.to_string();
    j["b"] = cfg.params.b.to_string();
  }
  return j;
}

std::string tex_coefficient(Family f, std::size_t n, std::size_t k) {
  std::ostringstream os;
  if (f == Family::Mixed) {
    os << "{" << n << " \\choose " << k << "," << n - k << "}_{\\langle . \\rangle / \\{ . \\}}";
  } else {
    os << "{" << n << " \\choose " << k << "}_{" << family_symbol(f) << "}";
  }
  return os.str();
}

template <typename F>
Cell guarded(F&& f) {
  try {
    return f();
  } catch (const ZeroTerm&) {
    return std::nullopt;
  }
}

// The oracle agrees with a cell when both are undefined or both give the same value.
bool oracle_agrees(const Cell& cell, const std::function<oracle::OracleResult()>& compute) {
  std::optional<oracle::OracleResult> reference;
  try {
    reference = compute();
  } catch (const ZeroTerm&) {
    return !cell.has_value();
  }
  return cell.has_value() && reference->matches(*cell);
}

void warn_if_repeated_root(const RingElement& s, const RingElement& t, std::ostream& err) {
  if (has_repeated_root(s, t)) {
    err << "warning: discriminant s^2 + 4t = 0 at s=" << s << ", t=" << t << "; the characteristic roots coincide\n";
  }
}

std::vector<std::string> expand_identities(const std::vector<std::string>& requested) {
  if (requested.empty()) return identity_labels();
  std::vector<std::string> wanted;
  for (const auto& label : requested) {
    if (label == "eq8") {
      wanted.emplace_back("eq8-u");
      wanted.emplace_back("eq8-v");
    } else if (label == "eq14") {
      wanted.emplace_back("eq14-paper");
      wanted.emplace_back("eq14-derived");
    } else if (std::find(identity_labels().begin(), identity_labels().end(), label) != identity_labels().end()) {
      wanted.push_back(label);
    } else {
      throw ParseError("unknown identity '" + label + "'");
    }
  }
  std::vector<std::string> ordered;
  for (const auto& label : identity_labels()) {
    if (std::find(wanted.begin(), wanted.end(), label) != wanted.end()) ordered.push_back(label);
  }
  return ordered;
}

std::vector<IdentityReport> reports_for(const std::string& label, const RingElement& s, const RingElement& t,
                                        std::size_t maxn, bool& equivalent) {
  if (label == "eq7") return check_lucas_decomposition(s, t, maxn);
  if (label == "eq8-u" || label == "eq8-v") {
    auto all = check_addition_formulas(s, t, maxn);
    std::vector<IdentityReport> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const auto& r) { return r.identity == label; });
    return out;
  }
  if (label == "eq9") return check_u_binomial_doubled(s, t, maxn);
  if (label == "eq12") return check_v_u_identity(s, t, maxn);
  if (label == "eq14-paper") return check_mixed_recurrence(s, t, maxn, MixedVariant::PaperEq14);
  if (label == "eq14-derived") return check_mixed_recurrence(s, t, maxn, MixedVariant::DerivedVr1);
  if (label == "eq15") return check_mixed_doubled(s, t, maxn);
  auto result = check_theorem1_equivalence(lucas_u(s, t), lucas_decomposition(s, t), maxn);
  equivalent = equivalent && result.equivalent;
  return std::move(result.recurrence);
}

std::string describe_cell(const IdentityReport& r) {
  std::ostringstream os;
  os << "s=" << r.params.s << " t=" << r.params.t << " r=" << r.r << " sidx=" << r.s;
  if (r.lhs && r.rhs) os << " lhs=" << *r.lhs << " rhs=" << *r.rhs;
  return os.str();
}

}  // namespace

const std::vector<std::string>& identity_labels() {
  static const std::vector<std::string> labels{"eq7",        "eq8-u",        "eq8-v", "eq9",       "eq12",
                                               "eq14-paper", "eq14-derived", "eq15",  "thm1-equiv"};
  return labels;
}

int run_seq(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  if (cfg.family == Family::Mixed || cfg.family == Family::Multinomial) {
    throw ParseError("seq supports families u, v and h");
  }
  const SequenceHandle h = family_handle(cfg);
  const auto terms = h.terms(cfg.maxn);
  switch (cfg.format) {
    case Format::Csv:
      for (const auto& v : terms) out << v << '\n';
      break;
    case Format::Json: {
      json j = params_json(cfg);
      json arr = json::array();
      for (const auto& v : terms) arr.push_back(v.to_string());
      j["terms"] = std::move(arr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Tex:
      for (std::size_t n = 0; n < terms.size(); ++n) {
        out << family_symbol(cfg.family) << "_{" << n << "} = " << terms[n] << " \\\\\n";
      }
      break;
  }
  return kOk;
}

int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& p = cfg.params;

  if (cfg.family == Family::Multinomial) {
    if (cfg.parts.empty()) throw ParseError("family 'multinomial' needs --parts");
    const SequenceHandle h = family_handle(cfg);
    const Cell value = guarded([&] { return multinomial_quotient(h, cfg.parts); });
    std::string parts;
    for (std::size_t i = 0; i < cfg.parts.size(); ++i) parts += (i ? " " : "") + std::to_string(cfg.parts[i]);
    switch (cfg.format) {
      case Format::Csv:
        out << parts << ',' << cell_text(value) << '\n';
        break;
      case Format::Json: {
        json j = params_json(cfg);
        j["parts"] = cfg.parts;
        j["value"] = cell_json(value);
        out << j.dump(2) << '\n';
        break;
      }
      case Format::Tex: {
        const std::size_t n = std::accumulate(cfg.parts.begin(), cfg.parts.end(), std::size_t{0});
        std::string csv_parts = parts;
        std::replace(csv_parts.begin(), csv_parts.end(), ' ', ',');
        out << "{" << n << " \\choose " << csv_parts << "}_{H} = " << cell_text(value) << " \\\\\n";
        break;
      }
    }
    return kOk;
  }

  std::optional<SequenceHandle> h, u, v;
  if (cfg.family == Family::Mixed) {
    u.emplace(lucas_u(p.s, p.t));
    v.emplace(lucas_v(p.s, p.t));
  } else {
    h.emplace(family_handle(cfg));
  }

  std::vector<std::vector<Cell>> rows(cfg.maxn + 1);
  for (std::size_t n = 0; n <= cfg.maxn; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Cell cell = cfg.family == Family::Mixed ? guarded([&] { return mixed_quotient(*v, *u, k, n - k); })
                                              : guarded([&] { return binomial_quotient(*h, n, k); });
      if (cfg.oracle) {
        const bool ok = cfg.family == Family::Mixed
                            ? oracle_agrees(cell, [&] { return oracle::oracle_mixed(p.s, p.t, k, n - k); })
                            : oracle_agrees(cell, [&] { return oracle::oracle_binomial(*h, n, k); });
        if (!ok) {
          err << "oracle mismatch at n=" << n << " k=" << k << ": " << cell_text(cell) << '\n';
          return kOracleMismatch;
        }
      }
      rows[n].push_back(std::move(cell));
    }
  }

  switch (cfg.format) {
    case Format::Csv:
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << cell_text(row[k]);
        out << '\n';
      }
      break;
    case Format::Json: {
      json j = params_json(cfg);
      json arr = json::array();
      for (const auto& row : rows) {
        json jr = json::array();
        for (const auto& c : row) jr.push_back(cell_json(c));
        arr.push_back(std::move(jr));
      }
      j["rows"] = std::move(arr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Tex:
      out << "% " << family_name(cfg.family) << " coefficients, s = " << p.s << ", t = " << p.t << '\n';
      for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          out << tex_coefficient(cfg.family, n, k) << " = " << cell_text(rows[n][k]) << " \\\\\n";
        }
      }
      break;
  }
  return kOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.maxn < 2) throw ParseError("verify needs --maxn >= 2");
  const auto labels = expand_identities(cfg.identities);

  std::vector<std::pair<RingElement, RingElement>> points;
  switch (cfg.grid) {
    case Grid::Single:
      points.emplace_back(cfg.params.s, cfg.params.t);
      break;
    case Grid::Integer:
      points = integer_grid();
      break;
    case Grid::Gaussian:
      points.push_back(gaussian_params());
      break;
  }
  for (const auto& [s, t] : points) {
    if (t.is_zero()) throw DegenerateRecurrence("t = 0 reduces the recurrence to first order");
    warn_if_repeated_root(s, t, err);
  }

  bool equivalent = true;
  std::map<std::string, std::vector<IdentityReport>> by_label;
  for (const auto& label : labels) {
    auto& bucket = by_label[label];
    for (const auto& [s, t] : points) {
      auto reps = reports_for(label, s, t, cfg.maxn, equivalent);
      bucket.insert(bucket.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
    }
  }

  std::vector<std::string> summary;
  bool ok = true;
  const bool experiment = by_label.count("eq14-paper") && by_label.count("eq14-derived");
  for (const auto& label : labels) {
    const auto& reps = by_label[label];
    std::size_t holds = 0, fails = 0, skipped = 0;
    const IdentityReport* first_failure = nullptr;
    for (const auto& r : reps) {
      if (r.holds()) ++holds;
      if (r.status == Status::SkippedZeroTerm) ++skipped;
      if (r.fails()) {
        ++fails;
        if (!first_failure) first_failure = &r;
      }
    }
    std::ostringstream line;
    line << label << ": " << holds << " hold, " << fails << " fail, " << skipped << " skipped";
    if (first_failure) line << "; first failure " << describe_cell(*first_failure);
    summary.push_back(line.str());
    const bool in_experiment = experiment && (label == "eq14-paper" || label == "eq14-derived");
    if (fails != 0 && !in_experiment) ok = false;
  }
  if (by_label.count("thm1-equiv")) {
    summary.push_back(std::string("thm1-equiv: decomposition and recurrence ") +
                      (equivalent ? "equivalent on every cell" : "NOT equivalent"));
    ok = ok && equivalent;
  }
  if (experiment) {
    const auto verdict = resolve_mixed_recurrence(by_label["eq14-paper"], by_label["eq14-derived"]);
    std::ostringstream line;
    if (verdict.clean) {
      const MixedVariant loser =
          *verdict.survivor == MixedVariant::PaperEq14 ? MixedVariant::DerivedVr1 : MixedVariant::PaperEq14;
      line << "eq14 survivor: " << variant_label(*verdict.survivor) << "; minimal counterexample for "
           << variant_label(loser) << ": " << describe_cell(*verdict.counterexample);
    } else {
      line << "eq14 dichotomy not clean: eq14-paper fails " << verdict.paper_failures << ", eq14-derived fails "
           << verdict.derived_failures;
      ok = false;
    }
    summary.push_back(line.str());
  }

  switch (cfg.format) {
    case Format::Csv:
      out << "identity,s,t,r,sidx,status,lhs,rhs\n";
      for (const auto& label : labels) {
        for (const auto& r : by_label[label]) {
          out << r.identity << ',' << r.params.s << ',' << r.params.t << ',' << r.r << ',' << r.s << ','
              << status_name(r.status) << ',' << (r.lhs ? r.lhs->to_string() : "") << ','
              << (r.rhs ? r.rhs->to_string() : "") << '\n';
        }
      }
      for (const auto& line : summary) out << "# " << line << '\n';
      break;
    case Format::Json: {
      json records = json::array();
      for (const auto& label : labels) {
        for (const auto& r : by_label[label]) {
          json j;
          j["identity"] = r.identity;
          j["s"] = r.params.s.to_string();
          j["t"] = r.params.t.to_string();
          j["r"] = r.r;
          j["sidx"] = r.s;
          j["status"] = std::string(status_name(r.status));
          j["lhs"] = r.lhs ? json(r.lhs->to_string()) : json(nullptr);
          j["rhs"] = r.rhs ? json(r.rhs->to_string()) : json(nullptr);
          records.push_back(std::move(j));
        }
      }
      json doc;
      doc["records"] = std::move(records);
      doc["summary"] = summary;
      doc["ok"] = ok;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Tex:
      for (const auto& label : labels) {
        for (const auto& r : by_label[label]) {
          out << "% " << r.identity << " (s=" << r.params.s << ", t=" << r.params.t << ", r=" << r.r
              << ", s'=" << r.s << ") " << status_name(r.status) << '\n';
          if (r.lhs && r.rhs) out << *r.lhs << (r.holds() ? " = " : " \\neq ") << *r.rhs << " \\\\\n";
        }
      }
      for (const auto& line : summary) out << "% " << line << '\n';
      break;
  }
  return ok ? kOk : kIdentityFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Lucas binomial coefficients and identity checks", "lucasbinom"};
  app.require_subcommand(1);

  std::string family = "u", format = "csv", grid = "single";
  std::string s = "1", t = "1", a = "0", b = "1", P, Q;
  std::size_t maxn = 10;
  std::vector<std::string> identities;
  std::vector<std::size_t> parts;
  bool use_oracle = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "u, v, h, mixed or multinomial")
        ->check(CLI::IsMember({"u", "v", "h", "mixed", "multinomial"}));
    auto* opt_s = sub->add_option("--s", s, "recurrence coefficient s");
    auto* opt_t = sub->add_option("--t", t, "recurrence coefficient t");
    sub->add_option("--a", a, "H_0 for family h");
    sub->add_option("--b", b, "H_1 for family h");
    auto* opt_p = sub->add_option("--P", P, "P = s");
    auto* opt_q = sub->add_option("--Q", Q, "Q = -t");
    opt_p->excludes(opt_s);
    opt_q->excludes(opt_t);
    sub->add_option("--maxn", maxn, "largest index");
    sub->add_option("--format", format, "csv, json or tex")->check(CLI::IsMember({"csv", "json", "tex"}));
  };

  auto* seq = app.add_subcommand("seq", "print H_0..H_maxn");
  add_common(seq);
  auto* table = app.add_subcommand("table", "print the coefficient triangle");
  add_common(table);
  table->add_flag("--oracle", use_oracle, "recompute every cell with the brute-force oracle");
  table->add_option("--parts", parts, "parts for the multinomial family")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "check identities exactly");
  add_common(verify);
  verify->add_option("--identity", identities, "identity labels (default: all)")->delimiter(',');
  verify->add_option("--grid", grid, "single, integer or gaussian")
      ->check(CLI::IsMember({"single", "integer", "gaussian"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kParseError;
  }

  try {
    CliConfig cfg;
    cfg.command = seq->parsed() ? Command::Seq : table->parsed() ? Command::Table : Command::Verify;
    static const std::map<std::string, Family> families{{"u", Family::U},
                                                        {"v", Family::V},
                                                        {"h", Family::H},
                                                        {"mixed", Family::Mixed},
                                                        {"multinomial", Family::Multinomial}};
    cfg.family = families.at(family);
    cfg.format = format == "json" ? Format::Json : format == "tex" ? Format::Tex : Format::Csv;
    cfg.grid = grid == "integer" ? Grid::Integer : grid == "gaussian" ? Grid::Gaussian : Grid::Single;
    const RingElement s_value = P.empty() ? parse_ring(s) : parse_ring(P);
    const RingElement t_value = Q.empty() ? parse_ring(t) : -parse_ring(Q);
    cfg.params = {s_value, t_value, parse_ring(a), parse_ring(b)};
    cfg.maxn = maxn;
    cfg.identities = identities;
    cfg.oracle = use_oracle;
    cfg.parts = parts;

    switch (cfg.command) {
      case Command::Seq:
        return run_seq(cfg, out, err);
      case Command::Table:
        return run_table(cfg, out, err);
      case Command::Verify:
        break;
    }
    return run_verify(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegenerateRecurrence& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kOtherError;
  }
}

}  // namespace lucasbinom::cli
