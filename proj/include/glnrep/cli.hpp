#pragma once

// Command-line front end. parse_cli turns argv into a CliConfig; run executes
// it against caller-supplied streams and returns the process exit status:
//   0 success, 2 malformed input or usage, 3 a checked bound failed, 4 I/O.

#include "glnrep/arthur.hpp"
#include "glnrep/bounds.hpp"
#include "glnrep/decay.hpp"
#include "glnrep/json_io.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/parallel.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace glnrep {

enum class Command { invariants, dual, verify_arthur, verify_unitary, verify_consistency, figure, partitions };
enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBoundFailure = 3;
inline constexpr int kExitIo = 4;

struct CliConfig {
  Command command = Command::partitions;
  std::optional<std::string> input_path;
  std::optional<int> N;
  std::optional<std::string> out_path;
  std::optional<unsigned> threads;
  OutputFormat format = OutputFormat::csv;

  // Command-specific extras.
  std::optional<std::string> orbit;  // invariants: HCH exponent at this orbit, "3+1"
  std::vector<std::string> twist_grid{"1/10", "2/10", "3/10", "4/10"};
  int max_summands = 3;
};

namespace detail {

inline Json rat_json(const Rat& x) { return Json{{"exact", x.str()}, {"decimal", x.decimal(12)}}; }

inline Json bound_json(const BoundExponent& b) {
  return Json{{"coeff_of_ell", rat_json(b.coeff_of_ell)}, {"epsilon", b.epsilon_slack}, {"description", b.description}};
}

inline Json parts_json(const Partition& p) { return Json(p.parts()); }

inline Partition parse_partition_text(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument("part");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--orbit", "\"" + text + "\" is not a partition written as d1+d2+...");
    }
  }
  if (parts.empty()) throw ParseError("--orbit", "empty partition");
  return Partition(std::move(parts));
}

inline Json report_json(const InvariantReport& r) {
  Json j{{"N", r.A.n()},
         {"arthur_type", r.arthur_type},
         {"arthur_sl2", r.A.str()},
         {"wavefront", r.wavefront.str()},
         {"d_gk", rat_json(r.d_gk)}};
  if (r.g && r.t) {
    j["g"] = rat_json(*r.g);
    j["t"] = rat_json(*r.t);
    if (*r.t == Rat(1)) {
      j["p"] = "infinity";
    } else {
      j["p"] = rat_json(Rat(2) / (Rat(1) - *r.t));
    }
    j["lower_ok"] = r.lower_ok;
    j["upper_ok"] = r.upper_ok;
    j["formula_ok"] = r.formula_ok;
    j["maximizers"] = r.maximizers;
  }
  return j;
}

inline Json zelevinsky_exponents_json(const Multisegment& m, const std::optional<Partition>& orbit) {
  auto [rel1, rel2] = relative_exponents(m);
  Json j{{"fixed_vector", bound_json(fixed_vector_exponent(m))},
         {"relative", bound_json(rel1)},
         {"relative_multiplicity", bound_json(rel2)},
         {"hch_zero_orbit", bound_json(hch_coefficient_exponent(m, Partition::uniform(1, m.total_dim())))}};
  if (orbit) j["hch_orbit"] = bound_json(hch_coefficient_exponent(m, *orbit));
  return j;
}

inline Json character_json(const CharacterList& xi) {
  Json arr = Json::array();
  for (const auto& v : xi.values) arr.push_back(v.str());
  return arr;
}

inline void emit(std::ostream& out, const Json& j, OutputFormat format) {
  if (format == OutputFormat::json) {
    out << j.dump(2) << '\n';
    return;
  }
  // Flat key,value,decimal view of the top level; decimal is set for rationals.
  auto quote = [](std::string text) {
    if (text.find(',') == std::string::npos && text.find('"') == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  };
  out << "key,value,decimal\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    std::string text;
    std::string decimal;
    if (v.is_string()) {
      text = v.get<std::string>();
    } else if (v.is_object() && v.contains("exact")) {
      text = v["exact"].get<std::string>();
      decimal = v["decimal"].get<std::string>();
    } else {
      text = v.dump();
    }
    out << it.key() << ',' << quote(text) << ',' << decimal << '\n';
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read " + path);
  return ss.str();
}

inline Json summary_json(const SweepSummary& s) {
  Json j{{"N", s.N}, {"count", s.count}, {"failures", s.failures.size()}};
  if (s.min_gap_lower) j["min_gap_lower"] = rat_json(*s.min_gap_lower);
  if (s.min_gap_upper) j["min_gap_upper"] = rat_json(*s.min_gap_upper);
  Json rows = Json::array();
  for (const auto& r : s.failures) rows.push_back(report_json(r));
  j["failing_rows"] = rows;
  return j;
}

inline int finish_sweep(std::ostream& out, std::ostream& err, const SweepSummary& s, const char* what,
                        OutputFormat format) {
  if (format == OutputFormat::json) {
    out << summary_json(s).dump(2) << '\n';
  } else {
    out << "checked " << s.count << ' ' << what << ", " << s.failures.size() << " failures\n";
    if (s.min_gap_lower) out << "min_gap_lower," << s.min_gap_lower->str() << ',' << s.min_gap_lower->decimal(12) << '\n';
    if (s.min_gap_upper) out << "min_gap_upper," << s.min_gap_upper->str() << ',' << s.min_gap_upper->decimal(12) << '\n';
  }
  if (s.failures.empty()) return kExitOk;
  for (const auto& r : s.failures) err << "FAIL " << report_json(r).dump() << '\n';
  return kExitBoundFailure;
}

}  // namespace detail

inline int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const unsigned threads = resolve_threads(config.threads.value_or(0));
  auto need_n = [&](int min) {
    if (!config.N) throw ParseError("--N", "required for this command");
    if (*config.N < min) throw ParseError("--N", "must be at least " + std::to_string(min));
    return *config.N;
  };
  try {
    switch (config.command) {
      case Command::invariants: {
        if (!config.input_path) throw ParseError("--input", "required for this command");
        ParsedRep rep = parse_rep(detail::read_file(*config.input_path));
        std::optional<Partition> orbit;
        if (config.orbit) orbit = detail::parse_partition_text(*config.orbit);
        Json j;
        if (auto* pi = std::get_if<UnitaryRep>(&rep)) {
          j = detail::report_json(invariant_report(*pi));
          j["kind"] = "unitary";
          j["xi"] = detail::character_json(xi_arthur(*pi));
          Multisegment zel = zelevinsky_data(*pi);
          j["zelevinsky_data"] = to_json(zel);
          j["langlands_data"] = to_json(expand_to_langlands(*pi));
          if (orbit && orbit->n() != pi->N()) throw ParseError("--orbit", "not a partition of N");
          j["exponents"] = detail::zelevinsky_exponents_json(zel, orbit);
          if (pi->N() >= 2) {
            auto cert = maximizer_certificate(xi_arthur(*pi));
            j["maximizer_certificate"] = Json{{"argmax", cert.argmax}, {"boundaries", cert.boundaries}, {"contained", cert.contained}};
          }
        } else if (auto* m = std::get_if<Multisegment>(&rep)) {
          if (orbit && orbit->n() != m->total_dim()) throw ParseError("--orbit", "not a partition of N");
          j = Json{{"kind", "multisegment"},
                   {"N", m->total_dim()},
                   {"partition", partition_of(*m).str()},
                   {"wavefront", wavefront(*m).str()},
                   {"d_gk", detail::rat_json(gk_dim(*m))},
                   {"exponents", detail::zelevinsky_exponents_json(*m, orbit)},
                   {"xi_as_langlands_data", detail::character_json(xi_of(*m))},
                   {"tempered_as_langlands_data", is_tempered(*m)}};
        } else {
          const auto& p = std::get<GenArthurParam>(rep);
          Partition a = p.arthur_sl2();
          j = Json{{"kind", "generalized_arthur_parameter"},
                   {"N", a.n()},
                   {"arthur_sl2", a.str()},
                   {"wavefront", dual_partition(a).str()},
                   {"d_gk", detail::rat_json(Rat(static_cast<std::int64_t>(orbit_dim(dual_partition(a))), 2))},
                   {"genbound", detail::bound_json(genbound_exponent(p))}};
        }
        detail::emit(out, j, config.format);
        return kExitOk;
      }
      case Command::dual: {
        if (!config.input_path) throw ParseError("--input", "required for this command");
        ParsedRep rep = parse_rep(detail::read_file(*config.input_path));
        auto* pi = std::get_if<UnitaryRep>(&rep);
        if (!pi) throw ParseError("$", "dual expects a unitarizable representation {\"summands\": [...]}");
        out << to_json(az_dual(*pi)).dump(2) << '\n';
        return kExitOk;
      }
      case Command::verify_arthur: {
        SweepSummary s = verify_uncertainty_arthur(need_n(2), threads);
        return detail::finish_sweep(out, err, s, "partitions", config.format);
      }
      case Command::verify_unitary: {
        std::vector<Rat> grid;
        for (const auto& y : config.twist_grid) {
          try {
            grid.push_back(Rat::parse(y));
          } catch (const std::exception&) {
            throw ParseError("--grid", "\"" + y + "\" is not a rational number");
          }
        }
        int n = need_n(2);
        SweepSummary s;
        try {
          s = verify_uncertainty_unitary(n, grid, config.max_summands);
        } catch (const std::domain_error& e) {
          throw ParseError("--grid", e.what());
        }
        return detail::finish_sweep(out, err, s, "representations", config.format);
      }
      case Command::verify_consistency: {
        ConsistencySummary s = verify_consistency(need_n(1));
        if (config.format == OutputFormat::json) {
          Json failures = Json::array();
          for (const auto& f : s.failures) failures.push_back(Json{{"identity", f.identity}, {"rep", to_json(f.pi)}});
          out << Json{{"max_N", s.max_N}, {"exhaustive", s.exhaustive_count}, {"random", s.random_count}, {"failures", failures}}.dump(2) << '\n';
        } else {
          out << "checked " << s.count() << " representations (" << s.exhaustive_count << " exhaustive, " << s.random_count
              << " random), " << s.failures.size() << " failures\n";
        }
        for (const auto& f : s.failures) err << "FAIL " << f.identity << ' ' << to_json(f.pi).dump() << '\n';
        return s.failures.empty() ? kExitOk : kExitBoundFailure;
      }
      case Command::figure: {
        auto rows = figure_data(need_n(2), threads);
        std::ofstream file;
        std::ostream* sink = &out;
        if (config.out_path) {
          file.open(*config.out_path, std::ios::binary | std::ios::trunc);
          if (!file) throw std::ios_base::failure("cannot open " + *config.out_path + " for writing");
          sink = &file;
        }
        write_figure_csv(*sink, rows);
        sink->flush();
        if (!*sink) throw std::ios_base::failure("write failed");
        std::size_t bad = 0;
        for (const auto& r : rows) {
          if (!r.lower_ok || !r.upper_ok) {
            err << "FAIL " << r.A.str() << '\n';
            ++bad;
          }
        }
        if (config.out_path) out << "wrote " << rows.size() << " rows to " << *config.out_path << '\n';
        return bad ? kExitBoundFailure : kExitOk;
      }
      case Command::partitions: {
        int n = need_n(1);
        if (config.format == OutputFormat::json) {
          out << "[";
          bool first = true;
          for (const Partition& p : enumerate_partitions(n)) {
            out << (first ? "" : ",") << "\n  " << Json(p.parts()).dump();
            first = false;
          }
          out << "\n]\n";
        } else {
          for (const Partition& p : enumerate_partitions(n)) out << p.str() << '\n';
        }
        return kExitOk;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

// Parses argv. Returns the config, or an exit status when parsing finished
// the run (help text or a usage error).
inline std::variant<CliConfig, int> parse_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of smooth irreducible representations of p-adic GL_N", "glnrep"};
  app.require_subcommand(1);
  CliConfig config;
  std::string format = "csv";
  int n = 0;
  unsigned threads = 0;
  std::string input;
  std::string output;
  std::string orbit;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads (default: GLNREP_THREADS or all cores)")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--N,-N", n, "rank N of GL_N")->required(); };

  auto* inv = app.add_subcommand("invariants", "invariants of a representation given as JSON");
  inv->add_option("--input,-i", input, "JSON file")->required();
  inv->add_option("--orbit", orbit, "also report the HCH exponent at this orbit, e.g. 3+1");
  add_common(inv);
  auto* dual = app.add_subcommand("dual", "Aubert-Zelevinsky dual of a unitarizable representation");
  dual->add_option("--input,-i", input, "JSON file")->required();
  add_common(dual);
  auto* va = app.add_subcommand("verify-arthur", "check g <= t <= sqrt(g) over all Arthur-type representations");
  add_n(va);
  add_common(va);
  auto* vu = app.add_subcommand("verify-unitary", "check g <= t <= sqrt(g) + 2/N over unitarizable representations");
  add_n(vu);
  vu->add_option("--grid", config.twist_grid, "twists in (0, 1/2)")->delimiter(',');
  vu->add_option("--max-summands", config.max_summands, "maximum number of summand groups")->check(CLI::PositiveNumber);
  add_common(vu);
  auto* vc = app.add_subcommand("verify-consistency", "cross-check the Arthur and Zelevinsky routes");
  add_n(vc);
  add_common(vc);
  auto* fig = app.add_subcommand("figure", "CSV of (d_GK, g, t) over all Arthur-SL2 partitions of N");
  add_n(fig);
  fig->add_option("--out,-o", output, "output CSV path (default: stdout)");
  add_common(fig);
  auto* parts = app.add_subcommand("partitions", "list the partitions of N");
  add_n(parts);
  add_common(parts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  const std::pair<CLI::App*, Command> table[] = {{inv, Command::invariants},
                                                 {dual, Command::dual},
                                                 {va, Command::verify_arthur},
                                                 {vu, Command::verify_unitary},
                                                 {vc, Command::verify_consistency},
                                                 {fig, Command::figure},
                                                 {parts, Command::partitions}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) config.command = cmd;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (n != 0) config.N = n;
  if (threads != 0) config.threads = threads;
  if (!input.empty()) config.input_path = input;
  if (!output.empty()) config.out_path = output;
  if (!orbit.empty()) config.orbit = orbit;
  return config;
}

}  // namespace glnrep
