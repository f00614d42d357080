#include "orjsj/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "orjsj/errors.hpp"
#include "orjsj/jsj.hpp"
#include "orjsj/oracle.hpp"
#include "orjsj/parse.hpp"
#include "orjsj/report.hpp"

namespace orjsj::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Svg };

struct CliConfig {
  std::string command;
  std::string relator;
  std::string file;
  std::string batch;
  Format format = Format::Text;
  Assumptions assumptions;
  std::string out_path;
  EngineOptions options;
  // oracle
  std::size_t max_length = 8;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct Outcome {
  int code = kSuccess;
  std::string out;
  std::string err;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

Outcome inapplicable(const std::string& message) { return {kInapplicable, "", message + "\n"}; }

std::string hnn_text(const HnnDecomposition& h) {
  std::string base = format_xy(h.base_relator);
  if (h.exponent != 1) base = "(" + base + ")^" + std::to_string(h.exponent);
  std::ostringstream os;
  os << "hnn extension\n"
     << "vertex group: <x, y | " << base << ">  (x = a)\n"
     << "stable letter: b\n"
     << "attaching map: y = b^-1 a b\n"
     << "representative: " << h.representative.str() << "\n";
  return os.str();
}

Outcome cmd_detect(const std::string& text, const Word& R, const CliConfig& cfg) {
  const Applicability a = triage(R, cfg.assumptions);
  const Detection d = detect(R, cfg.assumptions, cfg.options);
  const std::string answer = d.verdict == Verdict::NonTrivial ? "yes"
                             : d.verdict == Verdict::Trivial  ? "no"
                                                              : "unknown";
  const int code = d.verdict == Verdict::Unknown ? kInapplicable : kSuccess;
  if (cfg.format == Format::Json) {
    ordered_json j{{"input", text},
                   {"relator", R.str()},
                   {"applicability", case_name(a.kind)},
                   {"detection", answer},
                   {"warnings", d.warnings}};
    return {code, dump(j), ""};
  }
  if (code != kSuccess) return inapplicable(join(d.warnings, "\n"));
  return {code, answer + "\n", ""};
}

Outcome cmd_jsj(const std::string& text, const Word& R, const CliConfig& cfg) {
  const Applicability a = triage(R, cfg.assumptions);
  JsjDecomposition d;
  try {
    d = compute(R, cfg.assumptions, cfg.options);
  } catch (const JsjUndefined& e) {
    return inapplicable(e.what());
  }
  if (cfg.format == Format::Json) {
    ordered_json j{{"input", text},
                   {"relator", R.str()},
                   {"applicability", case_name(a.kind)},
                   {"decomposition", decomposition_json(d)}};
    return {kSuccess, dump(j), ""};
  }
  if (d.trivial()) return {kSuccess, "trivial: single vertex with vertex group G, no edges\n", ""};
  return {kSuccess, hnn_text(*d.hnn), ""};
}

Outcome cmd_out(const std::string& text, const Word& R, const CliConfig& cfg) {
  OutClass c;
  try {
    c = out_class(R, cfg.assumptions, cfg.options);
  } catch (const OutUndefined& e) {
    return inapplicable(e.what());
  }
  if (cfg.format == Format::Json) {
    ordered_json j{{"input", text}, {"relator", R.str()}, {"out_class", out_class_name(c)}};
    return {kSuccess, dump(j), ""};
  }
  return {kSuccess, out_class_name(c) + "\n", ""};
}

Outcome cmd_polytope(const std::string&, const Word& R, const CliConfig& cfg) {
  if (R.empty()) return inapplicable("the trivial relator has no polytope");
  if (!exponent_sums(R).in_derived_subgroup()) {
    return inapplicable("relator " + R.str() + " is not in F(a,b)': exponent sums are non-zero");
  }
  if (cfg.format == Format::Svg) return {kSuccess, render_svg(R), ""};
  const LatticePolytope p = ft_polytope(R);
  if (cfg.format == Format::Json) return {kSuccess, dump(polytope_json(p)), ""};
  std::ostringstream os;
  os << "class: " << class_name(classify(p)) << "\nvertices:";
  for (const auto& v : p.vertices()) os << " (" << v.x << "," << v.y << ")";
  os << "\n";
  return {kSuccess, os.str(), ""};
}

Outcome cmd_minimize(const std::string& text, const Word& R, const CliConfig& cfg) {
  const auto m = minimize(cyclic_reduce(R).core);
  std::vector<std::string> witness;
  for (const auto& w : m.witness) witness.push_back(w.describe());
  if (cfg.format == Format::Json) {
    ordered_json j{{"input", text},
                   {"min", m.min.str()},
                   {"length", m.min.size()},
                   {"witness", witness}};
    return {kSuccess, dump(j), ""};
  }
  std::ostringstream os;
  os << "min: " << m.min.str() << "\nlength: " << m.min.size() << "\n";
  if (!witness.empty()) os << "witness: " << join(witness, "; ") << "\n";
  return {kSuccess, os.str(), ""};
}

Outcome cmd_orbit(const std::string&, const Word& R, const CliConfig& cfg) {
  const auto orbit = shortest_orbit_set(cyclic_reduce(R).core, cfg.options.orbit_cap);
  if (cfg.format == Format::Json) return {kSuccess, dump(orbit_json(orbit)), ""};
  std::string s;
  for (const auto& m : orbit.members) s += m.str() + "\n";
  return {kSuccess, s, ""};
}

Outcome cmd_analyze(const std::string& text, const Word& R, const CliConfig& cfg) {
  JsjReport r = analyze(R, cfg.assumptions, cfg.options);
  r.input = text;
  const Case k = r.applicability.kind;
  const int code = (k == Case::NotOneEnded || k == Case::Unsupported) ? kInapplicable : kSuccess;
  if (cfg.format == Format::Json) return {code, dump(report_json(r)), ""};
  std::ostringstream os;
  os << "relator: " << r.relator.str() << "\n"
     << "root: " << r.applicability.root.str() << "  exponent: " << r.applicability.exponent
     << "\n"
     << "exponent sums: (" << r.applicability.sums.a << ", " << r.applicability.sums.b << ")\n"
     << "applicability: " << case_name(k) << "\n";
  if (r.polytope) {
    os << "polytope: " << class_name(classify(*r.polytope));
    for (const auto& v : r.polytope->vertices()) os << " (" << v.x << "," << v.y << ")";
    os << "\n";
  }
  os << "detection: " << verdict_name(r.detection) << "\n";
  if (r.decomposition) {
    if (r.decomposition->trivial()) {
      os << "decomposition: trivial\n";
    } else {
      os << "decomposition: " << hnn_text(*r.decomposition->hnn);
    }
  }
  if (r.out) os << "out: " << out_class_name(*r.out) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return {code, os.str(), ""};
}

Outcome dispatch(const std::string& text, const CliConfig& cfg) {
  try {
    const Word R = parse_relator(text);
    if (cfg.command == "detect") return cmd_detect(text, R, cfg);
    if (cfg.command == "jsj") return cmd_jsj(text, R, cfg);
    if (cfg.command == "out") return cmd_out(text, R, cfg);
    if (cfg.command == "polytope") return cmd_polytope(text, R, cfg);
    if (cfg.command == "minimize") return cmd_minimize(text, R, cfg);
    if (cfg.command == "orbit") return cmd_orbit(text, R, cfg);
    return cmd_analyze(text, R, cfg);
  } catch (const ParseError& e) {
    return {kParseError, "", std::string(e.what()) + "\n"};
  } catch (const EmptyWord&) {
    return inapplicable("trivial relator: <a, b | 1> is free and not one-ended");
  } catch (const std::exception& e) {
    return {kInternalError, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

Outcome error_record(const std::string& text, const Outcome& o) {
  ordered_json j{{"input", text}, {"error", trim(o.err)}, {"exit_code", o.code}};
  return {o.code, j.dump() + "\n", ""};
}

std::vector<Outcome> run_batch(const std::vector<std::string>& lines, const CliConfig& cfg) {
  std::vector<Outcome> results(lines.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(lines.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
          results[i] = dispatch(lines[i], cfg);
        }
      });
    }
  }
  if (cfg.format == Format::Json) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto& r = results[i];
      if (r.out.empty()) {
        r = error_record(lines[i], r);
      } else {
        // One record per line.
        r.out = ordered_json::parse(r.out).dump() + "\n";
      }
    }
  }
  return results;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

int execute(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::Svg && cfg.command != "polytope") {
    err << "--format svg is only valid for the polytope command\n";
    return kParseError;
  }

  std::vector<Outcome> results;
  if (cfg.command == "oracle") {
    const auto report = oracle::agreement_report(cfg.max_length, cfg.samples, cfg.seed);
    results.push_back({report["ok"].get<bool>() ? kSuccess : kInternalError, dump(report), ""});
  } else if (!cfg.batch.empty()) {
    std::vector<std::string> lines;
    if (cfg.batch == "-") {
      lines = read_lines(in);
    } else {
      std::ifstream f(cfg.batch);
      if (!f) {
        err << "cannot open batch file " << cfg.batch << "\n";
        return kParseError;
      }
      lines = read_lines(f);
    }
    results = run_batch(lines, cfg);
  } else {
    std::string text = cfg.relator;
    if (text.empty() && !cfg.file.empty()) {
      std::ifstream f(cfg.file);
      if (!f) {
        err << "cannot open input file " << cfg.file << "\n";
        return kParseError;
      }
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else if (text.empty()) {
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    results.push_back(dispatch(trim(text), cfg));
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file_out.open(cfg.out_path);
    if (!file_out) {
      err << "cannot open output file " << cfg.out_path << "\n";
      return kInternalError;
    }
    sink = &file_out;
  }
  int code = kSuccess;
  for (const auto& r : results) {
    *sink << r.out;
    err << r.err;
    if (code == kSuccess) code = r.code;
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Z_max-JSJ decompositions of two-generator one-relator groups <a, b | R>",
               "orjsj"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"svg", Format::Svg}};

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"detect", "print yes if the Z_max-JSJ decomposition is non-trivial, no otherwise"},
      {"jsj", "compute the Z_max-JSJ decomposition"},
      {"out", "classify Out(G) as finite, virtually-Z or GL2(Z)"},
      {"polytope", "Friedl-Tillmann polytope of a relator in F(a,b)'"},
      {"minimize", "shortest representative of the Aut(F(a,b))-orbit"},
      {"orbit", "all shortest cyclic words of the Aut(F(a,b))-orbit"},
      {"analyze", "full report"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("relator", cfg.relator, "relator word or presentation <a,b | R>");
    sub->add_option("--file", cfg.file, "read the relator from a file");
    sub->add_option("--batch", cfg.batch, "one relator per line ('-' for stdin)");
    sub->add_option("--format", cfg.format, "text, json or svg")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--assume-hyperbolic", cfg.assumptions.hyperbolic,
                  "assert that the group is hyperbolic");
    sub->add_flag("--assume-rg", cfg.assumptions.rg, "assert that the group is an RG group");
    sub->add_option("--out", cfg.out_path, "write output to FILE");
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
  }
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "")->group("");
  oracle_cmd->add_option("--max-length", cfg.max_length, "exhaustive length bound");
  oracle_cmd->add_option("--samples", cfg.samples, "random orbit-set samples");
  oracle_cmd->add_option("--seed", cfg.seed, "random seed");
  oracle_cmd->add_option("--out", cfg.out_path, "write output to FILE");
  oracle_cmd->callback([&cfg] { cfg.command = "oracle"; });

  std::vector<std::string> argv_storage{"orjsj"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  if (const char* cap = std::getenv("ORJSJ_ORBIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      err << "invalid ORJSJ_ORBIT_CAP value '" << cap << "'\n";
      return kParseError;
    }
    cfg.options.orbit_cap = static_cast<std::size_t>(v);
  }
  return execute(cfg, in, out, err);
}

}  // namespace orjsj::cli
