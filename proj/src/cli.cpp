#include "dctri/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dctri/genperm.hpp"
#include "dctri/lattice_polytope.hpp"
#include "dctri/serialization.hpp"
#include "dctri/verifier.hpp"

namespace dctri::cli {

namespace {

std::optional<Integer> parse_t_start(const RunConfig& c) {
  if (!c.t_start) return std::nullopt;
  Integer t;
  if (t.set_str(*c.t_start, 10) != 0 || t < 2) throw InputError("--t-start must be an integer >= 2");
  return t;
}

TriangulationRun build(const Json& doc, const RunConfig& c) {
  const auto t = parse_t_start(c);
  GenpermOptions g{c.seed, t, c.max_retries, true};
  if (is_submodular_json(doc)) {
    const SubmodularFunction f = submodular_from_json(doc);
    if (c.independence) {
      if (!f.is_monotone()) throw InputError("--independence requires a monotone submodular function");
      return triangulate_independence_polytope(f, g);
    }
    return triangulate_genperm(f, g);
  }
  const Matroid m = matroid_from_json(doc);
  if (c.independence) return triangulate_independence_polytope(m, g);
  return triangulate_base_polytope(m, TriangulatorOptions{c.seed, t, c.max_retries, true});
}

bool is_subdivision_json(const Json& doc) { return doc.is_object() && doc.contains("cells"); }

void print_failures(const VerificationReport& r, std::ostream& err) {
  for (const auto& f : r.failures) err << "  " << f.check << ": " << f.detail << "\n";
}

// Maps library exceptions to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const RetryCapExceeded& e) {
    err << "retry cap exceeded: " << e.what() << "\n";
    return kRetryCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

std::string name_uniform(std::size_t r, std::size_t n) {
  return "U(" + std::to_string(r) + "," + std::to_string(n) + ")";
}

std::vector<std::pair<std::string, Matroid>> corpus_family(const RunConfig& c) {
  std::vector<std::pair<std::string, Matroid>> rows;
  if (c.input == "uniform") {
    if (c.max_n < 1 || c.max_n > 8) throw InputError("--max-n must be in 1..8");
    for (std::size_t n = 1; n <= c.max_n; ++n)
      for (std::size_t r = 1; r <= n; ++r) rows.emplace_back(name_uniform(r, n), Matroid::uniform(r, n));
    return rows;
  }
  if (c.input == "acceptance") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t r = 1; r <= n; ++r) rows.emplace_back(name_uniform(r, n), Matroid::uniform(r, n));
    rows.emplace_back("M(K4)", Matroid::graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    rows.emplace_back("U(1,2)+U(2,3)", Matroid::direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3)));
    rows.emplace_back("loop+coloop+U(1,2)", Matroid::from_basis_lists(4, {{2, 3}, {2, 4}}));
    return rows;
  }
  const Json doc = parse_json_file(c.input);
  if (!doc.is_array()) throw InputError("corpus file must hold a JSON array");
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    if (entry.is_object() && entry.contains("matroid"))
      rows.emplace_back(entry.value("name", "row" + std::to_string(i + 1)), matroid_from_json(entry.at("matroid")));
    else
      rows.emplace_back("row" + std::to_string(i + 1), matroid_from_json(entry));
  }
  return rows;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string corpus_row(const std::string& name, const Matroid& m, const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream row;
  row << csv_quote(name) << "," << m.size() << "," << m.bases().size() << ",";
  try {
    const auto run = triangulate_base_polytope(m, TriangulatorOptions{c.seed, parse_t_start(c), c.max_retries, true});
    const auto report = verify(run.triangulation);
    if (!report.passed()) throw Error("verification failed");
    std::string h;
    for (const auto& x : report.h_vector) h += (h.empty() ? "" : " ") + x.get_str();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    row << report.cells << "," << report.oracle_volume.get_str() << "," << csv_quote(h) << ","
        << to_string(report.flag.status) << "," << (c.timing ? std::to_string(ms) : std::string("-"));
  } catch (const std::exception& e) {
    row << ",," << csv_quote("") << "," << csv_quote(std::string("error: ") + e.what()) << ","
        << (c.timing ? "0" : "-");
  }
  return row.str();
}

}  // namespace

int cmd_triangulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = build(parse_json_file(config.input), config);
    const auto report = verify(run.triangulation);
    if (!report.passed()) {
      err << "built-in verification failed\n";
      print_failures(report, err);
      return int(kVerificationFailed);
    }
    Json doc = triangulation_run_to_json(run, config.emit_certificate);
    doc["verified"] = true;
    out << doc.dump() << "\n";
    return int(kOk);
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Subdivision s = subdivision_from_json(parse_json_file(config.input));
    const auto report = verify(s);
    Json doc = report_to_json(report);
    const bool ok = report.passed(config.allow_uncertified);
    if (ok && report.regular_certified == RegularityStatus::Unverifiable) {
      doc["warning"] = "no regularity certificate; accepted because of --allow-uncertified";
      err << "warning: regularity unverifiable\n";
    }
    out << doc.dump(2) << "\n";
    if (!ok) print_failures(report, err);
    return int(ok ? kOk : kVerificationFailed);
  });
}

int cmd_hstar(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = parse_json_file(config.input);
    const Subdivision t = is_subdivision_json(doc) ? subdivision_from_json(doc) : build(doc, config).triangulation;
    const auto report = verify(t, VerifyOptions{false, 0});
    if (!report.passed(config.allow_uncertified)) {
      err << "not a verified unimodular triangulation; its h-vector need not be the h*-vector\n";
      print_failures(report, err);
      return int(kVerificationFailed);
    }
    Json h = Json::array(), f = Json::array();
    for (const auto& x : report.h_vector) h.push_back(integer_to_json(x));
    for (const auto& x : report.f_vector) f.push_back(integer_to_json(x));
    out << Json{{"h_star", h}, {"f_vector", f}, {"volume", integer_to_json(report.oracle_volume)}}.dump() << "\n";
    return int(kOk);
  });
}

int cmd_dice(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = parse_json_file(config.input);
    const SubmodularFunction f =
        is_submodular_json(doc) ? submodular_from_json(doc) : SubmodularFunction::matroid_rank(matroid_from_json(doc));
    const Subdivision s = dice(lattice_points(f));
    Json j = subdivision_to_json(s, config.emit_certificate);
    j["cells_are_matroid_polytopes"] = true;
    out << j.dump() << "\n";
    return int(kOk);
  });
}

int cmd_flagcheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json doc = parse_json_file(config.input);
    const Subdivision t = is_subdivision_json(doc) ? subdivision_from_json(doc) : build(doc, config).triangulation;
    if (!t.is_triangulation()) throw InputError("flagcheck needs a triangulation");
    const auto r = flagness(t);
    Json j = {{"status", to_string(r.status)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    out << j.dump() << "\n";
    return int(kOk);
  });
}

int cmd_corpus(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    parse_t_start(config);
    const auto rows = corpus_family(config);
    std::vector<std::string> lines(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) lines[i] = corpus_row(rows[i].first, rows[i].second, config);
    };
    const unsigned count = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    out << "matroid,n,bases,cells,volume,h_vector,flag_status,wall_time_ms\n";
    for (const auto& line : lines) out << line << "\n";
    return int(kOk);
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Regular unimodular triangulations of matroid and generalized permutahedron polytopes"};
  app.require_subcommand(1);
  RunConfig config;
  if (const char* env = std::getenv("DCTRI_THREADS")) {
    try {
      config.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
    }
  }

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&, std::ostream&);
  };
  const Entry entries[] = {
      {"triangulate", "triangulate a matroid or submodular-function polytope", cmd_triangulate},
      {"verify", "verify a triangulation JSON file", cmd_verify},
      {"hstar", "h*-vector from a verified unimodular triangulation", cmd_hstar},
      {"dice", "unit dicing of a generalized permutahedron", cmd_dice},
      {"flagcheck", "search for a minimal non-face with three or more vertices", cmd_flagcheck},
      {"corpus", "CSV summary over a family: uniform, acceptance, or a JSON list", cmd_corpus},
  };
  const Entry* chosen = nullptr;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("input", config.input, "input file (or family name for corpus)")->required();
    sub->add_option("--seed", config.seed, "schedule seed");
    sub->add_option("--t-start", config.t_start, "first moment-curve parameter");
    sub->add_option("-o,--output", config.output, "output file (default: stdout)");
    sub->add_option("--threads", config.threads, "worker threads (env DCTRI_THREADS)")->check(CLI::PositiveNumber);
    sub->add_option("--max-retries", config.max_retries, "genericity retries before giving up");
    sub->add_flag("--emit-certificate,!--no-certificate", config.emit_certificate, "include the regularity certificate");
    sub->add_flag("--independence", config.independence, "triangulate the independence polytope");
    sub->add_flag("--allow-uncertified", config.allow_uncertified, "accept a missing regularity certificate");
    sub->add_flag("!--no-timing", config.timing, "write '-' for wall times (byte-identical CSV)");
    sub->add_option("--max-n", config.max_n, "largest ground set for the uniform family");
    sub->callback([&chosen, &e] { chosen = &e; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }
  config.command = chosen->name;

  if (config.output.empty()) return chosen->fn(config, std::cout, std::cerr);
  std::ostringstream buffer;
  const int code = chosen->fn(config, buffer, std::cerr);
  if (!buffer.str().empty()) {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << config.output << "\n";
      return kFailure;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace dctri::cli
