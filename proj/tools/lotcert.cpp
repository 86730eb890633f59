// lotcert: certify LOT/LOF complexes from the command line.
//
// Exit codes: 0 success, 1 property failure, 2 parse or I/O error,
// 3 hypothesis failure (or a non-generic relative case).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lot/certificate_json.hpp"
#include "lot/certify.hpp"
#include "lot/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

// "-" means stdout
void emit(const std::string& path, const std::string& text) {
  if (path == "-") std::cout << text;
  else write_file(path, text);
}

lot::Log load(const std::string& path) { return lot::parse_log(read_file(path)); }

std::size_t oracle_cap(std::size_t fallback) {
  if (const char* env = std::getenv("LOT_ORACLE_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("LOT_ORACLE_CAP must be a positive integer");
  }
  return fallback;
}

std::string verdict(const lot::Claim& c) { return std::string(lot::to_string(c.verdict)); }

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json) {
  const auto log = load(path);
  const auto cls = lot::classify(log);
  const auto r = lot::reducedness_report(log);
  const bool ok = cls.kind != lot::LogKind::general && r.reduced() && r.injective;
  if (as_json) {
    json out = {{"classification", {{"kind", lot::to_string(cls.kind)}, {"components", cls.components}}},
                {"flags", lot::to_json(r, log)},
                {"reduced_injective_lof", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "class: " << lot::to_string(cls.kind) << " (" << cls.components << " component"
              << (cls.components == 1 ? "" : "s") << ")\n";
    std::cout << "boundary reduced: " << (r.boundary_reduced ? "yes" : "no");
    for (auto v : r.boundary_witnesses) std::cout << " " << log.vertex_name(v);
    std::cout << "\ninterior reduced: " << (r.interior_reduced ? "yes" : "no");
    for (const auto& p : r.interior_witnesses)
      std::cout << " " << log.edge(p.first).id << "/" << log.edge(p.second).id << "@" << log.vertex_name(p.vertex);
    std::cout << "\ncompressed: " << (r.compressed ? "yes" : "no");
    for (auto e : r.compression_witnesses) std::cout << " " << log.edge(e).id;
    std::cout << "\ninjective: " << (r.injective ? "yes" : "no");
    for (const auto& p : r.injectivity_witnesses)
      std::cout << " " << log.edge(p.first).id << "/" << log.edge(p.second).id << ":" << log.vertex_name(p.vertex);
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_reduce(const std::string& path, const std::string& out) {
  const auto result = lot::reduce(load(path));
  std::ostringstream text;
  for (const auto& m : result.moves) {
    text << "# " << lot::to_string(m.kind) << " " << m.edge;
    if (!m.partner.empty()) text << " with " << m.partner;
    if (!m.removed.empty()) text << (m.kind == lot::MoveKind::boundary ? " removing " : " merging ") << m.removed;
    if (!m.kept.empty()) text << " into " << m.kept;
    text << "\n";
  }
  text << lot::serialize_log(result.log);
  emit(out, text.str());
  return 0;
}

int cmd_certify(const std::string& path, bool relative, const std::string& json_out,
                const std::string& dot_dir) {
  const auto log = load(path);
  const auto cert = relative ? lot::certify_relative(log) : lot::certify_lof(log);
  if (!json_out.empty()) emit(json_out, lot::certificate_text(cert));
  if (!dot_dir.empty()) {
    const fs::path dir(dot_dir);
    write_file(dir / "link.dot", lot::link_to_dot(cert.log, lot::build_link(cert.log),
                                                  cert.angles ? &*cert.angles : nullptr));
    const lot::Partition2* coloring = nullptr;
    if (cert.groups.size() == 1 && cert.groups[0].added.empty() && cert.groups[0].partition &&
        cert.groups[0].vertices.size() == cert.log.vertex_count())
      coloring = &*cert.groups[0].partition;
    write_file(dir / "selection.dot",
               lot::selection_to_dot(cert.log, lot::build_selection_graph(cert.log), coloring));
  }
  if (json_out != "-") {
    std::cout << "mode: " << (relative ? "relative" : "plain") << "\n";
    std::cout << "hypotheses: " << (cert.hypothesis.holds() ? "hold" : "fail") << "\n";
    for (const auto& g : cert.groups) {
      if (g.cut) {
        std::cout << "cut:";
        for (auto v : g.cut->vertices) std::cout << " " << g.tree.vertex_name(v);
        std::cout << " (delta " << g.cut->delta << ")\n";
      }
    }
    std::cout << "strong_lbf: " << verdict(cert.strong_lbf) << "\n"
              << "lbf: " << verdict(cert.lbf) << "\n"
              << "coloring_test: " << verdict(cert.coloring_test) << "\n"
              << "relative_coloring_test: " << verdict(cert.relative_coloring_test) << "\n"
              << "DR: " << verdict(cert.dr) << "\n"
              << "aspherical: " << verdict(cert.aspherical) << "\n"
              << "VA: " << verdict(cert.va) << "\n";
    if (!cert.note.empty()) std::cout << "note: " << cert.note << "\n";
  }
  return cert.exit_code();
}

int cmd_export(const std::string& what, const std::string& path, const std::string& out) {
  const auto log = load(path);
  if (what == "link") emit(out, lot::link_to_dot(log, lot::build_link(log)));
  else emit(out, lot::selection_to_dot(log, lot::build_selection_graph(log)));
  return 0;
}

int cmd_generate(std::size_t n, std::size_t count, std::uint64_t seed, const std::string& dir) {
  lot::oracle::Rng seeds(seed);
  json instances = json::array();
  const int width = static_cast<int>(std::to_string(count).size());
  for (std::size_t i = 1; i <= count; ++i) {
    const std::uint64_t s = seeds();
    const auto gen = lot::oracle::random_reduced_injective_lot(n, s);
    std::ostringstream name;
    name << "lot_" << std::setw(width) << std::setfill('0') << i << ".log";
    write_file(fs::path(dir) / name.str(), lot::serialize_log(gen.log));
    const auto r = lot::reducedness_report(gen.log);
    instances.push_back({{"file", name.str()},
                         {"seed", s},
                         {"attempts", gen.attempts},
                         {"reduced", r.reduced()},
                         {"injective", r.injective},
                         {"all_sub_lots_boundary_reduced", gen.all_sub_lots_boundary_reduced}});
  }
  json manifest = {{"vertices", n}, {"count", count}, {"seed", seed}, {"instances", instances}};
  write_file(fs::path(dir) / "manifest.json", manifest.dump(2) + "\n");
  return 0;
}

int cmd_oracle_check(const std::string& path) {
  const auto log = load(path);
  namespace o = lot::oracle;
  bool agree = true;
  auto report = [&](const std::string& what, bool ok) {
    std::cout << what << ": " << (ok ? "agree" : "DISAGREE") << "\n";
    agree = agree && ok;
  };
  const auto link = lot::build_link(log);
  for (auto sign : {lot::Sign::plus, lot::Sign::minus}) {
    const auto g = lot::sign_subgraph(link, sign).multigraph();
    report(std::string("is_forest on Lambda") + lot::sign_char(sign),
           lot::is_forest(g).holds == o::enumerate_simple_cycles(g, g.edges.size()).empty());
  }
  const auto cls = lot::classify(log);
  if (cls.kind == lot::LogKind::general) {
    std::cout << "not a LOF; skipping the lbf and branching oracles\n";
    return agree ? 0 : 1;
  }
  const auto cert = lot::certify_lof(log);
  if (cert.angles) {
    report("coloring test", cert.coloring->passed == o::coloring_test_by_cycles(log, *cert.angles));
  }
  try {
    const auto found = o::exhaustive_lbf_search(log, oracle_cap(16));
    std::cout << "lbf witnesses: " << found.size() << "\n";
    if (cert.hypothesis.holds()) report("lbf", (cert.lbf.verdict == lot::Verdict::yes) == !found.empty());
  } catch (const o::CapExceeded& e) {
    std::cout << "lbf oracle skipped: " << e.what() << "\n";
  }
  const auto free = lot::non_label_vertices(log);
  if (cls.kind == lot::LogKind::tree && free.size() == 1) {
    const auto sel = lot::build_selection_graph(log);
    try {
      const bool exhaustive = o::exhaustive_branching_search(sel, *free.begin(), oracle_cap(20)).has_value();
      const bool constructed = std::holds_alternative<lot::BranchingPair>(
          lot::two_disjoint_branchings(sel, *free.begin()));
      report("two disjoint branchings", exhaustive == constructed);
    } catch (const o::CapExceeded& e) {
      std::cout << "branching oracle skipped: " << e.what() << "\n";
    }
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify asphericity of LOT/LOF complexes"};
  app.require_subcommand(1);

  std::string input, out = "-", json_out, dot_dir, what;
  bool as_json = false, relative = false;
  std::size_t n = 0, count = 1;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "classification and reducedness report");
  validate->add_option("file", input)->required();
  validate->add_flag("--json", as_json, "print the report as JSON");

  auto* reduce = app.add_subcommand("reduce", "apply reduction moves, print the reduced log");
  reduce->add_option("file", input)->required();
  reduce->add_option("-o,--output", out, "output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "build a certificate");
  certify->add_option("file", input)->required();
  certify->add_flag("--relative", relative, "relative pipeline over maximal sub-LOTs");
  certify->add_option("--json", json_out, "write the JSON certificate ('-' for stdout)");
  certify->add_option("--dot", dot_dir, "write link.dot and selection.dot into this directory");

  auto* exp = app.add_subcommand("export", "DOT rendering of the link or selection graph");
  exp->add_option("what", what)->required()->check(CLI::IsMember({"link", "selection"}));
  exp->add_option("file", input)->required();
  exp->add_option("--dot,-o", out, "output file (default stdout)");

  auto* generate = app.add_subcommand("generate", "random reduced injective LOT corpus");
  generate->add_option("-n,--vertices", n, "vertices per LOT")->required()->check(CLI::Range(3, 64));
  generate->add_option("-c,--count", count, "number of LOTs")->check(CLI::PositiveNumber);
  generate->add_option("-s,--seed", seed, "seed");
  generate->add_option("-o,--out", out, "output directory")->required();

  auto* oracle = app.add_subcommand("oracle-check", "compare against brute-force oracles");
  oracle->add_option("file", input)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(input, as_json);
    if (*reduce) return cmd_reduce(input, out);
    if (*certify) return cmd_certify(input, relative, json_out, dot_dir);
    if (*exp) return cmd_export(what, input, out);
    if (*generate) return cmd_generate(n, count, seed, out);
    if (*oracle) return cmd_oracle_check(input);
  } catch (const lot::ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
