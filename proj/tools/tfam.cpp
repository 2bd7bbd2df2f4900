// tfam: command-line front end to the family library.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 invalid input or
// usage, 3 budget exceeded. Structured output goes to stdout as JSON,
// summaries and errors to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tfam/tfam.hpp"

using namespace tfam;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kBudget = 3 };

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write \"" + path + "\"");
  out << text;
}

IdealFamily load_family(const std::string& path, const AnyModel& m) {
  return family_from_json(read_json_file(path), vertex_names(m), rank_of(m));
}

int cmd_validate(const std::string& model_path) {
  auto m = load_model_file(model_path);
  Json out{{"valid", true},
           {"kind", kind_of(m)},
           {"rank", rank_of(m)},
           {"vertices", vertex_count_of(m)},
           {"fingerprint", fingerprint(m)}};
  if (auto* g = std::get_if<KGraph>(&m)) out["skeleton_only"] = g->skeleton_level();
  emit(out);
  std::cerr << model_path << ": valid " << kind_of(m) << ", rank " << rank_of(m) << ", " << vertex_count_of(m)
            << " vertices\n";
  return kOk;
}

int cmd_compute(const std::string& what, const std::string& model_path) {
  auto m = load_model_file(model_path);
  auto f = std::visit([&](const auto& g) { return what == "jf" ? j_family(g) : i_family(g); }, m);
  emit(family_to_json(f, vertex_names(m)));
  return kOk;
}

int cmd_family_check(const std::string& model_path, const std::string& family_path, const std::string& mode,
                     const std::string& k_path) {
  auto m = load_model_file(model_path);
  auto f = load_family(family_path, m);
  std::optional<IdealFamily> K;
  if (!k_path.empty()) K = load_family(k_path, m);
  if (mode == "rel" && !K) throw invalid_input("--mode rel needs --k <family file>");
  if (mode != "rel" && K) throw invalid_input("--k is only meaningful with --mode rel");
  auto report = std::visit(
      [&](const auto& g) {
        if (mode == "t") return is_t_family(g, f);
        if (mode == "nt") return is_nt_tuple(g, f);
        if (mode == "o") return is_o_family(g, f);
        return is_relative_o_family(g, f, *K);
      },
      m);
  emit(report_to_json(report, vertex_names(m)));
  std::cerr << (report.verdict ? "passed" : std::string("failed: ") + to_string(report.violated)) << '\n';
  return report.verdict ? kOk : kCheckFailed;
}

int cmd_enumerate(const std::string& model_path, const std::string& mode, const std::string& relative_path,
                  bool count_only, const EnumerationOptions& opts) {
  auto m = load_model_file(model_path);
  std::optional<IdealFamily> K;
  if (!relative_path.empty()) K = load_family(relative_path, m);
  auto result = std::visit(
      [&](const auto& g) {
        if (K) return enumerate_relative_o(g, *K, opts);
        if (mode == "o") return enumerate_o_families(g, opts);
        if (mode == "nt") return enumerate_nt_tuples(g, opts);
        return enumerate_t_families(g, opts);
      },
      m);
  if (count_only)
    std::cout << result.count() << '\n';
  else
    emit(enumeration_to_json(result, vertex_names(m)));
  std::cerr << result.count() << ' ' << to_string(result.mode) << " families\n";
  return kOk;
}

int cmd_lattice(const std::string& model_path, const std::string& dot_path, const std::string& json_path,
                const EnumerationOptions& opts) {
  auto m = load_model_file(model_path);
  auto g = std::visit(
      [&](const auto& model) { return build_lattice(model, enumerate_t_families(model, opts), vertex_names(m)); }, m);
  if (!dot_path.empty()) write_text(dot_path, export_dot(g));
  if (!json_path.empty()) write_text(json_path, export_json(g));
  if (dot_path.empty() && json_path.empty()) std::cout << export_json(g);
  std::cerr << g.nodes.size() << " nodes, " << g.cover_edges.size() << " cover edges\n";
  return kOk;
}

int cmd_crosscheck(const std::string& model_path, const std::string& corpus_path, const EnumerationOptions& eopts) {
  if (model_path.empty() == corpus_path.empty()) throw invalid_input("crosscheck needs exactly one of <model> or --corpus");
  std::vector<CorpusModel> corpus;
  SweepOptions opts;
  if (!corpus_path.empty()) {
    auto spec = corpus_from_json(read_json_file(corpus_path));
    opts = sweep_options(spec);
    corpus = build_corpus(spec);
  } else {
    corpus.push_back({load_model_file(model_path), model_path, 0});
  }
  opts.enumeration = eopts;
  std::size_t total = 0;
  for (const auto& ctx : corpus) {
    for (const auto& r : crosscheck_model(ctx, opts)) {
      std::cout << report_to_json(r, vertex_names(ctx.model)).dump() << '\n';
      ++total;
    }
  }
  std::cerr << corpus.size() << " models checked, " << total << " discrepancies\n";
  return total == 0 ? kOk : kCheckFailed;
}

int cmd_random(const std::string& kind, std::size_t rank, std::size_t vertices, std::uint64_t seed, std::uint64_t max_mult,
               const std::string& strategy, std::uint64_t retries) {
  auto m = random_model(kind, rank, vertices, seed, max_mult, strategy == "rejection" ? Strategy::rejection : Strategy::powers,
                        retries);
  emit(model_to_json(m));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compute, check and enumerate T-families of finite higher-rank models."};
  app.require_subcommand(1);

  std::string model, family, kfile, relative, mode = "t", dot, json_out, corpus, what;
  std::string kind, strategy = "powers";
  bool count_only = false;
  std::size_t rank = 0, vertices = 0;
  std::uint64_t seed = 0, max_mult = 2, retries = 10'000;
  EnumerationOptions eopts;

  auto* validate = app.add_subcommand("validate", "Load a model and check its commutation relations");
  validate->add_option("model", model, "Model JSON file")->required();

  auto* compute = app.add_subcommand("compute", "Print the J or I family of a model");
  compute->add_option("what", what, "jf or if")->required()->check(CLI::IsMember({"jf", "if"}));
  compute->add_option("model", model, "Model JSON file")->required();

  auto* fam = app.add_subcommand("family", "Family operations");
  fam->require_subcommand(1);
  auto* check = fam->add_subcommand("check", "Check a family against a model");
  check->add_option("model", model, "Model JSON file")->required();
  check->add_option("family", family, "Family JSON file")->required();
  check->add_option("--mode", mode, "t, nt, o or rel")->check(CLI::IsMember({"t", "nt", "o", "rel"}));
  check->add_option("--k", kfile, "Lower bound family for --mode rel");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the families of a model");
  enumerate->add_option("model", model, "Model JSON file")->required();
  enumerate->add_option("--mode", mode, "t, o or nt (brute force)")->check(CLI::IsMember({"t", "o", "nt"}));
  enumerate->add_option("--relative", relative, "Enumerate T-families containing this family");
  enumerate->add_flag("--count-only", count_only, "Print only the number of families");

  auto* lattice = app.add_subcommand("lattice", "Build the lattice of T-families");
  lattice->add_option("model", model, "Model JSON file")->required();
  lattice->add_option("--dot", dot, "Write Graphviz output here (- for stdout)");
  lattice->add_option("--json", json_out, "Write JSON output here (- for stdout)");

  auto* cross = app.add_subcommand("crosscheck", "Compare T/NT and O/NO verdicts and run the property suite");
  cross->add_option("model", model, "Model JSON file");
  cross->add_option("--corpus", corpus, "Corpus config JSON file");

  for (auto* sub : {enumerate, lattice, cross}) {
    sub->add_option("--budget", eopts.budget, "Maximum candidate sets examined")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", eopts.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  }

  auto* random = app.add_subcommand("random", "Print a random commuting model");
  random->add_option("--kind", kind, "kgraph or dynsys")->required()->check(CLI::IsMember({"kgraph", "dynsys"}));
  random->add_option("--rank", rank, "Number of directions")->required();
  random->add_option("--vertices", vertices, "Number of vertices or points")->required();
  random->add_option("--seed", seed, "Generator seed")->required();
  random->add_option("--max-mult", max_mult, "Largest matrix entry drawn");
  random->add_option("--strategy", strategy, "powers or rejection")->check(CLI::IsMember({"powers", "rejection"}));
  random->add_option("--retries", retries, "Attempts allowed in rejection mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  try {
    if (*validate) return cmd_validate(model);
    if (*compute) return cmd_compute(what, model);
    if (*check) return cmd_family_check(model, family, mode, kfile);
    if (*enumerate) return cmd_enumerate(model, mode, relative, count_only, eopts);
    if (*lattice) return cmd_lattice(model, dot, json_out, eopts);
    if (*cross) return cmd_crosscheck(model, corpus, eopts);
    if (*random) return cmd_random(kind, rank, vertices, seed, max_mult, strategy, retries);
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (visited " << e.visited() << ", found " << e.found() << ")\n";
    return kBudget;
  } catch (const invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInvalid;
}
