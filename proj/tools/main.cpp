#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chgraph/audit_batch.hpp"
#include "chgraph/conjectures.hpp"
#include "chgraph/constructions.hpp"
#include "chgraph/counting.hpp"
#include "chgraph/edgelist.hpp"
#include "chgraph/json_io.hpp"
#include "chgraph/rng.hpp"
#include "chgraph/transparency.hpp"
#include "chgraph/version.hpp"

namespace {

using chgraph::Digraph;
using nlohmann::json;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string format = "edge-list";
  int threads = 0;  // 0 = library default
  bool force = false;
  bool timestamp = false;
  std::string out_path;  // empty = stdout
};

// Reports are reproducible byte for byte unless --timestamp is passed; the
// wall-clock time then occupies exactly one header field.
void attach_header(json &obj, const json &config, const GlobalOpts &global) {
  obj["version"] = chgraph::kVersion;
  obj["config"] = config;
  if (global.timestamp) {
    const auto now = std::chrono::system_clock::now();
    obj["generated_at"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            now.time_since_epoch())
            .count();
  }
}

void write_output(const GlobalOpts &global, const std::string &text) {
  if (global.out_path.empty() || global.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(global.out_path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot open output file: " + global.out_path);
  file << text;
}

Digraph read_digraph(const std::string &path) {
  if (path == "-") return chgraph::parse_edge_list(std::cin);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open input file: " + path);
  return chgraph::parse_edge_list(file);
}

struct SpecOpts {
  std::string family;
  int n = 0;
  int r = 1;
  std::vector<int> surplus;
  bool oriented = false;
};

void add_spec_options(CLI::App *cmd, SpecOpts &opts, bool require_family) {
  auto *fam = cmd->add_option("--family", opts.family,
                              "circulant | uniform_ge | nonuniform_regular | "
                              "nonuniform_ge | labeling | forward_greedy | "
                              "random_oriented");
  if (require_family) fam->required();
  cmd->add_option("--n", opts.n, "vertex count")->required();
  cmd->add_option("--r", opts.r, "out-degree parameter");
  cmd->add_option("--surplus", opts.surplus,
                  "per-vertex extra out-degree (uniform_ge)");
  cmd->add_flag("--oriented", opts.oriented,
                "forbid digons (forward_greedy backward arcs)");
}

chgraph::ConstructionSpec build_spec(const SpecOpts &opts,
                                     const GlobalOpts &global) {
  chgraph::ConstructionSpec spec;
  spec.family = chgraph::family_from_name(opts.family);
  spec.n = opts.n;
  spec.r = opts.r;
  spec.seed = global.seed;
  spec.surplus = opts.surplus;
  spec.oriented = opts.oriented;
  return spec;
}

// Thread count is deliberately not part of the echo: results are identical
// for every worker count, so the config alone determines the output.
json config_base(const std::string &subcommand, const GlobalOpts &global) {
  json config;
  config["subcommand"] = subcommand;
  config["seed"] = global.seed;
  config["format"] = global.format;
  config["force"] = global.force;
  if (!global.out_path.empty()) config["out"] = global.out_path;
  return config;
}

json girth_fields(const Digraph &g) {
  json obj;
  const auto t = chgraph::compute_transparency(g);
  const auto gr = chgraph::girth(t);
  obj["girth"] = gr ? json(gr->length) : json(nullptr);
  obj["girth_pair"] = gr ? json::array({gr->i, gr->j}) : json(nullptr);
  const auto cert = chgraph::shortest_cycle_certificate(g);
  obj["certificate"] = cert ? chgraph::to_json(*cert) : json(nullptr);
  return obj;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "Digraph toolkit: family generators, all-pairs distance "
      "(transparency) matrices, girth certificates, contraction audits, "
      "Caccetta-Haggkvist and Seymour second-neighborhood checks, and exact "
      "cycle-count audits."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Caps: exhaustive sweeps default to n <= 5 (CHGRAPH_SWEEP_CAP), cycle "
      "enumeration to n <= 12 sparse / n <= 9 complete (CHGRAPH_ENUM_CAP, "
      "CHGRAPH_ENUM_CAP_COMPLETE). --force bypasses all caps.");

  GlobalOpts global;
  app.add_option("--seed", global.seed, "64-bit PRNG seed");
  app.add_option("--format", global.format, "edge-list | dot | json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  app.add_option("--threads", global.threads, "worker threads (0 = default)");
  app.add_flag("--force", global.force, "bypass enumeration caps");
  app.add_flag("--timestamp", global.timestamp,
               "add a generated_at header field (off keeps reports "
               "byte-reproducible)");
  app.add_option("--out", global.out_path, "output file (default stdout)");

  // generate
  auto *gen_cmd = app.add_subcommand("generate", "emit one family instance");
  SpecOpts gen_opts;
  add_spec_options(gen_cmd, gen_opts, true);

  // analyze
  auto *analyze_cmd =
      app.add_subcommand("analyze", "full JSON report for an edge list");
  std::string analyze_input;
  bool analyze_matrix = false;
  analyze_cmd->add_option("input", analyze_input, "edge-list file or -")
      ->required();
  analyze_cmd->add_flag("--matrix", analyze_matrix,
                        "include the transparency matrix");

  // girth
  auto *girth_cmd =
      app.add_subcommand("girth", "shortest directed circuit of an edge list");
  std::string girth_input;
  girth_cmd->add_option("input", girth_input, "edge-list file or -")
      ->required();

  // contract
  auto *contract_cmd =
      app.add_subcommand("contract", "contract one arc of an edge list");
  std::string contract_input;
  int contract_tail = 0, contract_head = 0;
  contract_cmd->add_option("input", contract_input, "edge-list file or -")
      ->required();
  contract_cmd->add_option("--tail", contract_tail, "arc tail")->required();
  contract_cmd->add_option("--head", contract_head, "arc head")->required();

  // verify-ch
  auto *ch_cmd = app.add_subcommand(
      "verify-ch", "check girth <= ceil(n/r) on a file or a generated family");
  std::string ch_input;
  SpecOpts ch_spec;
  int ch_r = 0;
  ch_cmd->add_option("input", ch_input, "edge-list file or - (omit to generate)");
  add_spec_options(ch_cmd, ch_spec, false);
  ch_cmd->get_option("--n")->required(false);
  ch_cmd->add_option("--ch-r", ch_r,
                     "explicit r <= min out-degree (weaker bound)");

  // verify-seymour
  auto *sey_cmd = app.add_subcommand(
      "verify-seymour", "second-neighborhood check on an oriented edge list");
  std::string sey_input;
  sey_cmd->add_option("input", sey_input, "edge-list file or -")->required();

  // sweep
  auto *sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive check over all labeled oriented digraphs");
  int sweep_n = 0;
  std::string sweep_predicate = "seymour";
  sweep_cmd->add_option("--n", sweep_n, "vertex count")->required();
  sweep_cmd->add_option("--predicate", sweep_predicate, "ch | seymour")
      ->check(CLI::IsMember({"ch", "seymour"}));

  // search
  auto *search_cmd = app.add_subcommand(
      "search", "seeded counterexample search over a family");
  SpecOpts search_spec;
  std::uint64_t search_trials = 1000;
  std::string search_predicate = "ch";
  add_spec_options(search_cmd, search_spec, true);
  search_cmd->add_option("--trials", search_trials, "instance count");
  search_cmd->add_option("--predicate", search_predicate, "ch | seymour")
      ->check(CLI::IsMember({"ch", "seymour"}));

  // count-cycles
  auto *count_cmd = app.add_subcommand(
      "count-cycles", "enumerate directed circuits of an instance");
  std::string count_input;
  int count_complete = 0;
  int count_max_len = 0;
  bool count_list = false;
  count_cmd->add_option("input", count_input, "edge-list file or -");
  count_cmd->add_option("--complete", count_complete,
                        "use the complete digraph on this many vertices");
  count_cmd->add_option("--max-len", count_max_len,
                        "longest circuit length (default n)");
  count_cmd->add_flag("--list", count_list, "include every certificate");

  // audit
  auto *audit_cmd = app.add_subcommand(
      "audit", "closed-form rules vs brute-force oracles (JSON lines)");
  audit_cmd->require_subcommand(1);
  auto *audit_contraction_cmd = audit_cmd->add_subcommand(
      "contraction", "incremental matrix update vs recomputation");
  std::uint64_t audit_trials = 1000;
  int audit_n = 8;
  audit_contraction_cmd->add_option("--trials", audit_trials, "case count");
  audit_contraction_cmd->add_option("--n", audit_n, "max vertex count");
  auto *audit_formulas_cmd = audit_cmd->add_subcommand(
      "formulas", "cycle-count formulas vs enumeration");
  int audit_n_max = 7, audit_j_max = 7;
  audit_formulas_cmd->add_option("--n-max", audit_n_max, "max vertex count");
  audit_formulas_cmd->add_option("--j-max", audit_j_max, "max cycle length");
  auto *audit_labeling_cmd = audit_cmd->add_subcommand(
      "labeling-claims", "labeling-procedure claims across seeds");
  int audit_lab_n = 12, audit_lab_r = 3;
  std::uint64_t audit_lab_seeds = 100;
  audit_labeling_cmd->add_option("--n", audit_lab_n, "vertex count");
  audit_labeling_cmd->add_option("--r", audit_lab_r, "out-degree");
  audit_labeling_cmd->add_option("--seeds", audit_lab_seeds, "seed count");

  CLI11_PARSE(app, argc, argv);

  if (global.threads > 0) omp_set_num_threads(global.threads);

  try {
    if (*gen_cmd) {
      const auto spec = build_spec(gen_opts, global);
      const Digraph g = chgraph::instantiate(spec);
      if (global.format == "dot") {
        write_output(global, chgraph::to_dot(g));
      } else if (global.format == "json") {
        json obj;
        attach_header(obj, config_base("generate", global), global);
        obj["spec"] = json::parse(spec.to_json());
        obj["edge_list"] = chgraph::serialize_edge_list(g);
        write_output(global, obj.dump() + "\n");
      } else {
        write_output(global,
                     "# " + spec.to_json() + "\n" + chgraph::serialize_edge_list(g));
      }
    } else if (*analyze_cmd) {
      const Digraph g = read_digraph(analyze_input);
      json config = config_base("analyze", global);
      config["input"] = analyze_input;
      config["matrix"] = analyze_matrix;
      json obj;
      attach_header(obj, config, global);
      obj["n"] = g.n();
      obj["m"] = g.arc_count();
      obj["min_out_degree"] = g.min_out_degree();
      obj["max_out_degree"] = g.max_out_degree();
      obj.update(girth_fields(g));
      obj["difference_profile"] = chgraph::to_json(chgraph::difference_profile(g));
      const auto t = chgraph::compute_transparency(g);
      if (g.min_out_degree() >= 1) {
        const auto report = chgraph::check_ch(g);
        json ch;
        ch["r"] = report.r;
        ch["bound"] = report.bound;
        ch["verdict"] = report.holds ? "holds" : "violated";
        obj["ch"] = ch;
      } else {
        obj["ch"] = nullptr;
      }
      json seymour = json::array();
      for (int v = 0; v < g.n(); ++v) {
        const auto c = chgraph::neighborhood_counts(t, v);
        seymour.push_back(json::array({c.first, c.second, c.second_or_more}));
      }
      obj["seymour_counts"] = seymour;
      if (analyze_matrix) obj["matrix"] = chgraph::to_json(t);
      write_output(global, obj.dump() + "\n");
    } else if (*girth_cmd) {
      const Digraph g = read_digraph(girth_input);
      json config = config_base("girth", global);
      config["input"] = girth_input;
      json obj;
      attach_header(obj, config, global);
      obj["n"] = g.n();
      obj.update(girth_fields(g));
      write_output(global, obj.dump() + "\n");
    } else if (*contract_cmd) {
      const Digraph g = read_digraph(contract_input);
      const auto result =
          chgraph::contract_graph(g, chgraph::Arc{contract_tail, contract_head});
      if (global.format == "json") {
        json config = config_base("contract", global);
        config["input"] = contract_input;
        config["tail"] = contract_tail;
        config["head"] = contract_head;
        json obj;
        attach_header(obj, config, global);
        obj["n"] = result.graph.n();
        obj["edge_list"] = chgraph::serialize_edge_list(result.graph);
        obj["old_to_new"] = result.old_to_new;
        write_output(global, obj.dump() + "\n");
      } else {
        std::ostringstream text;
        text << "# contracted " << contract_tail << " -> " << contract_head
             << "; old_to_new";
        for (int v : result.old_to_new) text << ' ' << v;
        text << '\n' << chgraph::serialize_edge_list(result.graph);
        write_output(global, text.str());
      }
    } else if (*ch_cmd) {
      Digraph g = [&]() {
        if (!ch_input.empty()) return read_digraph(ch_input);
        if (ch_spec.family.empty() || ch_spec.n == 0)
          throw std::invalid_argument(
              "verify-ch needs an input file or --family/--n/--r");
        return chgraph::instantiate(build_spec(ch_spec, global));
      }();
      const auto report = chgraph::check_ch(
          g, ch_r > 0 ? std::optional<int>(ch_r) : std::nullopt);
      json config = config_base("verify-ch", global);
      if (!ch_input.empty()) config["input"] = ch_input;
      json obj = chgraph::to_json(report);
      attach_header(obj, config, global);
      write_output(global, obj.dump() + "\n");
    } else if (*sey_cmd) {
      const Digraph g = read_digraph(sey_input);
      const auto report = chgraph::check_seymour(g);
      json config = config_base("verify-seymour", global);
      config["input"] = sey_input;
      json obj = chgraph::to_json(report);
      attach_header(obj, config, global);
      write_output(global, obj.dump() + "\n");
    } else if (*sweep_cmd) {
      const auto predicate = sweep_predicate == "ch"
                                 ? chgraph::Predicate::CH
                                 : chgraph::Predicate::Seymour;
      chgraph::SweepOptions opt;
      opt.force = global.force;
      const auto summary = chgraph::exhaustive_sweep(sweep_n, predicate, opt);
      json config = config_base("sweep", global);
      config["n"] = sweep_n;
      config["predicate"] = sweep_predicate;
      json obj = chgraph::to_json(summary);
      attach_header(obj, config, global);
      write_output(global, obj.dump() + "\n");
    } else if (*search_cmd) {
      const auto spec = build_spec(search_spec, global);
      const auto predicate = search_predicate == "ch"
                                 ? chgraph::Predicate::CH
                                 : chgraph::Predicate::Seymour;
      const auto violations = chgraph::search_counterexamples(
          spec, predicate, search_trials, global.seed);
      json config = config_base("search", global);
      config["spec"] = json::parse(spec.to_json());
      config["trials"] = search_trials;
      config["predicate"] = search_predicate;
      std::ostringstream lines;
      json header;
      attach_header(header, config, global);
      lines << header.dump() << '\n';
      for (const auto &violation : violations)
        lines << chgraph::to_json(violation).dump() << '\n';
      json summary;
      summary["summary"] = true;
      summary["trials"] = search_trials;
      summary["violations"] = violations.size();
      lines << summary.dump() << '\n';
      write_output(global, lines.str());
    } else if (*count_cmd) {
      if (count_input.empty() == (count_complete == 0))
        throw std::invalid_argument(
            "count-cycles needs exactly one of: input file, --complete N");
      const Digraph g = count_complete > 0
                            ? chgraph::complete_digraph(count_complete)
                            : read_digraph(count_input);
      const int max_len = count_max_len > 0 ? count_max_len : g.n();
      chgraph::EnumerationOptions opt;
      opt.force = global.force;
      const auto cycles = chgraph::enumerate_directed_cycles(g, max_len, opt);
      json config = config_base("count-cycles", global);
      if (!count_input.empty()) config["input"] = count_input;
      if (count_complete > 0) config["complete"] = count_complete;
      config["max_len"] = max_len;
      json obj;
      attach_header(obj, config, global);
      std::vector<std::int64_t> by_length(
          static_cast<std::size_t>(max_len) + 1, 0);
      for (const auto &cert : cycles)
        ++by_length[static_cast<std::size_t>(cert.length())];
      json counts = json::array();
      for (int j = 2; j <= max_len; ++j)
        if (by_length[static_cast<std::size_t>(j)] != 0)
          counts.push_back(
              json::array({j, by_length[static_cast<std::size_t>(j)]}));
      obj["counts_by_length"] = counts;
      obj["total"] = cycles.size();
      if (count_list) {
        json list = json::array();
        for (const auto &cert : cycles) list.push_back(chgraph::to_json(cert));
        obj["cycles"] = list;
      }
      write_output(global, obj.dump() + "\n");
    } else if (*audit_contraction_cmd) {
      const auto summary =
          chgraph::audit_contraction_batch(audit_n, audit_trials, global.seed);
      json config = config_base("audit contraction", global);
      config["trials"] = audit_trials;
      config["n"] = audit_n;
      std::ostringstream lines;
      json header;
      attach_header(header, config, global);
      lines << header.dump() << '\n';
      for (const auto &report : summary.mismatches)
        lines << chgraph::to_json(report).dump() << '\n';
      json tail;
      tail["summary"] = true;
      tail["cases"] = summary.cases;
      tail["equal"] = summary.equal;
      tail["mismatch"] = summary.mismatch;
      tail["agreement_rate"] =
          summary.cases == 0
              ? 1.0
              : static_cast<double>(summary.equal) /
                    static_cast<double>(summary.cases);
      lines << tail.dump() << '\n';
      write_output(global, lines.str());
    } else if (*audit_formulas_cmd) {
      chgraph::EnumerationOptions opt;
      opt.force = global.force;
      const auto ledger =
          chgraph::audit_counting_formulas(audit_n_max, audit_j_max, opt);
      json config = config_base("audit formulas", global);
      config["n_max"] = audit_n_max;
      config["j_max"] = audit_j_max;
      std::ostringstream lines;
      json header;
      attach_header(header, config, global);
      lines << header.dump() << '\n';
      std::uint64_t equal = 0;
      for (const auto &audit : ledger) {
        if (audit.equal) ++equal;
        lines << chgraph::to_json(audit).dump() << '\n';
      }
      json tail;
      tail["summary"] = true;
      tail["entries"] = ledger.size();
      tail["equal"] = equal;
      tail["mismatch"] = ledger.size() - equal;
      lines << tail.dump() << '\n';
      write_output(global, lines.str());
    } else if (*audit_labeling_cmd) {
      json config = config_base("audit labeling-claims", global);
      config["n"] = audit_lab_n;
      config["r"] = audit_lab_r;
      config["seeds"] = audit_lab_seeds;
      std::ostringstream lines;
      json header;
      attach_header(header, config, global);
      lines << header.dump() << '\n';
      std::uint64_t path_held = 0, arcs_held = 0, targets_held = 0,
                    reach_held = 0;
      for (std::uint64_t k = 0; k < audit_lab_seeds; ++k) {
        const std::uint64_t seed = chgraph::SplitMix64::derive(global.seed, k);
        const auto [g, trace] =
            chgraph::labeling_generate(audit_lab_n, audit_lab_r, seed);
        const auto claims =
            chgraph::evaluate_labeling_trace(g, trace, audit_lab_r);
        path_held += claims.path_bound_holds;
        arcs_held += claims.forced_arcs_bound_holds;
        targets_held += claims.forced_targets_bound_holds;
        reach_held += claims.reachability_holds;
        json line = chgraph::to_json(claims);
        line["seed"] = seed;
        lines << line.dump() << '\n';
      }
      json tail;
      tail["summary"] = true;
      tail["seeds"] = audit_lab_seeds;
      tail["path_bound_held"] = path_held;
      tail["forced_arcs_bound_held"] = arcs_held;
      tail["forced_targets_bound_held"] = targets_held;
      tail["reachability_held"] = reach_held;
      lines << tail.dump() << '\n';
      write_output(global, lines.str());
    }
  } catch (const chgraph::ParseError &e) {
    std::cerr << "parse error at " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
