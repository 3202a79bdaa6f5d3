// Command-line entry point: one subcommand per stage, JSON on stdout,
// a one-line human summary on stderr.

#include "ttour/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace ttour;

namespace {

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::uint64_t seed_override(std::uint64_t fallback) {
  if (const char* env = std::getenv("TTOUR_SEED"); env != nullptr && *env != '\0') {
    return std::stoull(env);
  }
  return fallback;
}

VertexSet parse_targets(const Instance& inst, const std::vector<std::string>& names) {
  VertexSet out;
  for (const std::string& name : names) {
    const VertexId v = inst.vertex(name);
    if (out.contains(v)) {
      throw InvalidInstance("targets: duplicate vertex " + name);
    }
    out.insert(v);
  }
  return out;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const CertificateViolation& e) {
    std::cerr << "certificate violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"T-tour approximation: LP, tree decomposition, Best-of-Many-Christofides, lonely edge deletion"};
  app.require_subcommand(1);

  std::string file;
  int code = kExitOk;

  auto* lp = app.add_subcommand("lp", "Solve the LP relaxation exactly");
  std::string method = "rowgen";
  lp->add_option("instance", file, "Instance file")->required();
  lp->add_option("--method", method, "rowgen or enumerate")->check(CLI::IsMember({"rowgen", "enumerate"}));
  lp->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      LpOptions options;
      options.method = method == "enumerate" ? LpMethod::kFullEnumeration : LpMethod::kRowGeneration;
      const LpSolution solution = solve_lp(inst, options);
      emit(lp_report(inst, solution));
      std::cerr << "lp value " << to_string(solution.value) << '\n';
      return kExitOk;
    });
  });

  auto* dec = app.add_subcommand("decompose", "Write x* as a convex combination of spanning trees");
  dec->add_option("instance", file, "Instance file")->required();
  dec->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      const LpSolution solution = solve_lp(inst);
      const TreeCombination combination = decompose(inst, solution.x_star);
      emit(decompose_report(inst, solution, combination));
      std::cerr << combination.trees.size() << " trees\n";
      return kExitOk;
    });
  });

  auto* cuts = app.add_subcommand("cuts", "Narrow cuts, lonely edges and v^C");
  cuts->add_option("instance", file, "Instance file")->required();
  cuts->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      const PipelineResult pipeline = combined(inst);
      emit(cuts_report(inst, pipeline));
      std::cerr << pipeline.family.cuts.size() << " narrow cuts\n";
      return kExitOk;
    });
  });

  auto* tj = app.add_subcommand("tjoin", "Cheapest T'-join");
  std::vector<std::string> targets;
  std::string costs_file;
  tj->add_option("instance", file, "Instance file")->required();
  tj->add_option("--targets", targets, "Target vertices (default: T)")->delimiter(',');
  tj->add_option("--costs", costs_file, "JSON object edge-id -> cost overriding the instance costs")
    ->check(CLI::ExistingFile);
  tj->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      const VertexSet t = tj->count("--targets") > 0 ? parse_targets(inst, targets) : inst.terminals();
      EdgeVector costs = inst.costs();
      if (!costs_file.empty()) {
        std::ifstream in(costs_file);
        costs = edge_vector_from_json(inst, json::parse(in), costs);
      }
      const JoinResult join = min_join(inst, costs, t);
      emit(tjoin_report(inst, t, costs, join));
      std::cerr << "join cost " << to_string(join.cost) << '\n';
      return kExitOk;
    });
  });

  auto* solve = app.add_subcommand("solve", "Compute a T-tour");
  std::string algorithm = "combined";
  bool timing = false;
  solve->add_option("instance", file, "Instance file")->required();
  solve->add_option("--algorithm", algorithm, "bomc, delete or combined")
    ->check(CLI::IsMember({"bomc", "delete", "combined"}));
  solve->add_flag("--timing", timing, "Add wall-clock time to the report");
  solve->callback([&] {
    code = run_guarded([&] {
      const auto start = std::chrono::steady_clock::now();
      const Instance inst = read_instance(file);
      const PipelineResult pipeline = combined(inst);
      std::optional<Algorithm> choice;
      if (algorithm == "bomc") {
        choice = Algorithm::kBestOfManyChristofides;
      } else if (algorithm == "delete") {
        choice = Algorithm::kLonelyEdgeDeletion;
      }
      json doc = solve_report(inst, pipeline, choice);
      if (timing) {
        doc["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      emit(doc);
      std::cerr << algorithm << " tour cost " << doc["cost"].get<std::string>() << ", lp "
                << to_string(pipeline.lp.value) << '\n';
      return doc["guarantee_holds"].get<bool>() ? kExitOk : kExitViolation;
    });
  });

  auto* verify = app.add_subcommand("verify", "Check every certificate exactly");
  verify->add_option("instance", file, "Instance file")->required();
  verify->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      const PipelineResult pipeline = combined(inst);
      const CertificateReport report = certify(inst, pipeline);
      emit(verify_report(inst, pipeline, report));
      std::cerr << (report.all_hold ? "all certificates hold" : "CERTIFICATE FAILURE") << '\n';
      return report.all_hold ? kExitOk : kExitViolation;
    });
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum and enumerated LP");
  oracle->add_option("instance", file, "Instance file")->required();
  oracle->callback([&] {
    code = run_guarded([&] {
      const Instance inst = read_instance(file);
      const OracleResult result = run_oracle(inst);
      const PipelineResult pipeline = combined(inst);
      const json doc = oracle_report(inst, result, pipeline);
      emit(doc);
      std::cerr << "opt " << to_string(result.opt_tour_cost) << ", lp " << to_string(result.lp_value) << '\n';
      const bool ok = doc["lp_below_opt"].get<bool>() && doc["opt_below_combined"].get<bool>() &&
                      doc["combined_within_bound"].get<bool>() && doc["lp_values_match"].get<bool>();
      return ok ? kExitOk : kExitViolation;
    });
  });

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  GeneratorOptions gen_options;
  std::string output;
  gen->add_option("--seed", gen_options.seed, "Seed (TTOUR_SEED overrides)");
  gen->add_option("--n", gen_options.n, "Number of vertices");
  gen->add_option("--density", gen_options.density, "Probability of an extra edge per vertex pair");
  gen->add_option("--t-size", gen_options.t_size, "|T|, even");
  gen->add_option("--max-cost", gen_options.max_cost, "Costs are integers in [0, max-cost]");
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->callback([&] {
    code = run_guarded([&] {
      gen_options.seed = seed_override(gen_options.seed);
      const Instance inst = generate(gen_options);
      if (output.empty()) {
        emit(instance_to_json(inst));
      } else {
        write_instance(inst, output);
      }
      std::cerr << "instance " << instance_digest(inst) << '\n';
      return kExitOk;
    });
  });

  auto* batch = app.add_subcommand("batch", "Solve and verify a directory or a generated family");
  BatchOptions batch_options;
  std::string directory;
  std::string replay_dir = ".";
  batch->add_option("directory", directory, "Directory of instance files; omit to use the generator")
    ->check(CLI::ExistingDirectory);
  batch->add_option("--seed", batch_options.seed, "First seed (TTOUR_SEED overrides)");
  batch->add_option("--count", batch_options.count, "Number of generated instances");
  batch->add_option("--n-min", batch_options.n_min, "Smallest n");
  batch->add_option("--n-max", batch_options.n_max, "Largest n");
  batch->add_option("--density", batch_options.density, "Extra-edge probability");
  batch->add_option("--max-cost", batch_options.max_cost, "Largest integer cost");
  batch->add_option("--jobs", batch_options.jobs, "Worker threads");
  batch->add_option("--replay-dir", replay_dir, "Where a failing instance is written");
  batch->callback([&] {
    code = run_guarded([&] {
      if (!directory.empty()) {
        batch_options.directory = directory;
      }
      batch_options.seed = seed_override(batch_options.seed);
      batch_options.replay_dir = replay_dir;
      const BatchOutcome outcome = run_batch(batch_options);
      emit(outcome.report);
      std::cerr << outcome.report["processed"].get<std::size_t>() << " instances, "
                << outcome.report["violations"].get<std::size_t>() << " violations\n";
      return outcome.exit_code;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitValidation;
  }
  return code;
}
