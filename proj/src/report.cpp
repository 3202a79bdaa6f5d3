#include "ttour/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace ttour {

namespace {

json names_json(const Instance& inst, VertexSet set) { return vertex_names(inst, set); }

json ids_json(const Instance& inst, std::span<const EdgeIndex> edges) { return edge_ids(inst, edges); }

json inequality_json(const InequalityCheck& check) {
  return {{"lhs", to_json(check.lhs)}, {"rhs", to_json(check.rhs)}, {"holds", check.holds()}};
}

json cut_json(const Instance& inst, const Cut& cut) {
  return {{"side", names_json(inst, cut.side)}, {"edges", ids_json(inst, cut.edges)}};
}

json constraint_json(const Instance& inst, const LpConstraint& row) {
  json out;
  if (row.kind == LpConstraint::Kind::kEvenCut) {
    out["kind"] = "even_cut";
    out["side"] = names_json(inst, row.side);
  } else {
    out["kind"] = "partition";
    json blocks = json::array();
    for (const VertexSet block : row.partition.blocks) {
      blocks.push_back(names_json(inst, block));
    }
    out["blocks"] = blocks;
  }
  out["rhs"] = to_json(row.rhs);
  return out;
}

} // namespace

json ratio_json(const Rational& cost, const Rational& lp_value) {
  if (lp_value == 0) {
    return nullptr;
  }
  return to_json(cost / lp_value);
}

json lp_report(const Instance& inst, const LpSolution& lp) {
  json active = json::array();
  for (const LpConstraint& row : lp.active_constraints) {
    active.push_back(constraint_json(inst, row));
  }
  json dual = json::array();
  for (const auto& [row, multiplier] : lp.dual_certificate) {
    json entry = constraint_json(inst, row);
    entry["multiplier"] = to_json(multiplier);
    dual.push_back(std::move(entry));
  }
  const LpCertificateCheck check = verify_lp_certificate(inst, lp);
  return {{"digest", instance_digest(inst)},
          {"value", to_json(lp.value)},
          {"x", edge_vector_json(inst, lp.x_star)},
          {"active_constraints", active},
          {"dual_certificate", dual},
          {"rounds", lp.rounds},
          {"pool_size", lp.pool_size},
          {"certificate",
           {{"nonnegative", check.nonnegative},
            {"primal_feasible", check.primal_feasible},
            {"dual_feasible", check.dual_feasible},
            {"values_match", check.values_match},
            {"ok", check.ok()}}}};
}

json decompose_report(const Instance& inst, const LpSolution& lp, const TreeCombination& combination) {
  json trees = json::array();
  std::vector<TreeStructure> structures;
  for (const WeightedTree& tree : combination.trees) {
    TreeStructure structure = tree_structure(inst, tree.edges);
    trees.push_back({{"weight", to_json(tree.weight)},
                     {"edges", ids_json(inst, tree.edges)},
                     {"I", ids_json(inst, structure.t_join)},
                     {"J", ids_json(inst, structure.complement)}});
    structures.push_back(std::move(structure));
  }
  const std::vector<std::vector<EdgeIndex>> no_lonely(combination.trees.size());
  const AggregateVectors agg = aggregate_vectors(inst, combination, structures, no_lonely);
  return {{"digest", instance_digest(inst)},
          {"lp_value", to_json(lp.value)},
          {"x_star", edge_vector_json(inst, lp.x_star)},
          {"trees", trees},
          {"average", edge_vector_json(inst, tree_average(inst, combination))},
          {"I_p", edge_vector_json(inst, agg.i_p)},
          {"J_p", edge_vector_json(inst, agg.j_p)},
          {"strictly_dominated", combination.strictly_dominated},
          {"pricing_rounds", combination.pricing_rounds}};
}

json cuts_report(const Instance& inst, const PipelineResult& pipeline) {
  json cuts = json::array();
  for (std::size_t k = 0; k < pipeline.family.cuts.size(); ++k) {
    json entry = cut_json(inst, pipeline.family.cuts[k].cut);
    entry["load"] = to_json(pipeline.family.cuts[k].load);
    entry["v"] = edge_vector_json(inst, pipeline.lonely_vectors.at(k));
    cuts.push_back(std::move(entry));
  }
  json trees = json::array();
  for (std::size_t i = 0; i < pipeline.combination.trees.size(); ++i) {
    const LonelyClassification& cls = pipeline.lonely[i];
    json lonely = json::array();
    for (std::size_t j = 0; j < cls.lonely_cuts.size(); ++j) {
      lonely.push_back({{"cut", cls.lonely_cuts[j]}, {"edge", inst.edge(cls.lonely_edge_at[j]).id}});
    }
    trees.push_back({{"weight", to_json(pipeline.combination.trees[i].weight)},
                     {"edges", ids_json(inst, pipeline.combination.trees[i].edges)},
                     {"lonely_cuts", lonely},
                     {"L", ids_json(inst, cls.lonely_edges)}});
  }
  return {{"digest", instance_digest(inst)},
          {"lp_value", to_json(pipeline.lp.value)},
          {"narrow_cuts", cuts},
          {"trees", trees},
          {"L_p", edge_vector_json(inst, pipeline.aggregates.l_p)}};
}

json tjoin_report(const Instance& inst, VertexSet targets, const EdgeVector& costs, const JoinResult& join) {
  return {{"digest", instance_digest(inst)},
          {"targets", names_json(inst, targets)},
          {"costs", edge_vector_json(inst, costs)},
          {"edges", ids_json(inst, join.edges)},
          {"cost", to_json(join.cost)}};
}

json solve_report(const Instance& inst, const PipelineResult& pipeline, std::optional<Algorithm> algorithm) {
  const Tour& chosen = !algorithm                                          ? pipeline.best
                       : *algorithm == Algorithm::kBestOfManyChristofides ? pipeline.bomc.best
                                                                          : pipeline.deletion.best;
  json candidates = json::array();
  for (const BomcCandidate& c : pipeline.bomc.candidates) {
    candidates.push_back({{"algorithm", "bomc"},
                          {"tree", c.tree},
                          {"join", ids_json(inst, c.join.edges)},
                          {"cost", to_json(c.cost)}});
  }
  for (const DeletionCandidate& c : pipeline.deletion.candidates) {
    candidates.push_back({{"algorithm", "delete"},
                          {"tree", c.tree},
                          {"forest", ids_json(inst, c.forest)},
                          {"join", ids_json(inst, c.join.edges)},
                          {"join_modified_cost", to_json(c.join.cost)},
                          {"reconnection", ids_json(inst, c.reconnection)},
                          {"cost", to_json(c.cost)}});
  }
  const Rational bound = Rational(11, 7) * pipeline.lp.value;
  return {{"digest", instance_digest(inst)},
          {"algorithm", algorithm ? std::string(algorithm_name(*algorithm)) : std::string("combined")},
          {"chosen", {{"algorithm", algorithm_name(chosen.algorithm)}, {"tree", chosen.tree}}},
          {"cost", to_json(chosen.cost)},
          {"edges", multiset_json(inst, chosen.edges)},
          {"lp_value", to_json(pipeline.lp.value)},
          {"costs", {{"bomc", to_json(pipeline.bomc.best.cost)}, {"delete", to_json(pipeline.deletion.best.cost)}}},
          {"ratio", ratio_json(chosen.cost, pipeline.lp.value)},
          {"guarantee_holds", chosen.cost <= bound},
          {"candidates", candidates}};
}

json verify_report(const Instance& inst, const PipelineResult& pipeline, const CertificateReport& report) {
  json cuts = json::array();
  for (const CutCertificate& cut : report.cuts) {
    json entry = cut_json(inst, pipeline.family.cuts[cut.cut].cut);
    entry["load"] = to_json(cut.load);
    entry["lonely_weight"] = to_json(cut.lonely_weight);
    entry["crowded_weight"] = to_json(cut.crowded_weight);
    entry["lonely_share"] = cut.lonely_share();
    entry["crowded_share"] = cut.crowded_share();
    cuts.push_back(std::move(entry));
  }
  json trees = json::array();
  for (const TreeCertificate& t : report.trees) {
    json flow = json::array();
    for (const auto& [e, k, value] : t.hall.flow) {
      flow.push_back({{"edge", inst.edge(e).id}, {"cut", k}, {"flow", to_json(value)}});
    }
    json hall = {{"value", to_json(t.hall.value)}, {"demand", t.hall.demand}, {"flow", flow}, {"holds", t.hall.holds()}};
    hall["hall_condition"] = t.hall.hall_condition ? json(*t.hall.hall_condition) : json(nullptr);
    trees.push_back(
      {{"tree", t.tree},
       {"weight", to_json(t.weight)},
       {"edges", ids_json(inst, pipeline.combination.trees[t.tree].edges)},
       {"y", edge_vector_json(inst, t.y)},
       {"ybar", edge_vector_json(inst, t.ybar)},
       {"y_membership", {{"holds", !t.y_violation}, {"violated_cut", t.y_violation ? cut_json(inst, *t.y_violation) : json(nullptr)}}},
       {"ybar_membership",
        {{"holds", !t.ybar_violation}, {"violated_cut", t.ybar_violation ? cut_json(inst, *t.ybar_violation) : json(nullptr)}}},
       {"lonely_in_join", t.lonely_in_join},
       {"lonely_structure", t.lonely_structure},
       {"modified_cost_valid", t.modified_cost_valid},
       {"join_reconnection", inequality_json(t.join_reconnection)},
       {"bomc_join", inequality_json(t.bomc_join)},
       {"delete_join", inequality_json(t.delete_join)},
       {"lemma53", inequality_json(t.lemma53)},
       {"hall", hall},
       {"reconnection_cost", inequality_json(t.reconnection_cost)},
       {"per_tree", inequality_json(t.per_tree)},
       {"holds", t.holds()}});
  }
  const BoundReport& b = report.bounds;
  json bounds = {{"lp_value", to_json(b.lp_value)},
                 {"lemma31", to_json(b.lemma31)},
                 {"lemma43", to_json(b.lemma43)},
                 {"lemma43_eight_fifths", to_json(b.lemma43_eight_fifths)},
                 {"lemma51", to_json(b.lemma51)},
                 {"combination", to_json(b.combination)},
                 {"theorem_bound", to_json(b.theorem_bound)},
                 {"algorithm1_cost", to_json(b.algorithm1_cost)},
                 {"algorithm2_cost", to_json(b.algorithm2_cost)},
                 {"best_cost", to_json(b.best_cost)},
                 {"lambdas",
                  {{"l1", to_json(b.lambdas.l1)},
                   {"l2", to_json(b.lambdas.l2)},
                   {"l3", to_json(b.lambdas.l3)},
                   {"alpha", to_json(b.lambdas.alpha)}}},
                 {"algorithm1_within_lemma31", b.algorithm1_within_lemma31()},
                 {"algorithm1_within_lemma43", b.algorithm1_within_lemma43()},
                 {"algorithm2_within_lemma51", b.algorithm2_within_lemma51()},
                 {"best_within_combination", b.best_within_combination()},
                 {"combination_within_theorem", b.combination_within_theorem()},
                 {"holds", b.holds()}};
  const MaxFunctionCheck& g = report.max_function;
  return {{"digest", instance_digest(inst)},
          {"lp_certificate",
           {{"nonnegative", report.lp.nonnegative},
            {"primal_feasible", report.lp.primal_feasible},
            {"dual_feasible", report.lp.dual_feasible},
            {"values_match", report.lp.values_match},
            {"ok", report.lp.ok()}}},
          {"decomposition_valid", report.decomposition_valid},
          {"narrow_cuts", cuts},
          {"trees", trees},
          {"lonely_identity", report.lonely_identity},
          {"join_split", report.join_split},
          {"tours_valid", report.tours_valid},
          {"bounds", bounds},
          {"max_function",
           {{"argmax", to_json(g.argmax)},
            {"value", to_json(g.value)},
            {"grid_max", to_json(g.grid_max)},
            {"grid_argmax", to_json(g.grid_argmax)},
            {"grid_points", g.grid_points},
            {"holds", g.holds()}}},
          {"ratios",
           {{"lonely", report.lonely_ratio ? to_json(*report.lonely_ratio) : json(nullptr)},
            {"join", report.join_ratio ? to_json(*report.join_ratio) : json(nullptr)}}},
          {"all_hold", report.all_hold}};
}

json oracle_report(const Instance& inst, const OracleResult& oracle, const PipelineResult& pipeline) {
  const Rational& combined_cost = pipeline.best.cost;
  return {{"digest", instance_digest(inst)},
          {"opt_tour", multiset_json(inst, oracle.opt_tour)},
          {"opt_tour_cost", to_json(oracle.opt_tour_cost)},
          {"lp_value", to_json(oracle.lp_value)},
          {"lp_value_row_generation", to_json(pipeline.lp.value)},
          {"combined_cost", to_json(combined_cost)},
          {"gap", ratio_json(combined_cost, oracle.opt_tour_cost)},
          {"lp_below_opt", oracle.lp_value <= oracle.opt_tour_cost},
          {"opt_below_combined", oracle.opt_tour_cost <= combined_cost},
          {"combined_within_bound", combined_cost <= Rational(11, 7) * oracle.opt_tour_cost},
          {"lp_values_match", oracle.lp_value == pipeline.lp.value}};
}

GeneratorOptions batch_instance_options(const BatchOptions& options, std::size_t index) {
  GeneratorOptions out;
  out.seed = options.seed + index;
  std::mt19937_64 rng(out.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t span = options.n_max - options.n_min + 1;
  out.n = options.n_min + static_cast<std::size_t>(rng() % span);
  out.t_size = 2 * static_cast<std::size_t>(rng() % (out.n / 2 + 1));
  out.density = options.density;
  out.max_cost = options.max_cost;
  return out;
}

namespace {

struct InstanceOutcome {
  std::string name;
  std::optional<Instance> instance;
  int code = kExitOk;
  std::string error;
  Rational lp_value;
  Rational cost;
  std::optional<Rational> opt_cost;
  bool oracle_ok = true;
};

InstanceOutcome run_one(std::string name, const std::function<Instance()>& load) {
  InstanceOutcome out;
  out.name = std::move(name);
  try {
    out.instance.emplace(load());
  } catch (const std::exception& e) {
    out.code = kExitValidation;
    out.error = e.what();
    return out;
  }
  const Instance& inst = *out.instance;
  try {
    const PipelineResult pipeline = combined(inst);
    const CertificateReport report = certify(inst, pipeline);
    out.lp_value = pipeline.lp.value;
    out.cost = pipeline.best.cost;
    if (!report.all_hold) {
      out.code = kExitViolation;
      out.error = "certificate failed";
      return out;
    }
    if (inst.num_edges() <= kMaxOracleTourEdges && inst.num_vertices() <= kMaxEnumeratedLpVertices) {
      const OracleResult oracle = run_oracle(inst);
      out.opt_cost = oracle.opt_tour_cost;
      out.oracle_ok = oracle.lp_value == pipeline.lp.value && oracle.lp_value <= oracle.opt_tour_cost &&
                      oracle.opt_tour_cost <= out.cost && out.cost <= Rational(11, 7) * oracle.opt_tour_cost;
      if (!out.oracle_ok) {
        out.code = kExitViolation;
        out.error = "oracle sandwich failed";
      }
    }
  } catch (const CertificateViolation& e) {
    out.code = kExitViolation;
    out.error = e.what();
  } catch (const SizeLimitExceeded& e) {
    out.code = kExitSizeLimit;
    out.error = e.what();
  } catch (const std::invalid_argument& e) {
    out.code = kExitValidation;
    out.error = e.what();
  } catch (const std::logic_error& e) {
    out.code = kExitViolation;
    out.error = e.what();
  }
  return out;
}

} // namespace

BatchOutcome run_batch(const BatchOptions& options) {
  std::vector<std::string> names;
  std::vector<std::function<Instance()>> loaders;
  json source;
  if (options.directory) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*options.directory)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      names.push_back(file.filename().string());
      loaders.emplace_back([file] { return read_instance(file); });
    }
    source = {{"directory", options.directory->string()}};
  } else {
    if (options.n_min < 2 || options.n_min > options.n_max) {
      throw std::invalid_argument("batch: need 2 <= n-min <= n-max");
    }
    for (std::size_t i = 0; i < options.count; ++i) {
      const GeneratorOptions gen = batch_instance_options(options, i);
      names.push_back("seed-" + std::to_string(gen.seed));
      loaders.emplace_back([gen] { return generate(gen); });
    }
    source = {{"generator",
               {{"seed", options.seed},
                {"count", options.count},
                {"n_min", options.n_min},
                {"n_max", options.n_max},
                {"density", options.density},
                {"max_cost", options.max_cost}}}};
  }

  const std::size_t total = names.size();
  std::vector<std::optional<InstanceOutcome>> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{total};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || i > first_failure.load()) {
        return;
      }
      outcomes[i] = run_one(names[i], loaders[i]);
      if (outcomes[i]->code != kExitOk) {
        std::size_t seen = first_failure.load();
        while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) {
    threads.emplace_back(worker);
  }
  worker();
  for (std::thread& t : threads) {
    t.join();
  }

  BatchOutcome out;
  std::size_t processed = 0;
  std::size_t compared = 0;
  std::optional<Rational> worst_ratio;
  std::string worst_instance;
  std::optional<Rational> worst_gap;
  const std::size_t stop = first_failure.load();
  for (std::size_t i = 0; i < std::min(stop, total); ++i) {
    const InstanceOutcome& o = *outcomes[i];
    ++processed;
    if (o.lp_value != 0) {
      const Rational ratio = o.cost / o.lp_value;
      if (!worst_ratio || ratio > *worst_ratio) {
        worst_ratio = ratio;
        worst_instance = o.name;
      }
    }
    if (o.opt_cost) {
      ++compared;
      if (*o.opt_cost != 0) {
        const Rational gap = o.cost / *o.opt_cost;
        if (!worst_gap || gap > *worst_gap) {
          worst_gap = gap;
        }
      }
    }
  }
  out.report = {{"source", source},
                {"instances", total},
                {"processed", processed},
                {"violations", stop < total ? 1 : 0},
                {"worst_ratio", worst_ratio ? to_json(*worst_ratio) : json(nullptr)},
                {"worst_instance", worst_ratio ? json(worst_instance) : json(nullptr)},
                {"guarantee_holds", !worst_ratio || *worst_ratio <= Rational(11, 7)},
                {"oracle", {{"compared", compared}, {"worst_gap", worst_gap ? to_json(*worst_gap) : json(nullptr)}}}};
  if (stop < total) {
    const InstanceOutcome& failed = *outcomes[stop];
    json failure = {{"instance", failed.name}, {"error", failed.error}, {"exit_code", failed.code}};
    if (failed.instance) {
      const std::filesystem::path replay = options.replay_dir / ("replay-" + failed.name +
                                                                 (failed.name.ends_with(".json") ? "" : ".json"));
      std::filesystem::create_directories(options.replay_dir);
      write_instance(*failed.instance, replay);
      failure["replay"] = replay.string();
    }
    out.report["failure"] = failure;
    out.exit_code = failed.code;
  }
  return out;
}

} // namespace ttour
