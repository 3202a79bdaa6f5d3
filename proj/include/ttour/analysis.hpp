#pragma once

#include "ttour/algorithms.hpp"
#include "ttour/cuts.hpp"
#include "ttour/decompose.hpp"
#include "ttour/graph.hpp"
#include "ttour/lp.hpp"

#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace ttour {

/// Weights of the three bounds and the α used in y^S.
struct Lambdas {
  Rational l1{2, 21};
  Rational l2{2, 3};
  Rational l3{5, 21};
  Rational alpha{1, 14};
};

/// The α of the 8/5 analysis, reported alongside for comparison.
inline const Rational kEightFifthsAlpha{1, 8};

/// y^S = ½x* + α·χ^{I_S} + Σ_{C∈𝒩∖𝓛_S} max{1 − x*(C)/2 − α, 0}·v^C.
EdgeVector y_vector(const Instance& inst, const EdgeVector& x_star, std::span<const EdgeIndex> tree,
                    const NarrowCutFamily& family, const std::vector<EdgeVector>& v_c, const Rational& alpha);

/// ȳ^S = (2/5)x* + (1/5)χ^S + (1/5)χ^{I_S∖L_S} + Σ_{C∈𝓛_S} (2/5)(2 − x*(C))·χ^{S∩C}.
EdgeVector ybar_vector(const Instance& inst, const EdgeVector& x_star, std::span<const EdgeIndex> tree,
                       const NarrowCutFamily& family);

/// y^S for every tree. Throws CertificateViolation if some y^S is outside
/// the (odd(S) △ T)-join polyhedron.
std::vector<EdgeVector> build_y(const Instance& inst, const EdgeVector& x_star, const TreeCombination& combination,
                                const NarrowCutFamily& family, const std::vector<EdgeVector>& v_c,
                                const Rational& alpha);

/// ȳ^S for every tree. Throws CertificateViolation if some ȳ^S is outside
/// the (odd(F_S) △ T)-join polyhedron.
std::vector<EdgeVector> build_ybar(const Instance& inst, const EdgeVector& x_star,
                                   const TreeCombination& combination, const NarrowCutFamily& family);

struct InequalityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

/// c^S(x*) − c(x*) ≤ 2·Σ_{C∈𝓛_S} (x*(C) − 1)·c(S∩C).
InequalityCheck verify_reconnection_bound(const Instance& inst, const EdgeVector& x_star,
                                          std::span<const EdgeIndex> tree, const NarrowCutFamily& family,
                                          const LonelyClassification& lonely, const EdgeVector& modified);

struct HallWitness {
  /// (edge, narrow-cut index, flow) for every arc carrying positive flow.
  std::vector<std::tuple<EdgeIndex, std::size_t, Rational>> flow;
  Rational value;
  std::size_t demand = 0;  // |𝓛_S|
  /// Subset enumeration ran (|𝓛_S| ≤ 12) and every 𝓛' ⊆ 𝓛_S passed.
  std::optional<bool> hall_condition;
  bool holds() const { return value == demand && hall_condition.value_or(true); }
};

/// Exact max-flow source → e (cap x*_e) → C ∋ e (C ∈ 𝓛_S) → sink (cap 1),
/// plus x*(∪𝓛') ≥ |𝓛'| for every subfamily when |𝓛_S| ≤ 12.
HallWitness verify_hall(const Instance& inst, const EdgeVector& x_star, const NarrowCutFamily& family,
                        const LonelyClassification& lonely);

struct BoundReport {
  Rational lp_value;      // c(x*)
  Rational lemma31;       // c(x*) + c(J_p)
  Rational lemma43;       // at Lambdas::alpha
  Rational lemma43_eight_fifths;  // at α = 1/8
  Rational lemma51;
  Rational combination;   // λ₁·simple + λ₂·BOMC + λ₃·deletion bound
  Rational theorem_bound; // (11/7)·c(x*)
  Rational algorithm1_cost;
  Rational algorithm2_cost;
  Rational best_cost;
  Lambdas lambdas;
  std::vector<InequalityCheck> lemma53;  // per tree

  bool algorithm1_within_lemma31() const { return algorithm1_cost <= lemma31; }
  bool algorithm1_within_lemma43() const { return algorithm1_cost <= lemma43; }
  bool algorithm2_within_lemma51() const { return algorithm2_cost <= lemma51; }
  bool best_within_combination() const { return best_cost <= combination; }
  bool combination_within_theorem() const { return combination <= theorem_bound; }
  bool lambdas_valid() const;
  bool holds() const;
};

/// The simple, BOMC and deletion bounds and their λ-combination, from the pipeline's x*, trees and
/// narrow cuts; I_p, J_p, L_p and v^C are recomputed here.
BoundReport evaluate_bounds(const Instance& inst, const PipelineResult& pipeline, const Lambdas& lambdas = {});

/// g(x) = ((x − 1)/(2 − x))·max{13 − 7x, 0} + 2x − 4 for 1 ≤ x < 2.
Rational g_function(const Rational& x);

struct MaxFunctionCheck {
  Rational argmax{5, 3};
  Rational value;           // g(5/3)
  Rational grid_max;
  Rational grid_argmax;
  std::size_t grid_points = 0;
  bool holds() const { return value == 2 && grid_max <= 2; }
};

/// g(5/3) exactly and max g over {1, 1.001, ..., 1.999}.
MaxFunctionCheck max_function_check();

struct CutCertificate {
  std::size_t cut = 0;
  Rational load;             // x*(C)
  Rational lonely_weight;    // Σ_{S: C∈𝓛_S} p_S
  Rational crowded_weight;   // Σ_{S: C∉𝓛_S} p_S
  bool lonely_share() const { return load >= 2 - lonely_weight; }
  bool crowded_share() const { return crowded_weight <= load - 1; }
};

struct TreeCertificate {
  std::size_t tree = 0;
  Rational weight;
  EdgeVector y;
  EdgeVector ybar;
  std::optional<Cut> y_violation;     // odd(S) △ T cut with y^S(C) < 1
  std::optional<Cut> ybar_violation;  // odd(F_S) △ T cut with ȳ^S(C) < 1
  bool lonely_in_join = false;        // L_S ⊆ I_S
  bool lonely_structure = false;      // one tree edge per lonely cut, no |S∩C| = 2 cut with two lonely edges
  bool modified_cost_valid = false;   // c^S ≥ c, equal on S
  InequalityCheck join_reconnection;            // c(J*) + 2c(R_S) ≤ c^S(J*)
  InequalityCheck bomc_join;          // c(J*_S) ≤ c(y^S)
  InequalityCheck delete_join;        // c^S(J*_S) ≤ c^S(ȳ^S)
  InequalityCheck lemma53;
  HallWitness hall;
  InequalityCheck reconnection_cost;  // c^S(ȳ^S) − c(ȳ^S) ≤ Σ (4/5)(x*(C) − 1)c(S∩C)
  InequalityCheck per_tree;           // c(F_S) + c^S(ȳ^S) ≤ ...
  bool holds() const;
};

struct CertificateReport {
  LpCertificateCheck lp;
  bool decomposition_valid = false;  // spanning trees, p > 0, Σp = 1, Σ pχ ≤ x*
  std::vector<CutCertificate> cuts;
  std::vector<TreeCertificate> trees;
  bool lonely_identity = false;      // L_p = Σ_C (2 − x*(C))·v^C
  bool join_split = false;           // c(I_p) + c(J_p) ≤ c(x*)
  bool tours_valid = false;
  BoundReport bounds;
  MaxFunctionCheck max_function;
  std::optional<Rational> lonely_ratio;  // c(L_p)/c(x*)
  std::optional<Rational> join_ratio;    // c(I_p)/c(x*)
  bool all_hold = false;
};

/// Re-derives and checks every certificate for one pipeline run.
CertificateReport certify(const Instance& inst, const PipelineResult& pipeline, const Lambdas& lambdas = {});

} // namespace ttour
