#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpa/channel.hpp"
#include "qpa/graph.hpp"
#include "qpa/sdp.hpp"
#include "qpa/system.hpp"

namespace qpa {

enum class InvariantRoute { GraphSdp, GeneralChoi, Dual, ClosedForm };

std::string route_name(InvariantRoute r);

struct InvariantOptions {
    double tol_gap = 1e-9;
    double tol_feas = 1e-9;
    std::size_t max_iter = 200;
    /// Ambient-dimension caps for the Choi-variable routes.
    std::size_t max_general_lin = 5;
    std::size_t max_general_quad = 4;
};

struct InvariantResult {
    double value = 0.0;
    HermitianMatrix certificate; // A, Y, or Choi matrix, per route
    double gap = 0.0;
    InvariantRoute route = InvariantRoute::GraphSdp;
    SdpStatus status = SdpStatus::MaxIterations;
    std::size_t iterations = 0;
};

/// max Y.J s.t. Y_ij = 0 on edges, tr Y = 1, Y psd.
InvariantResult lovasz_theta(const Graph& g, const InvariantOptions& opts = {});

/// max (A.J)/n s.t. unit diagonal, zeros on complement edges, A psd.
InvariantResult phi_lin_graph(const Graph& g, const InvariantOptions& opts = {});

/// min tr Y s.t. Y_ij = 0 on edges, Y - J/n psd; solved as its own program
/// (substituting Z = Y - J/n), certificate is Y.
InvariantResult phi_lin_dual(const Graph& g, const InvariantOptions& opts = {});

/// Schur-complement epigraph program for the nearest unit-diagonal PSD matrix
/// to J supported on the graph; value (A*.J)/n, certificate A*.
InvariantResult phi_quad_graph(const Graph& g, const InvariantOptions& opts = {});

/// Choi-variable program: max (1/n)<Phi, P_S>_K over unital trace-preserving
/// CP maps with range in S; certificate is the optimal Choi matrix.
InvariantResult phi_lin_general(const MatricialSystem& s, const InvariantOptions& opts = {});

/// Choi-variable program minimizing ||Phi - P_S||_K over the same feasible
/// set, via an epigraph factored through the feasible affine subspace; the
/// reported value is (1/n)<Phi*, P_S>_K and the certificate the optimal Choi.
InvariantResult phi_quad_general(const MatricialSystem& s, const InvariantOptions& opts = {});

struct VectorRepresentation {
    std::vector<std::vector<double>> u; // n vectors of dimension n+1
    std::vector<double> c;              // unit handle, dimension n+1
    double t = 0.0;                     // program value, 1/sqrt(phi_lin)
};

/// Orthonormal-representation extraction from the dual optimum: X = nY - J,
/// factored X = S^T S, u_i = (c + s_i)/sqrt(tr(X)/n + 1) with handle e_{n+1}.
VectorRepresentation extract_vector_representation(const Graph& g,
                                                   const InvariantOptions& opts = {});

struct CliqueBoundReport {
    std::size_t omega = 0;
    double phi_quad = 0.0;
    double bound = 0.0; // omega(omega-1)/n + 1
    double slack = 0.0; // phi_quad - bound
    bool holds = false;
    double gap = 0.0;
    bool witness_feasible = false; // block witness J_|C| (+) I is PSD feasible
    double witness_value = 0.0;
};
CliqueBoundReport clique_bound_check(const Graph& g, const InvariantOptions& opts = {});

struct CounterexampleRow {
    int item = 0;
    std::string inequality;
    std::string graph;
    std::string lhs_name, rhs_name;
    double lhs = 0.0, rhs = 0.0;
    double printed_lhs = 0.0, printed_rhs = 0.0;
    double violation = 0.0;
    double printed_violation = 0.0;
    double gap_budget = 0.0;
    bool dominates_budget = false;
    bool values_match_printed = false;
    bool passed = false;
    std::string note;
    bool has_alternate = false;
    double alt_rhs = 0.0, alt_violation = 0.0;
    std::string alt_note;
};

/// The five counterexample rows, with value pairs, violation magnitudes and
/// solver gap budgets. Items 1, 2, 4 and 5 must beat ten times their budget;
/// item 3's printed violation is itself below the true optimum's distance
/// (the inequality is tight there), so that row is held to value
/// reproduction only and carries an explanatory note.
std::vector<CounterexampleRow> counterexample_suite(const InvariantOptions& opts = {});

struct MultiplicativityReport {
    double product_value = 0.0;
    double factor_product = 0.0;
    double error = 0.0;
    bool holds = false;
    double gap = 0.0;
};
MultiplicativityReport multiplicativity_check(const Graph& g, const Graph& h,
                                              const InvariantOptions& opts = {});

struct CheckResult {
    std::string check;
    std::string input;
    bool passed = false;
    double slack = 0.0;
    std::string detail;
};

/// The verification battery: sandwich inequalities, phi_lin >= phi_quad,
/// clique bound, multiplicativity, primal/dual agreement, complex-vs-real
/// doubling. Families named as in graph specs; n runs from each family's
/// minimum to max_n.
std::vector<CheckResult> verify_suite(const std::vector<std::string>& families, std::size_t max_n,
                                      const InvariantOptions& opts = {});

struct CycleExplorationRow {
    std::size_t n = 0;
    double theta_cycle = 0.0;
    double phi_lin_complement = 0.0;
    double lin_difference = 0.0;
    std::optional<double> phi_quad_complement;
    std::optional<double> quad_difference;
};
std::vector<CycleExplorationRow> explore_cycles(std::size_t max_n, bool with_quad,
                                                const InvariantOptions& opts = {});

struct SupermultRow {
    std::string lhs_system;
    std::string factor_a, factor_b;
    std::string invariant; // "phi-lin" or "phi-quad"
    std::optional<double> tensor_value; // absent when the ambient cap applies
    double factor_product = 0.0;
    std::string note;
};
std::vector<SupermultRow> explore_supermultiplicativity(std::size_t max_ambient,
                                                        const InvariantOptions& opts = {});

} // namespace qpa
