#pragma once

// Brute-force reference routines and the seeded instance generator used by
// the property and acceptance suites.

#include "neron/graph.hpp"
#include "neron/intlin.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace neron::oracle {

inline constexpr std::size_t max_cycle_edges = 14;
inline constexpr std::size_t max_tree_edges = 12;

/// Every simple cycle exactly once, as ascending lists of edge indices.
/// Loops are one-edge cycles, parallel edges give two-edge cycles. Cycles
/// are listed by their smallest edge index. Throws SizeLimitExceeded above
/// max_cycle_edges edges.
std::vector<std::vector<std::size_t>> enumerate_cycles(const LabelledGraph& graph);

/// Alignment checked literally: every pair of edges on every simple cycle
/// has parallel labels.
bool aligned_bruteforce(const LabelledGraph& graph);

/// True iff `edges` (indices, any order) is the edge set of a simple cycle.
bool is_simple_cycle(const LabelledGraph& graph, std::span<const std::size_t> edges);

/// Sum over spanning trees T of contract(graph, {param}) of the product of
/// the param-th exponents of the edges outside T. Exhaustive; throws
/// SizeLimitExceeded when the contraction has more than max_tree_edges edges.
Integer spanning_tree_order_oracle(const LabelledGraph& graph, std::size_t param);

enum class ClassConstraint { any, regular, disciplined, single_param };

std::optional<ClassConstraint> parse_class_constraint(std::string_view name) noexcept;
const char* to_string(ClassConstraint c) noexcept;

struct GeneratorConfig {
    std::size_t num_vertices = 1;
    std::size_t num_edges = 0;
    std::size_t num_params = 1;
    std::uint32_t max_exponent = 1;
    std::uint64_t seed = 0;
    ClassConstraint class_constraint = ClassConstraint::any;
};

/// Knuth's MMIX linear congruential generator, x <- 6364136223846793005 x +
/// 1442695040888963407 (mod 2^64), seeded with the raw seed.
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                              1442695040888963407ULL, 0ULL>;

/// Uniform draw from [0, bound): the high 32 bits of the next state,
/// multiplied by bound and shifted right by 32. Portable across languages.
std::uint64_t draw_below(Lcg64& rng, std::uint64_t bound);

/// Deterministic connected random graph. Vertices v0.. get genus draw_below(3);
/// for v = 1..V-1 a tree edge joins v to draw_below(v), with orientation
/// flipped when draw_below(2) = 1; remaining edges join draw_below(V) to
/// draw_below(V) (loops allowed). Each edge's label is drawn right after its
/// endpoints, uniformly among the labels the class admits:
///   any (and non-loops of disciplined): entries draw_below(max_exponent + 1),
///       redrawn while all zero;
///   regular: unit vector at draw_below(n);
///   single_param: (1 + draw_below(max_exponent), 0, ..., 0);
///   loops of disciplined: coordinate draw_below(n), exponent 1 + draw_below(max_exponent).
/// Edges are e0, e1, ... in creation order.
LabelledGraph random_labelled_graph(const GeneratorConfig& config);

} // namespace neron::oracle
