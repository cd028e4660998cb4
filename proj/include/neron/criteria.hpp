#pragma once

// Decision procedures for toric additivity, alignment, disciplinedness and
// combinatorial regularity of a labelled graph. Every negative verdict
// carries a witness that can be checked independently.

#include "neron/graph.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace neron {

enum class Criterion { toric_additive, aligned, disciplined, regular };

inline constexpr std::array<Criterion, 4> all_criteria = {
    Criterion::toric_additive, Criterion::aligned, Criterion::disciplined, Criterion::regular};

const char* to_string(Criterion c) noexcept;
/// Accepts the long names above and the short form "ta".
std::optional<Criterion> parse_criterion(std::string_view name) noexcept;

/// Two edges with non-parallel labels and a simple cycle through both.
struct AlignmentWitness {
    std::string first;
    std::string second;
    std::vector<std::string> cycle; // edge ids in traversal order
};

/// mu and (mu_1, ..., mu_n).
struct RankWitness {
    std::size_t mu = 0;
    std::vector<std::size_t> generic_ranks;
};

/// A single offending edge (mixed-support loop, or non-unit label).
struct EdgeWitness {
    std::string edge;
};

using Witness = std::variant<AlignmentWitness, RankWitness, EdgeWitness>;

struct CriterionVerdict {
    Criterion criterion;
    bool holds = false;
    std::optional<Witness> witness;
};

/// Some positive n, n' with a^n = b^n', i.e. a and b proportional.
/// Throws std::invalid_argument on zero or mismatched-length input.
bool labels_parallel(const ExponentVector& a, const ExponentVector& b);

/// Biconnected blocks as sorted lists of edge indices, ordered by smallest
/// member. Loops and bridges form singleton blocks.
std::vector<std::vector<std::size_t>> blocks(const LabelledGraph& graph);

/// A simple cycle (edge indices, traversal order) through two distinct
/// non-loop edges of the same block. Throws ConsistencyError otherwise.
std::vector<std::size_t> cycle_through(const LabelledGraph& graph, std::size_t e, std::size_t f);

CriterionVerdict is_aligned(const LabelledGraph& graph);
CriterionVerdict is_toric_additive(const LabelledGraph& graph);
CriterionVerdict is_disciplined(const LabelledGraph& graph);
CriterionVerdict is_regular_model(const LabelledGraph& graph);

CriterionVerdict check(const LabelledGraph& graph, Criterion c);

/// All four verdicts in the order of `all_criteria`. Also checks that
/// TA implies aligned and disciplined, and that on regular input aligned
/// and TA agree; a violation throws ConsistencyError.
std::vector<CriterionVerdict> check_all(const LabelledGraph& graph);

} // namespace neron
