#pragma once

// Labelled dual graphs: connected multigraphs whose vertices carry a genus
// and whose edges carry the exponent vector of their thickness
// t1^m1 * ... * tn^mn.

#include "neron/intlin.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace neron {

/// Exponents (m1, ..., mn) of a monomial thickness.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}
    ExponentVector(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;
    /// Number of strictly positive entries.
    std::size_t support_size() const noexcept;
    /// Sum of the entries.
    std::uint64_t total_degree() const noexcept;
    /// Exactly one entry equal to 1, all others 0.
    bool is_unit() const noexcept;

    /// Keeps the coordinates listed in `indices` (0-based), in that order.
    ExponentVector restrict_to(std::span<const std::size_t> indices) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

struct Vertex {
    std::string id;
    std::uint32_t genus = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A node of the fibre. `tail` and `head` index into the vertex list; the
/// stored order fixes the orientation used for homology.
struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
    ExponentVector label;

    bool is_loop() const noexcept { return tail == head; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices and edges are kept in insertion order; that order is the "id
/// order" every deterministic traversal follows.
struct LabelledGraph {
    std::size_t num_params = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::optional<std::size_t> find_vertex(std::string_view id) const;
    std::optional<std::size_t> find_edge(std::string_view id) const;

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

struct Violation {
    enum class Kind {
        no_params,
        empty,
        disconnected,
        bad_endpoint,
        label_length,
        zero_label,
        duplicate_vertex_id,
        duplicate_edge_id,
    };
    Kind kind;
    std::string element; // offending vertex or edge id, empty for global issues
    std::string message;
};

const char* to_string(Violation::Kind kind) noexcept;

/// Empty result means the graph is valid.
std::vector<Violation> validate(const LabelledGraph& graph);

/// Throws InvalidGraph listing every violation.
void require_valid(const LabelledGraph& graph);

/// Per vertex, (edge index, other endpoint) pairs in increasing edge index.
/// A loop appears once in its vertex's list.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incidence_lists(const LabelledGraph& graph);

/// First Betti number |E| - |V| + 1.
std::size_t betti_one(const LabelledGraph& graph);

/// Sum of vertex genera plus the first Betti number.
std::uint64_t arithmetic_genus(const LabelledGraph& graph);

/// |V| x |E|; the column of edge e is +1 at head, -1 at tail, zero for loops.
IntMatrix incidence_matrix(const LabelledGraph& graph);

/// Fundamental cycles of the depth-first spanning tree (edges tried in
/// index order, starting at vertex 0). One vector in Z^E per non-tree edge,
/// in increasing edge index, each with coefficient +1 on its own edge.
std::vector<IntVector> cycle_space_basis(const LabelledGraph& graph);

struct ContractionResult {
    LabelledGraph graph;
    /// old vertex index -> new vertex index
    std::vector<std::size_t> vertex_map;
    /// new edge index -> old edge index
    std::vector<std::size_t> surviving_edges;
};

/// Contracts every edge whose label vanishes on all of `params` (1-based
/// indices). Loops so contracted are deleted. Each merged vertex keeps the
/// id of its lowest-index member and receives the genus of the collapsed
/// subgraph, so the arithmetic genus is unchanged. Labels are restricted to
/// `params` in ascending order.
ContractionResult contract(const LabelledGraph& graph, std::span<const std::size_t> params);

/// Shorthand for contracting onto a single parameter.
ContractionResult contract_to(const LabelledGraph& graph, std::size_t param);

} // namespace neron
