#ifndef LAYGRAPH_GRAPH_HPP
#define LAYGRAPH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "laygraph/error.hpp"

namespace laygraph {

struct Vertex {
    std::string id;
    std::size_t level = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    std::string tail;
    std::string head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated graph description, as read from a file or built by hand.
struct RawGraph {
    std::optional<std::string> name;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

using VertexIndex = std::size_t;

/// A validated layered graph with a unique level-0 vertex.
///
/// Vertices are stored in canonical order: level descending, ties by id.
/// Every vertex index used by the library refers to this order, so the last
/// index is always the minimal vertex. Edges are kept as a multiset (sorted
/// by endpoint index); parallel edges never influence reachability.
class LayeredGraph {
public:
    /// Checks every invariant and computes the reachability closure. Throws
    /// GraphError on the first violation found.
    static LayeredGraph validate(RawGraph raw);

    const std::optional<std::string>& name() const noexcept { return name_; }
    std::size_t top_level() const noexcept { return vertices_.front().level; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// |V_+|, the number of vertices above level 0.
    std::size_t positive_count() const noexcept { return vertices_.size() - 1; }

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
    std::size_t level(VertexIndex v) const { return vertices_[v].level; }
    const std::string& id(VertexIndex v) const { return vertices_[v].id; }
    VertexIndex star() const noexcept { return vertices_.size() - 1; }

    /// Edges as (tail, head) index pairs, parallel edges repeated.
    std::span<const std::pair<VertexIndex, VertexIndex>> edges() const noexcept { return edges_; }

    /// Throws GraphError(UnknownEndpoint) if the id is absent.
    VertexIndex index_of(std::string_view id) const;
    std::optional<VertexIndex> find(std::string_view id) const;

    /// True iff a directed path of one or more edges leads from v to w.
    bool reachable(VertexIndex v, VertexIndex w) const { return reach_[v * vertices_.size() + w] != 0; }
    bool reachable(std::string_view v, std::string_view w) const { return reachable(index_of(v), index_of(w)); }
    /// v == w or reachable(v, w).
    bool geq(VertexIndex v, VertexIndex w) const { return v == w || reachable(v, w); }
    bool geq(std::string_view v, std::string_view w) const { return geq(index_of(v), index_of(w)); }

    /// Vertices strictly below v, in canonical order.
    std::span<const VertexIndex> below(VertexIndex v) const { return below_[v]; }

    /// Number of vertices on each level, index = level.
    std::vector<std::size_t> level_sizes() const;

    RawGraph to_raw() const;

    friend bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
        return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    LayeredGraph() = default;

    std::optional<std::string> name_;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<std::uint8_t> reach_;
    std::vector<std::vector<VertexIndex>> below_;
};

/// Hasse graph of the subsets of {1..n}; ids are "{}", "{1}", "{1,2}", ...
LayeredGraph gen_boolean(std::size_t n);

/// Hasse graph of the subspaces of F_q^n. q must be prime. Each vertex id is
/// the reduced row echelon basis, e.g. "[]", "[10]", "[10|01]".
LayeredGraph gen_subspace(std::size_t n, std::uint32_t q);

/// Complete layered graph with level sizes m = [m_n, ..., m_1, m_0].
/// Requires m_0 == 1 and every m_i >= 1. Ids are "level:position".
LayeredGraph gen_complete(std::span<const std::size_t> m);

bool is_prime(std::uint64_t q) noexcept;

}  // namespace laygraph

#endif  // LAYGRAPH_GRAPH_HPP
