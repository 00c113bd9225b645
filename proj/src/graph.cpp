#include "laygraph/graph.hpp"

#include <algorithm>
#include <bit>

namespace laygraph {

LayeredGraph LayeredGraph::validate(RawGraph raw) {
    LayeredGraph g;
    g.name_ = std::move(raw.name);
    g.vertices_ = std::move(raw.vertices);

    std::sort(g.vertices_.begin(), g.vertices_.end(), [](const Vertex& a, const Vertex& b) {
        if (a.level != b.level) return a.level > b.level;
        return a.id < b.id;
    });
    g.index_.reserve(g.vertices_.size());
    for (VertexIndex v = 0; v < g.vertices_.size(); ++v) {
        if (!g.index_.emplace(g.vertices_[v].id, v).second)
            throw GraphError(GraphErrorKind::DuplicateId, g.vertices_[v].id);
    }

    g.edges_.reserve(raw.edges.size());
    for (const Edge& e : raw.edges) {
        auto tail = g.find(e.tail);
        if (!tail) throw GraphError(GraphErrorKind::UnknownEndpoint, e.tail);
        auto head = g.find(e.head);
        if (!head) throw GraphError(GraphErrorKind::UnknownEndpoint, e.head);
        g.edges_.emplace_back(*tail, *head);
    }
    for (auto [tail, head] : g.edges_) {
        if (g.level(tail) != g.level(head) + 1)
            throw GraphError(GraphErrorKind::NonLayeredEdge, g.id(tail) + " -> " + g.id(head));
    }
    std::sort(g.edges_.begin(), g.edges_.end());

    if (g.vertices_.empty() || g.vertices_.back().level != 0) throw GraphError(GraphErrorKind::NoLevelZero, "");
    if (g.vertices_.size() >= 2 && g.vertices_[g.vertices_.size() - 2].level == 0) {
        throw GraphError(GraphErrorKind::MultipleLevelZero,
                         g.vertices_[g.vertices_.size() - 2].id + ", " + g.vertices_.back().id);
    }

    const std::size_t n = g.vertices_.size();
    std::vector<std::vector<VertexIndex>> out(n);
    for (auto [tail, head] : g.edges_) out[tail].push_back(head);
    for (VertexIndex v = 0; v + 1 < n; ++v) {
        if (out[v].empty()) throw GraphError(GraphErrorKind::DanglingVertex, g.id(v));
    }

    // Heads sit one level lower, hence at larger indices; sweeping from the
    // bottom means every head row is final before it is merged.
    g.reach_.assign(n * n, 0);
    for (VertexIndex v = n; v-- > 0;) {
        std::uint8_t* row = &g.reach_[v * n];
        for (VertexIndex w : out[v]) {
            row[w] = 1;
            const std::uint8_t* sub = &g.reach_[w * n];
            for (VertexIndex u = w + 1; u < n; ++u) row[u] |= sub[u];
        }
    }
    g.below_.resize(n);
    for (VertexIndex v = 0; v < n; ++v) {
        for (VertexIndex w = v + 1; w < n; ++w) {
            if (g.reach_[v * n + w]) g.below_[v].push_back(w);
        }
    }
    return g;
}

std::optional<VertexIndex> LayeredGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexIndex LayeredGraph::index_of(std::string_view id) const {
    auto v = find(id);
    if (!v) throw GraphError(GraphErrorKind::UnknownEndpoint, std::string(id));
    return *v;
}

std::vector<std::size_t> LayeredGraph::level_sizes() const {
    std::vector<std::size_t> sizes(top_level() + 1, 0);
    for (const Vertex& v : vertices_) ++sizes[v.level];
    return sizes;
}

RawGraph LayeredGraph::to_raw() const {
    RawGraph raw;
    raw.name = name_;
    raw.vertices = vertices_;
    raw.edges.reserve(edges_.size());
    for (auto [tail, head] : edges_) raw.edges.push_back({id(tail), id(head)});
    return raw;
}

LayeredGraph gen_boolean(std::size_t n) {
    if (n > 20) throw Error(ErrorKind::OutOfRange, "boolean lattice rank " + std::to_string(n) + " exceeds 20");
    auto subset_id = [n](std::uint32_t mask) {
        std::string id = "{";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1U << i))) continue;
            if (!first) id += ",";
            id += std::to_string(i + 1);
            first = false;
        }
        return id + "}";
    };

    RawGraph raw;
    raw.name = "boolean(" + std::to_string(n) + ")";
    const std::uint32_t count = 1U << n;
    raw.vertices.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        raw.vertices.push_back({subset_id(mask), static_cast<std::size_t>(std::popcount(mask))});
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1U << i)) raw.edges.push_back({subset_id(mask), subset_id(mask & ~(1U << i))});
        }
    }
    return LayeredGraph::validate(std::move(raw));
}

LayeredGraph gen_complete(std::span<const std::size_t> m) {
    if (m.empty()) throw Error(ErrorKind::OutOfRange, "complete graph needs at least one level");
    if (std::any_of(m.begin(), m.end(), [](std::size_t x) { return x == 0; }))
        throw Error(ErrorKind::OutOfRange, "every level of a complete graph needs at least one vertex");
    if (m.back() != 1)
        throw Error(ErrorKind::BottomLevelNotSingleton, "m_0 = " + std::to_string(m.back()));

    const std::size_t top = m.size() - 1;
    auto vid = [](std::size_t level, std::size_t j) { return std::to_string(level) + ":" + std::to_string(j); };

    RawGraph raw;
    std::string name = "complete[";
    for (std::size_t i = 0; i < m.size(); ++i) name += (i ? "," : "") + std::to_string(m[i]);
    raw.name = name + "]";
    for (std::size_t level = 0; level <= top; ++level) {
        const std::size_t size = m[top - level];
        for (std::size_t j = 0; j < size; ++j) {
            raw.vertices.push_back({vid(level, j), level});
            if (level == 0) continue;
            for (std::size_t k = 0; k < m[top - level + 1]; ++k) raw.edges.push_back({vid(level, j), vid(level - 1, k)});
        }
    }
    return LayeredGraph::validate(std::move(raw));
}

bool is_prime(std::uint64_t q) noexcept {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

}  // namespace laygraph
