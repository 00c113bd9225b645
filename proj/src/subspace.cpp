#include <cstdint>
#include <string>
#include <vector>

#include "laygraph/graph.hpp"

namespace laygraph {

namespace {

constexpr std::size_t kMaxSubspaces = 20000;

using Row = std::vector<std::uint32_t>;

/// A subspace of F_q^n held as its reduced row echelon basis.
struct Echelon {
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
};

std::string echelon_id(const Echelon& e, std::uint32_t q) {
    std::string id = "[";
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (i) id += "|";
        for (std::size_t j = 0; j < e.rows[i].size(); ++j) {
            if (q > 10 && j) id += ".";
            id += std::to_string(e.rows[i][j]);
        }
    }
    return id + "]";
}

/// x lies in the row space iff it equals the combination dictated by its
/// pivot-column entries.
bool contains(const Echelon& u, const Row& x, std::uint32_t q) {
    Row acc(x.size(), 0);
    for (std::size_t i = 0; i < u.rows.size(); ++i) {
        const std::uint64_t c = x[u.pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) acc[j] = static_cast<std::uint32_t>((acc[j] + c * u.rows[i][j]) % q);
    }
    return acc == x;
}

class EchelonEnumerator {
public:
    EchelonEnumerator(std::size_t n, std::uint32_t q) : n_(n), q_(q) {}

    std::vector<Echelon> of_rank(std::size_t k) {
        out_.clear();
        std::vector<std::size_t> pivots;
        choose_pivots(k, 0, pivots);
        return std::move(out_);
    }

private:
    void choose_pivots(std::size_t k, std::size_t start, std::vector<std::size_t>& pivots) {
        if (pivots.size() == k) {
            Echelon e;
            e.pivots = pivots;
            e.rows.assign(k, Row(n_, 0));
            for (std::size_t i = 0; i < k; ++i) e.rows[i][pivots[i]] = 1;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t next = i + 1;
                for (std::size_t j = pivots[i] + 1; j < n_; ++j) {
                    if (next < k && pivots[next] == j) {
                        ++next;
                        continue;
                    }
                    free.emplace_back(i, j);
                }
            }
            fill(e, free, 0);
            return;
        }
        for (std::size_t c = start; c + (k - pivots.size()) <= n_; ++c) {
            pivots.push_back(c);
            choose_pivots(k, c + 1, pivots);
            pivots.pop_back();
        }
    }

    void fill(Echelon& e, const std::vector<std::pair<std::size_t, std::size_t>>& free, std::size_t pos) {
        if (pos == free.size()) {
            if (++total_ > kMaxSubspaces)
                throw Error(ErrorKind::OutOfRange, "subspace lattice exceeds " + std::to_string(kMaxSubspaces) + " vertices");
            out_.push_back(e);
            return;
        }
        auto [i, j] = free[pos];
        for (std::uint32_t value = 0; value < q_; ++value) {
            e.rows[i][j] = value;
            fill(e, free, pos + 1);
        }
        e.rows[i][j] = 0;
    }

    std::size_t n_;
    std::uint32_t q_;
    std::size_t total_ = 0;
    std::vector<Echelon> out_;
};

}  // namespace

LayeredGraph gen_subspace(std::size_t n, std::uint32_t q) {
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q));

    EchelonEnumerator enumerate(n, q);
    std::vector<std::vector<Echelon>> levels;
    for (std::size_t k = 0; k <= n; ++k) levels.push_back(enumerate.of_rank(k));

    RawGraph raw;
    raw.name = "subspace(" + std::to_string(n) + "," + std::to_string(q) + ")";
    for (std::size_t k = 0; k <= n; ++k) {
        for (const Echelon& upper : levels[k]) {
            const std::string upper_id = echelon_id(upper, q);
            raw.vertices.push_back({upper_id, k});
            if (k == 0) continue;
            for (const Echelon& lower : levels[k - 1]) {
                bool inside = true;
                for (const Row& r : lower.rows) {
                    if (!contains(upper, r, q)) {
                        inside = false;
                        break;
                    }
                }
                if (inside) raw.edges.push_back({upper_id, echelon_id(lower, q)});
            }
        }
    }
    return LayeredGraph::validate(std::move(raw));
}

}  // namespace laygraph
