#ifndef LAYGRAPH_HILBERT_HPP
#define LAYGRAPH_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "laygraph/graph.hpp"
#include "laygraph/series.hpp"

namespace laygraph {

inline constexpr std::size_t kDefaultTruncation = 12;
inline constexpr std::uint64_t kDefaultChainCap = 10'000'000;

/// Square matrix of polynomials, row-major.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t size) : size_(size), entries_(size * size) {}

    static PolyMatrix identity(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    IntPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const IntPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    bool is_zero() const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t size_;
    std::vector<IntPoly> entries_;
};

/// zeta(t): entry (v, w) is t^(|v|-|w|) when v >= w, zero otherwise.
/// Rows and columns follow the graph's canonical vertex order, which is
/// nonincreasing in level, so the matrix is unit upper triangular.
struct ZetaMatrix {
    std::vector<VertexIndex> order;
    PolyMatrix entries;
};

ZetaMatrix zeta_matrix(const LayeredGraph& g);

/// Inverse of zeta(t) as the finite alternating sum I - N + N^2 - ...
/// with N = zeta - I.
PolyMatrix invert_zeta(const ZetaMatrix& z);

/// Inverse of zeta(t) assembled from the Mobius table: entry (v, w) is
/// mu(v, w) t^(|v|-|w|).
PolyMatrix invert_zeta_factored(const LayeredGraph& g);

/// Classical Mobius function of the reachability order, defined on pairs
/// v >= w and zero elsewhere.
class MobiusTable {
public:
    explicit MobiusTable(const LayeredGraph& g);

    std::size_t size() const noexcept { return size_; }
    const Int& operator()(VertexIndex v, VertexIndex w) const { return values_[v * size_ + w]; }

private:
    std::size_t size_;
    std::vector<Int> values_;
};

inline MobiusTable mobius_table(const LayeredGraph& g) { return MobiusTable(g); }

/// 1 - t * sum_{v >= w} mu(v, w) t^(|v|-|w|).
IntPoly denominator_mobius(const LayeredGraph& g);

/// 1 + sum over nonempty chains v_1 > ... > v_l of (-1)^l t^(|v_1|-|v_l|+1).
/// Throws ChainBudgetExceeded once more than chain_cap chains are visited.
IntPoly denominator_chains(const LayeredGraph& g, std::uint64_t chain_cap = kDefaultChainCap);

enum class Method { mobius, chains };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct HilbertResult {
    IntPoly denominator;
    IntSeries series;
    Method method;
};

HilbertResult hilbert_series(const LayeredGraph& g, std::size_t truncation = kDefaultTruncation,
                             Method method = Method::mobius, std::uint64_t chain_cap = kDefaultChainCap);

/// h_v(t) for every vertex, indexed like the graph; the minimal vertex maps
/// to the constant 1.
std::vector<IntSeries> vertex_series(const LayeredGraph& g, std::size_t truncation = kDefaultTruncation);

struct DualResult {
    /// 1 / h(-t) to the truncation.
    IntSeries series;
    /// D(-t) / (1 + t) when that division is exact; otherwise no
    /// polynomial form is claimed.
    std::optional<IntPoly> polynomial;
    IntPoly denominator;
};

DualResult dual_series(const LayeredGraph& g, std::size_t truncation = kDefaultTruncation);

/// Gaussian binomial [n choose k]_q evaluated at integer q >= 1.
Int q_binomial(std::int64_t n, std::int64_t k, std::int64_t q);

struct QBinomialCheck {
    Int product;
    Int sum;
    bool holds() const { return product == sum; }
};

/// Evaluates both sides of prod_{i<m} (1 + x q^i) = sum_j [m j]_q q^(j(j-1)/2) x^j.
QBinomialCheck qbinomial_theorem_check(std::int64_t m, std::int64_t q, std::int64_t x);

/// (1-t) / (1 - t(2-t)^n)
RationalFn closed_qn(std::size_t n);

/// (1-t) / (1 - t sum_m [n m]_q prod_{i<n-m} (1 - t q^i))
RationalFn closed_lnq(std::size_t n, std::int64_t q);

/// Closed form for the complete layered graph with level sizes
/// m = [m_n, ..., m_1, m_0], m_0 = 1.
RationalFn closed_complete(std::span<const std::size_t> m);

/// Dual series polynomial of the subspace lattice graph:
/// 1 + t sum_{m<n} [n m]_q prod_{i=1}^{n-m-1} (1 + t q^i).
IntPoly closed_dual_lnq(std::size_t n, std::int64_t q);

/// 1 + sum_{k>=1} sum_{a>=k} m_a (m_{a-1}-1)...(m_{a-k+1}-1) t^k.
IntPoly closed_dual_complete(std::span<const std::size_t> m);

}  // namespace laygraph

#endif  // LAYGRAPH_HILBERT_HPP
