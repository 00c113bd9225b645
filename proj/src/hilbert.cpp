#include "laygraph/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace laygraph {

namespace {

const IntPoly kOne{1};
const IntPoly kT{0, 1};
const IntPoly kOneMinusT{1, -1};

/// Level sizes of a complete-graph spec, reindexed so that sizes[a] = m_a.
std::vector<Int> complete_level_sizes(std::span<const std::size_t> m) {
    if (m.empty()) throw Error(ErrorKind::OutOfRange, "complete spec needs at least one level");
    if (std::any_of(m.begin(), m.end(), [](std::size_t x) { return x == 0; }))
        throw Error(ErrorKind::OutOfRange, "complete spec entries must be >= 1");
    if (m.back() != 1) throw Error(ErrorKind::BottomLevelNotSingleton, "m_0 = " + std::to_string(m.back()));
    std::vector<Int> sizes(m.rbegin(), m.rend());
    return sizes;
}

Int int_pow(const Int& base, std::uint64_t exponent) {
    Int result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t size) {
    PolyMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = kOne;
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const IntPoly& p) { return p.is_zero(); });
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    const std::size_t n = lhs.size_;
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const IntPoly& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const IntPoly& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

ZetaMatrix zeta_matrix(const LayeredGraph& g) {
    const std::size_t n = g.vertex_count();
    ZetaMatrix z{std::vector<VertexIndex>(n), PolyMatrix(n)};
    std::iota(z.order.begin(), z.order.end(), VertexIndex{0});
    for (VertexIndex v = 0; v < n; ++v) {
        z.entries(v, v) = kOne;
        for (VertexIndex w : g.below(v)) z.entries(v, w) = IntPoly::monomial(1, g.level(v) - g.level(w));
    }
    return z;
}

PolyMatrix invert_zeta(const ZetaMatrix& z) {
    const std::size_t n = z.entries.size();
    PolyMatrix nilpotent = z.entries;
    nilpotent -= PolyMatrix::identity(n);

    PolyMatrix result = PolyMatrix::identity(n);
    PolyMatrix term = PolyMatrix::identity(n);
    // N is strictly upper triangular, so N^n = 0 at the latest.
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * nilpotent;
        if (term.is_zero()) break;
        if (k % 2 == 1) {
            result -= term;
        } else {
            result += term;
        }
    }
    return result;
}

PolyMatrix invert_zeta_factored(const LayeredGraph& g) {
    const MobiusTable mu(g);
    const std::size_t n = g.vertex_count();
    PolyMatrix out(n);
    for (VertexIndex v = 0; v < n; ++v) {
        out(v, v) = kOne;
        for (VertexIndex w : g.below(v)) {
            if (mu(v, w) != 0) out(v, w) = IntPoly::monomial(mu(v, w), g.level(v) - g.level(w));
        }
    }
    return out;
}

MobiusTable::MobiusTable(const LayeredGraph& g) : size_(g.vertex_count()), values_(size_ * size_) {
    // mu(v, w) = -sum_{v > u >= w} mu(u, w); larger index means lower level,
    // so sweeping v downward from w visits every u in (v, w] first.
    for (VertexIndex w = 0; w < size_; ++w) {
        values_[w * size_ + w] = 1;
        for (VertexIndex v = w; v-- > 0;) {
            if (!g.reachable(v, w)) continue;
            Int acc = values_[w * size_ + w];
            for (VertexIndex u : g.below(v)) {
                if (u != w && g.reachable(u, w)) acc += values_[u * size_ + w];
            }
            values_[v * size_ + w] = -acc;
        }
    }
}

IntPoly denominator_mobius(const LayeredGraph& g) {
    const MobiusTable mu(g);
    std::vector<Int> sum(g.top_level() + 1);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        sum[0] += mu(v, v);
        for (VertexIndex w : g.below(v)) sum[g.level(v) - g.level(w)] += mu(v, w);
    }
    return kOne - kT * IntPoly(std::move(sum));
}

namespace {

class ChainWalker {
public:
    ChainWalker(const LayeredGraph& g, std::uint64_t cap) : g_(g), cap_(cap), acc_(g.top_level() + 1, 0) {}

    void walk_from(VertexIndex start) { visit(g_.level(start), start, 1); }

    IntPoly denominator() const {
        std::vector<Int> coeffs(acc_.size() + 1);
        coeffs[0] = 1;
        for (std::size_t d = 0; d < acc_.size(); ++d) coeffs[d + 1] = acc_[d];
        return IntPoly(std::move(coeffs));
    }

private:
    void visit(std::size_t top, VertexIndex current, std::size_t length) {
        if (++visited_ > cap_)
            throw Error(ErrorKind::ChainBudgetExceeded, "more than " + std::to_string(cap_) + " chains");
        acc_[top - g_.level(current)] += (length % 2 == 1) ? -1 : 1;
        for (VertexIndex next : g_.below(current)) visit(top, next, length + 1);
    }

    const LayeredGraph& g_;
    std::uint64_t cap_;
    std::uint64_t visited_ = 0;
    // |acc| never exceeds the number of visited chains, which is capped.
    std::vector<std::int64_t> acc_;
};

}  // namespace

IntPoly denominator_chains(const LayeredGraph& g, std::uint64_t chain_cap) {
    ChainWalker walker(g, chain_cap);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) walker.walk_from(v);
    return walker.denominator();
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::mobius: return "mobius";
        case Method::chains: return "chains";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "mobius") return Method::mobius;
    if (name == "chains") return Method::chains;
    return std::nullopt;
}

HilbertResult hilbert_series(const LayeredGraph& g, std::size_t truncation, Method method, std::uint64_t chain_cap) {
    IntPoly den = method == Method::mobius ? denominator_mobius(g) : denominator_chains(g, chain_cap);
    IntSeries series = kOneMinusT * inverse(IntSeries::from_poly(den, truncation));
    return {std::move(den), std::move(series), method};
}

std::vector<IntSeries> vertex_series(const LayeredGraph& g, std::size_t truncation) {
    const IntSeries h = hilbert_series(g, truncation).series;
    const VertexIndex star = g.star();
    std::vector<IntSeries> table(g.vertex_count());
    table[star] = IntSeries::one(truncation);

    for (VertexIndex v = star; v-- > 0;) {
        std::vector<Int> ramp(g.level(v) + 1, 1);
        ramp[0] = 0;
        IntSeries hv = IntPoly(std::move(ramp)) * h;
        for (VertexIndex w : g.below(v)) {
            if (w == star) continue;
            hv -= IntPoly::monomial(1, g.level(v) - g.level(w)) * table[w];
        }
        table[v] = std::move(hv);
    }
    return table;
}

DualResult dual_series(const LayeredGraph& g, std::size_t truncation) {
    HilbertResult h = hilbert_series(g, truncation);
    DualResult out{inverse(substitute_neg(h.series)), std::nullopt, h.denominator};
    try {
        out.polynomial = div_exact(substitute_neg(h.denominator), IntPoly{1, 1});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible) throw;
    }
    return out;
}

Int q_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (n < 0 || k < 0 || k > n || q < 1) {
        throw Error(ErrorKind::OutOfRange, "q_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ", " +
                                               std::to_string(q) + ")");
    }
    std::vector<Int> q_pow(k + 1);
    q_pow[0] = 1;
    for (std::int64_t j = 1; j <= k; ++j) q_pow[j] = q_pow[j - 1] * q;

    // Pascal rule [i j] = [i-1 j-1] + q^j [i-1 j], kept to columns 0..k.
    std::vector<Int> row(k + 1, 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + q_pow[j] * row[j];
    }
    return row[k];
}

QBinomialCheck qbinomial_theorem_check(std::int64_t m, std::int64_t q, std::int64_t x) {
    if (m < 0) throw Error(ErrorKind::OutOfRange, "m = " + std::to_string(m));
    QBinomialCheck check{1, 0};
    Int q_power = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        check.product *= 1 + x * q_power;
        q_power *= q;
    }
    Int x_power = 1;
    for (std::int64_t j = 0; j <= m; ++j) {
        check.sum += q_binomial(m, j, q) * int_pow(Int(q), static_cast<std::uint64_t>(j * (j - 1) / 2)) * x_power;
        x_power *= x;
    }
    return check;
}

RationalFn closed_qn(std::size_t n) {
    return RationalFn(kOneMinusT, kOne - kT * pow(IntPoly{2, -1}, static_cast<unsigned>(n)));
}

RationalFn closed_lnq(std::size_t n, std::int64_t q) {
    const auto sn = static_cast<std::int64_t>(n);
    IntPoly sum;
    for (std::int64_t m = 0; m <= sn; ++m) {
        IntPoly product = IntPoly::constant(q_binomial(sn, m, q));
        Int q_power = 1;
        for (std::int64_t i = 0; i < sn - m; ++i) {
            product *= IntPoly(std::vector<Int>{1, -q_power});
            q_power *= q;
        }
        sum += product;
    }
    return RationalFn(kOneMinusT, kOne - kT * sum);
}

RationalFn closed_complete(std::span<const std::size_t> m) {
    const std::vector<Int> sizes = complete_level_sizes(m);
    const std::size_t n = sizes.size() - 1;
    std::vector<Int> den(n + 2);
    den[0] = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        Int total = 0;
        for (std::size_t a = k; a <= n; ++a) {
            // k = 0 contributes m_a alone; otherwise m_a (m_{a-1}-1)...(m_{a-k+1}-1) m_{a-k}.
            Int c = sizes[a];
            if (k >= 1) {
                for (std::size_t j = 1; j < k; ++j) c *= sizes[a - j] - 1;
                c *= sizes[a - k];
            }
            total += c;
        }
        den[k + 1] = (k % 2 == 0) ? Int(-total) : total;
    }
    return RationalFn(kOneMinusT, IntPoly(std::move(den)));
}

IntPoly closed_dual_lnq(std::size_t n, std::int64_t q) {
    const auto sn = static_cast<std::int64_t>(n);
    IntPoly sum;
    for (std::int64_t m = 0; m < sn; ++m) {
        IntPoly product = IntPoly::constant(q_binomial(sn, m, q));
        Int q_power = q;
        for (std::int64_t i = 1; i < sn - m; ++i) {
            product *= IntPoly(std::vector<Int>{1, q_power});
            q_power *= q;
        }
        sum += product;
    }
    return kOne + kT * sum;
}

IntPoly closed_dual_complete(std::span<const std::size_t> m) {
    const std::vector<Int> sizes = complete_level_sizes(m);
    const std::size_t n = sizes.size() - 1;
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t a = k; a <= n; ++a) {
            Int c = sizes[a];
            for (std::size_t j = 1; j < k; ++j) c *= sizes[a - j] - 1;
            coeffs[k] += c;
        }
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace laygraph
