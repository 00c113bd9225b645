// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laygraph/hilbert.hpp"
#include "laygraph/oracle.hpp"
#include "test_support.hpp"

using namespace laygraph;

namespace {

struct Report {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string join(const std::vector<Int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    return out.str();
}

std::string label(const LayeredGraph& g) { return g.name().value_or("graph"); }

std::string spec_label(const std::vector<std::size_t>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "]";
}

// 1 - t(2-t)^n built directly from its factors.
IntPoly boolean_denominator(std::size_t n) {
    return IntPoly{1} - IntPoly{0, 1} * pow(IntPoly{2, -1}, static_cast<unsigned>(n));
}

// The L(n,q) dual polynomial exactly as displayed in the source, without the
// leading factor t: 1 + sum_{m<n} [n m]_q prod_{i=1}^{n-m-1} (1 + t q^i).
IntPoly printed_dual_lnq(std::size_t n, std::int64_t q) {
    IntPoly total{1};
    for (std::size_t m = 0; m < n; ++m) {
        IntPoly term = IntPoly::constant(q_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), q));
        Int qi = 1;
        for (std::size_t i = 1; i + m < n; ++i) {
            qi *= q;
            term *= IntPoly(std::vector<Int>{1, qi});
        }
        total += term;
    }
    return total;
}

struct SubspaceCase {
    std::size_t n;
    std::int64_t q;
};

const std::vector<SubspaceCase> kSubspaceCases{{1, 2}, {2, 2}, {3, 2}, {2, 3}};
const std::vector<std::vector<std::size_t>> kCompleteSpecs{{2, 1}, {2, 2, 1}, {3, 2, 1}, {2, 3, 2, 1}};

void oracle_agrees(Report& r, const LayeredGraph& g, const IntSeries& series, std::size_t truncation) {
    const std::vector<Int> counts = count_words(g, truncation).counts;
    r.expect(counts == series.truncated(truncation).coeffs(),
             label(g) + ": oracle " + join(counts) + " vs series " + join(series.truncated(truncation).coeffs()));
}

void criterion_boolean(Report& r) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const LayeredGraph g = gen_boolean(n);
        const IntSeries series = hilbert_series(g, 10).series;
        const RationalFn closed(IntPoly{1, -1}, boolean_denominator(n));
        r.expect(series == closed.expand(10), label(g) + ": series " + join(series.coeffs()) + " vs closed form " +
                                                  join(closed.expand(10).coeffs()));
        if (n <= 4) oracle_agrees(r, g, series, 8);
    }
}

void criterion_subspace(Report& r) {
    for (auto [n, q] : kSubspaceCases) {
        const LayeredGraph g = gen_subspace(n, static_cast<std::uint32_t>(q));
        const IntSeries mobius = hilbert_series(g, 8, Method::mobius).series;
        const IntSeries chains = hilbert_series(g, 8, Method::chains).series;
        const IntSeries closed = closed_lnq(n, q).expand(8);
        r.expect(mobius == chains, label(g) + ": mobius " + join(mobius.coeffs()) + " vs chains " + join(chains.coeffs()));
        r.expect(mobius == closed, label(g) + ": mobius " + join(mobius.coeffs()) + " vs closed " + join(closed.coeffs()));
        oracle_agrees(r, g, mobius, 8);
        if (n == 3 && q == 2) {
            r.expect(g.vertex_count() == 16 && g.edge_count() == 35,
                     label(g) + ": expected 16 vertices and 35 edges, got " + std::to_string(g.vertex_count()) + " and " +
                         std::to_string(g.edge_count()));
        }
    }
}

void criterion_complete(Report& r) {
    // Re-derive D([2,2,1]) by listing chains before comparing with the literal.
    const LayeredGraph c221 = gen_complete(std::vector<std::size_t>{2, 2, 1});
    const IntPoly listed = laygraph::testing::chain_denominator(c221);
    r.expect(listed == IntPoly{1, -5, 6, -2}, "[2,2,1]: chain listing gives " + to_string(listed));
    r.note("D([2,2,1]) from chain listing: " + to_string(listed));

    for (const auto& m : kCompleteSpecs) {
        const LayeredGraph g = gen_complete(m);
        const IntPoly closed = closed_complete(m).denominator();
        const IntPoly chains = denominator_chains(g);
        const IntPoly mobius = denominator_mobius(g);
        const std::string name = spec_label(m);
        r.expect(closed == chains, name + ": closed " + to_string(closed) + " vs chains " + to_string(chains));
        r.expect(mobius == chains, name + ": mobius " + to_string(mobius) + " vs chains " + to_string(chains));
        r.expect(laygraph::testing::chain_denominator(g) == chains, name + ": chain listing disagrees");
        oracle_agrees(r, g, closed_complete(m).expand(8), 8);
    }
}

void criterion_free(Report& r) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::vector<std::size_t> m(n + 1, 1);
        const LayeredGraph g = gen_complete(m);
        std::vector<Int> powers;
        Int p = 1;
        for (std::size_t k = 0; k <= 12; ++k, p *= n) powers.push_back(p);
        const std::string name = spec_label(m);
        r.expect(hilbert_series(g, 12).series.coeffs() == powers, name + ": mobius series is not n^k");
        r.expect(hilbert_series(g, 12, Method::chains).series.coeffs() == powers, name + ": chains series is not n^k");
        r.expect(closed_complete(m).expand(12).coeffs() == powers, name + ": closed series is not n^k");
        r.expect(count_words(g, 12).counts == powers, name + ": oracle counts are not n^k");
        r.expect(closed_complete(m).denominator() == IntPoly{1, -1} * IntPoly{1, -static_cast<long long>(n)},
                 name + ": denominator is not (1-t)(1-nt)");
    }
}

void criterion_q_one(Report& r) {
    for (std::size_t n = 0; n <= 6; ++n) {
        const IntPoly d = closed_lnq(n, 1).denominator();
        r.expect(d == boolean_denominator(n), "n=" + std::to_string(n) + ": " + to_string(d));
        r.expect(d == closed_qn(n).denominator(), "n=" + std::to_string(n) + ": differs from closed_qn");
    }
}

void koszul(Report& r, const LayeredGraph& g) {
    const HilbertResult h = hilbert_series(g, 12);
    const DualResult dual = dual_series(g, 12);
    r.expect(h.series * substitute_neg(dual.series) == IntSeries::one(12), label(g) + ": h(t) h!(-t) != 1");
    r.expect(dual.polynomial.has_value(), label(g) + ": no dual polynomial");
    if (dual.polynomial) {
        r.expect(IntSeries::from_poly(*dual.polynomial, 12) == dual.series,
                 label(g) + ": dual polynomial does not match the dual series");
    }
}

void criterion_koszul(Report& r) {
    for (std::size_t n = 1; n <= 6; ++n) koszul(r, gen_boolean(n));
    for (auto [n, q] : kSubspaceCases) {
        const LayeredGraph g = gen_subspace(n, static_cast<std::uint32_t>(q));
        koszul(r, g);
        const IntPoly dual = *dual_series(g, 12).polynomial;
        const IntPoly corrected = closed_dual_lnq(n, q);
        r.expect(corrected == dual, label(g) + ": closed dual " + to_string(corrected) + " vs " + to_string(dual));
        const IntPoly printed = printed_dual_lnq(n, q);
        if (printed == dual) {
            r.expect(false, label(g) + ": uncorrected dual formula unexpectedly matches");
        } else {
            r.note("expected FAIL, uncorrected dual formula for " + label(g) + ": " + to_string(printed) + " != " +
                   to_string(dual) + " (constant term " + printed.coeff(0).str() + ")");
        }
        r.note("corrected dual formula for " + label(g) + ": " + to_string(corrected));
    }
    for (const auto& m : kCompleteSpecs) {
        const LayeredGraph g = gen_complete(m);
        koszul(r, g);
        const IntPoly dual = *dual_series(g, 12).polynomial;
        const IntPoly closed = closed_dual_complete(m);
        r.expect(closed == dual, spec_label(m) + ": closed dual " + to_string(closed) + " vs " + to_string(dual));
    }
}

void zeta_checks(Report& r, const LayeredGraph& g) {
    const ZetaMatrix z = zeta_matrix(g);
    const PolyMatrix inv = invert_zeta(z);
    const std::size_t n = g.vertex_count();
    r.expect(z.entries * inv == PolyMatrix::identity(n), label(g) + ": zeta * inverse != I");
    r.expect(inv * z.entries == PolyMatrix::identity(n), label(g) + ": inverse * zeta != I");
    const MobiusTable mu(g);
    for (VertexIndex i = 0; i < n; ++i) {
        for (VertexIndex j = 0; j < n; ++j) {
            const VertexIndex v = z.order[i], w = z.order[j];
            const IntPoly expected =
                g.geq(v, w) ? IntPoly::monomial(mu(v, w), g.level(v) - g.level(w)) : IntPoly{};
            if (inv(i, j) != expected) {
                r.expect(false, label(g) + ": inverse entry (" + g.id(v) + ", " + g.id(w) + ") is " +
                                    to_string(inv(i, j)));
                return;
            }
        }
    }
}

void criterion_mobius(Report& r) {
    std::vector<LayeredGraph> graphs;
    for (std::size_t n = 1; n <= 5; ++n) graphs.push_back(gen_boolean(n));
    for (auto [n, q] : kSubspaceCases) graphs.push_back(gen_subspace(n, static_cast<std::uint32_t>(q)));
    for (const auto& m : kCompleteSpecs) graphs.push_back(gen_complete(m));
    std::mt19937_64 rng(32);
    for (int i = 0; i < 40; ++i) graphs.push_back(LayeredGraph::validate(laygraph::testing::random_raw_graph(rng, 32, 5)));
    for (const LayeredGraph& g : graphs) zeta_checks(r, g);

    for (std::size_t n = 1; n <= 5; ++n) {
        const LayeredGraph g = gen_boolean(n);
        const MobiusTable mu(g);
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
                if (!g.geq(v, w)) continue;
                const Int expected = ((g.level(v) - g.level(w)) % 2 == 0) ? 1 : -1;
                r.expect(mu(v, w) == expected, label(g) + ": mu(" + g.id(v) + ", " + g.id(w) + ")");
            }
        }
    }
    for (auto [n, q] : kSubspaceCases) {
        const LayeredGraph g = gen_subspace(n, static_cast<std::uint32_t>(q));
        const MobiusTable mu(g);
        const auto closure = laygraph::testing::naive_closure(g);
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
                if (!g.geq(v, w)) continue;
                const std::size_t d = g.level(v) - g.level(w);
                Int expected = (d % 2 == 0) ? 1 : -1;
                const std::size_t exponent = d == 0 ? 0 : d * (d - 1) / 2;
                for (std::size_t i = 0; i < exponent; ++i) expected *= q;
                r.expect(mu(v, w) == expected, label(g) + ": mu(" + g.id(v) + ", " + g.id(w) + ")");
                r.expect(Int(laygraph::testing::chain_sum(closure, v, w)) == expected,
                         label(g) + ": chain sum for (" + g.id(v) + ", " + g.id(w) + ")");
            }
        }
    }
}

void criterion_random(Report& r) {
    std::mt19937_64 rng(20261016);
    for (int iter = 0; iter < 100; ++iter) {
        const LayeredGraph g = LayeredGraph::validate(laygraph::testing::random_raw_graph(rng, 20, 3));
        const std::string name = "random #" + std::to_string(iter);
        const HilbertResult h = hilbert_series(g, 6);
        r.expect(h.denominator.coeff(0) == 1, name + ": D(0) != 1");
        r.expect(h.denominator.coeff(1) == -Int(g.vertex_count()), name + ": D'(0) != -|V|");
        r.expect(h.series[0] == 1, name + ": h_0 != 1");
        r.expect(h.series[1] == Int(g.positive_count()), name + ": h_1 != |V+|");
        r.expect(count_words(g, 6).counts == h.series.coeffs(), name + ": oracle differs from series");
        const auto per_vertex = vertex_series(g, 6);
        IntSeries total = IntSeries::one(6);
        for (VertexIndex v = 0; v < g.star(); ++v) total += per_vertex[v];
        r.expect(total == h.series, name + ": vertex series do not partition h");
    }
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    std::function<void(Report&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "boolean lattices: series equals (1-t)/(1-t(2-t)^n), oracle agrees", 10.0, criterion_boolean},
        {2, "subspace lattices: mobius = chains = closed form = oracle", 30.0, criterion_subspace},
        {3, "complete layered graphs: closed = chains = mobius denominators, oracle agrees", 0.0, criterion_complete},
        {4, "free algebra: h_k = n^k", 0.0, criterion_free},
        {5, "q = 1 subspace denominator equals 1-t(2-t)^n", 0.0, criterion_q_one},
        {6, "Koszul identity and dual polynomial closed forms", 0.0, criterion_koszul},
        {7, "zeta inverse and Mobius closed forms", 0.0, criterion_mobius},
        {8, "structural invariants on 100 random graphs", 0.0, criterion_random},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Report report;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(report);
        } catch (const std::exception& e) {
            report.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "took %.2f s, budget %.0f s", seconds, c.budget_seconds);
            report.expect(false, buf);
        }
        const bool ok = report.failures.empty();
        if (!ok) ++failed;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", seconds);
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title << " (" << timing << ")\n";
        for (const auto& n : report.notes) std::cout << "       " << n << "\n";
        for (const auto& f : report.failures) std::cout << "       failure: " << f << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
