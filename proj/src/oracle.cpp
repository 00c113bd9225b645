#include "laygraph/oracle.hpp"

namespace laygraph {

bool covers(const LayeredGraph& g, const Letter& a, const Letter& b) {
    return g.reachable(a.vertex, b.vertex) && a.k == g.level(a.vertex) - g.level(b.vertex);
}

std::vector<Letter> letters(const LayeredGraph& g) {
    std::vector<Letter> out;
    for (VertexIndex v = 0; v < g.star(); ++v) {
        for (std::size_t k = 1; k <= g.level(v); ++k) out.push_back({v, k});
    }
    return out;
}

WordCount count_words(const LayeredGraph& g, std::size_t truncation) {
    const std::size_t n = g.vertex_count();
    WordCount wc;
    wc.truncation = truncation;
    wc.counts.assign(truncation + 1, 0);
    wc.by_first.assign(n, std::vector<Int>(truncation + 1, 0));
    wc.counts[0] = 1;

    // Words starting with (v, k) of degree d: the letter alone when d == k,
    // otherwise (v, k) followed by any word of degree d - k whose first
    // letter it does not cover. The covered first letters are exactly those
    // at vertices u < v on level |v| - k, with any l.
    auto& by_first = wc.by_first;
    for (std::size_t d = 1; d <= truncation; ++d) {
        for (VertexIndex v = 0; v < g.star(); ++v) {
            const std::size_t top = g.level(v);
            Int sum = 0;
            for (std::size_t k = 1; k <= top && k <= d; ++k) {
                if (k == d) {
                    sum += 1;
                    continue;
                }
                const std::size_t rest = d - k;
                Int words = wc.counts[rest];
                for (VertexIndex u : g.below(v)) {
                    if (g.level(u) + k == top) words -= by_first[u][rest];
                }
                sum += words;
            }
            by_first[v][d] = std::move(sum);
        }
        for (VertexIndex v = 0; v < g.star(); ++v) wc.counts[d] += by_first[v][d];
    }
    return wc;
}

std::vector<Int> count_words_from(const LayeredGraph& g, std::string_view id, std::size_t truncation) {
    const VertexIndex v = g.index_of(id);
    if (v == g.star()) throw Error(ErrorKind::OutOfRange, "no letters start at the minimal vertex " + std::string(id));
    return count_words(g, truncation).by_first[v];
}

namespace {

class WordEnumerator {
public:
    WordEnumerator(const LayeredGraph& g, std::size_t cap) : g_(g), cap_(cap), letters_(letters(g)) {}

    std::vector<Word> run(std::size_t degree) {
        extend(degree);
        return std::move(out_);
    }

private:
    void extend(std::size_t remaining) {
        if (remaining == 0) {
            if (out_.size() >= cap_)
                throw Error(ErrorKind::EnumerationBudgetExceeded, "more than " + std::to_string(cap_) + " words");
            out_.push_back(current_);
            return;
        }
        for (const Letter& next : letters_) {
            if (next.k > remaining) continue;
            if (!current_.empty() && covers(g_, current_.back(), next)) continue;
            current_.push_back(next);
            extend(remaining - next.k);
            current_.pop_back();
        }
    }

    const LayeredGraph& g_;
    std::size_t cap_;
    std::vector<Letter> letters_;
    Word current_;
    std::vector<Word> out_;
};

}  // namespace

std::vector<Word> enumerate_words(const LayeredGraph& g, std::size_t degree, std::size_t word_cap) {
    return WordEnumerator(g, word_cap).run(degree);
}

std::string format_word(const LayeredGraph& g, const Word& w) {
    std::string out;
    for (const Letter& l : w) out += "(" + g.id(l.vertex) + "," + std::to_string(l.k) + ")";
    return out;
}

}  // namespace laygraph
