#ifndef LAYGRAPH_ORACLE_HPP
#define LAYGRAPH_ORACLE_HPP

// Independent ground truth for the Hilbert series: graded counts of the
// normal-word basis, where a word is a sequence of letters (v, k) with
// 1 <= k <= |v| and no letter covering its successor.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "laygraph/graph.hpp"
#include "laygraph/series.hpp"

namespace laygraph {

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

struct Letter {
    VertexIndex vertex;
    std::size_t k;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// (v, k) covers (u, l) iff v > u and k = |v| - |u|; l plays no part.
bool covers(const LayeredGraph& g, const Letter& a, const Letter& b);

/// All letters of g in canonical order (vertex index, then k).
std::vector<Letter> letters(const LayeredGraph& g);

struct WordCount {
    std::size_t truncation = 0;
    /// counts[d] = number of basis words of degree d.
    std::vector<Int> counts;
    /// by_first[v][d] = number of basis words of degree d starting at v.
    /// The row of the minimal vertex is all zeros.
    std::vector<std::vector<Int>> by_first;
};

/// Transfer-matrix count over the last-letter state; never lists words.
WordCount count_words(const LayeredGraph& g, std::size_t truncation);

/// Per-degree counts of basis words whose first letter sits at vertex id.
/// Throws GraphError(UnknownEndpoint) for unknown ids and OutOfRange for
/// the minimal vertex.
std::vector<Int> count_words_from(const LayeredGraph& g, std::string_view id, std::size_t truncation);

/// Explicit list of the basis words of one degree, sorted by letter order.
/// Throws EnumerationBudgetExceeded above word_cap words.
std::vector<Word> enumerate_words(const LayeredGraph& g, std::size_t degree, std::size_t word_cap = kDefaultWordCap);

/// "(id,k)(id,k)..."; the empty word formats as "".
std::string format_word(const LayeredGraph& g, const Word& w);

}  // namespace laygraph

#endif  // LAYGRAPH_ORACLE_HPP
