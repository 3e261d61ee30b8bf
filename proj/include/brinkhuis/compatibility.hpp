// compatibility.hpp -- pattern products, Brinkhuis sets and the class hypergraph

#pragma once

#include "brinkhuis/admissibility.hpp"
#include "brinkhuis/word.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace brinkhuis {

// tau^i1(w_j1) tau^i2(w_j2) tau^i3(w_j3) for a squarefree pattern i1 i2 i3.
struct PatternProduct {
    Pattern pattern{};
    std::array<std::size_t, 3> slots{};
    Word product;
};

// True iff x.y.z is squarefree. Squares of x.y.z lie inside x.y, inside
// y.z, or span all of y; each case is checked separately.
// Throws PreconditionViolated unless x, y, z are squarefree of equal length.
bool product_squarefree(const Word& x, const Word& y, const Word& z);

// True iff {words, tau(words), tau^2(words)} is a special Brinkhuis triple:
// every pattern product over ordered word choices (repetition allowed) is
// squarefree. Throws PreconditionViolated unless every word is squarefree
// with length n.
bool word_set_is_brinkhuis(const std::vector<Word>& words, std::size_t n);

// Precomputed tau images of a fixed word list plus the table of pair
// boundaries: pair_ok(a, d, b) is true iff w_a . tau^d(w_b) is squarefree.
// Every product check with i1 = 0 reduces to two pair lookups and a test
// for squares spanning the middle word. Immutable after construction, so
// safe to share between threads.
class ProductTable {
public:
    // Words must be squarefree and of equal length (PreconditionViolated).
    explicit ProductTable(std::vector<Word> words, unsigned workers = 1);

    std::size_t size() const noexcept { return words_.size(); }
    std::size_t length() const noexcept { return n_; }
    const std::vector<Word>& words() const noexcept { return words_; }

    // tau^power applied to word j, as n contiguous symbols.
    const Symbol* image(std::size_t j, unsigned power) const noexcept
    {
        return images_.data() + (static_cast<std::size_t>(power % 3) * words_.size() + j) * n_;
    }

    // shift must be 1 or 2.
    bool pair_ok(std::size_t a, unsigned shift, std::size_t b) const noexcept
    {
        return pairs_[(shift - 1) * words_.size() * words_.size() + a * words_.size() + b] != 0;
    }

    // Number of false pair entries.
    std::uint64_t pair_failures() const noexcept { return pair_failures_; }

    // Pattern must have i1 = 0. Assumes both pair boundaries are good; checks
    // only squares that cover the whole middle word. `scratch` is resized.
    bool spanning_ok(const Pattern& pattern, std::size_t a, std::size_t b, std::size_t c,
                     std::vector<Symbol>& scratch) const;

    // Complete test of one product with i1 = 0.
    bool triple_ok(const Pattern& pattern, std::size_t a, std::size_t b, std::size_t c,
                   std::vector<Symbol>& scratch) const
    {
        return pair_ok(a, pattern[1], b) && pair_ok(b, (pattern[2] + 3 - pattern[1]) % 3, c) &&
               spanning_ok(pattern, a, b, c, scratch);
    }

    PatternProduct product(const Pattern& pattern, std::size_t a, std::size_t b,
                           std::size_t c) const;

private:
    std::vector<Word> words_;
    std::size_t n_ = 0;
    std::vector<Symbol> images_;
    std::vector<std::uint8_t> pairs_;
    std::uint64_t pair_failures_ = 0;
};

// Both classes' members together form a Brinkhuis set. Classes must be
// distinct, of equal length, with admissible members (PreconditionViolated).
bool class_pair_good(const ReversalClass& c1, const ReversalClass& c2);
bool class_triple_good(const ReversalClass& c1, const ReversalClass& c2,
                       const ReversalClass& c3);

using PairEdge = std::array<std::size_t, 2>;
using TripleEdge = std::array<std::size_t, 3>;

// Vertices are reversal classes; an edge is a pair or triple of distinct
// vertices whose member union is a Brinkhuis set. Edges are sorted
// internally and listed in lexicographic order.
struct CompatibilityHypergraph {
    std::vector<ReversalClass> vertices;
    std::vector<PairEdge> pair_edges;
    std::vector<TripleEdge> triple_edges;
};

enum class EdgeStrategy {
    // Skip triples with a missing sub-pair; reuse the pair boundary table.
    Pruned,
    // Evaluate every triple from the definition.
    Unpruned,
};

// Vertices must be distinct, uniform in length, and admissible.
CompatibilityHypergraph build_hypergraph(std::vector<ReversalClass> classes,
                                         EdgeStrategy strategy = EdgeStrategy::Pruned,
                                         unsigned workers = 1);

// A choice of one B0 word per position of a squarefree source word.
struct MorphismChoice {
    Word source;
    std::vector<std::size_t> assignment;
};

// Concatenation over positions p of tau^{source[p]}(b0[assignment[p]]).
Word apply_morphism(const std::vector<Word>& b0, const MorphismChoice& choice);

} // namespace brinkhuis
