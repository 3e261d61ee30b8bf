// hyperclique.hpp -- maximum cliques of the 3-uniform compatibility hypergraph

#pragma once

#include "brinkhuis/compatibility.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace brinkhuis {

// Fixed-size bitset over vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), bits_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) noexcept { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const noexcept;
    bool none() const noexcept;
    // Lowest set index, or size() if empty.
    std::size_t first() const noexcept;
    // Index of the r-th set bit (0-based); r < count().
    std::size_t nth(std::size_t r) const noexcept;
    VertexSet& operator&=(const VertexSet& other) noexcept;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Vertex count, symmetric pair relation and triple edges. Every triple's
// three sub-pairs must be pair edges.
class CliqueInstance {
public:
    CliqueInstance() = default;
    // Throws IndexOutOfRange for bad indices and PreconditionViolated for
    // repeated indices within an edge or a triple with a missing sub-pair.
    CliqueInstance(std::size_t vertex_count, std::span<const PairEdge> pairs,
                   std::span<const TripleEdge> triples);

    static CliqueInstance from_hypergraph(const CompatibilityHypergraph& g);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    bool has_pair(std::size_t u, std::size_t v) const noexcept { return adjacency_[u].test(v); }
    bool has_triple(std::size_t u, std::size_t v, std::size_t w) const noexcept;

    const VertexSet& neighbors(std::size_t u) const noexcept { return adjacency_[u]; }
    // Vertices w with {u, v, w} a triple edge; requires has_pair(u, v).
    const VertexSet& triple_row(std::size_t u, std::size_t v) const noexcept
    {
        return rows_[row_index_[u * vertex_count_ + v]];
    }

    // Sorted edge lists.
    const std::vector<PairEdge>& pair_edges() const noexcept { return pair_list_; }
    const std::vector<TripleEdge>& triple_edges() const noexcept { return triple_list_; }

    // The instance induced on the distinct vertices `keep`; keep[i] becomes i.
    CliqueInstance induced(std::span<const std::size_t> keep) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<VertexSet> adjacency_;
    std::vector<std::uint32_t> row_index_;
    std::vector<VertexSet> rows_;
    std::vector<PairEdge> pair_list_;
    std::vector<TripleEdge> triple_list_;
};

enum class Certificate { ExactOptimal, HeuristicBest };

struct CliqueResult {
    std::vector<std::size_t> vertices; // sorted
    std::size_t size = 0;
    Certificate certificate = Certificate::HeuristicBest;
    std::optional<std::uint64_t> seed;
    bool budget_exhausted = false;
};

// Every 2-subset is a pair edge and every 3-subset a triple edge.
// Throws IndexOutOfRange / PreconditionViolated for bad or repeated indices.
bool is_clique(const CliqueInstance& inst, std::span<const std::size_t> vertices);

// Branch and bound in static degeneracy order. Deterministic. When the
// budget expires the best clique so far is returned with
// budget_exhausted set and a HeuristicBest certificate.
CliqueResult exact_max_clique(const CliqueInstance& inst,
                              std::optional<double> time_budget_seconds = std::nullopt);

struct RhcsOptions {
    std::uint64_t seed = 1;
    std::size_t restarts = 100;
    std::size_t plateau_limit = 50;
    unsigned workers = 1;
};

// Random restart greedy with random single-vertex drops to escape plateaus.
// Restart r draws from its own stream derived from (seed, r), so the result
// does not depend on the worker count.
CliqueResult rhcs(const CliqueInstance& inst, const RhcsOptions& options);

// Edges file: "vertices=<count>", then one "i j k" line per triple edge,
// then "i j" lines for pair edges not implied by any triple.
void write_edges(std::ostream& out, std::size_t vertex_count, std::span<const PairEdge> pairs,
                 std::span<const TripleEdge> triples);
void write_edges(std::ostream& out, const CompatibilityHypergraph& g);
// Pairs implied by triples are added. Throws FormatError.
CliqueInstance read_edges(std::istream& in);

} // namespace brinkhuis
