// hyperclique.cpp -- maximum cliques of the 3-uniform compatibility hypergraph

#include "brinkhuis/hyperclique.hpp"

#include "brinkhuis/detail/parallel.hpp"
#include "brinkhuis/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fmt/format.h>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace brinkhuis {

std::size_t VertexSet::count() const noexcept
{
    std::size_t c = 0;
    for (const auto w : bits_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::none() const noexcept
{
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::first() const noexcept
{
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(bits_[i]));
    return size_;
}

std::size_t VertexSet::nth(std::size_t r) const noexcept
{
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t w = bits_[i];
        const auto c = static_cast<std::size_t>(std::popcount(w));
        if (r >= c) {
            r -= c;
            continue;
        }
        while (r--)
            w &= w - 1;
        return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return size_;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] &= other.bits_[i];
    return *this;
}

namespace {

constexpr std::uint32_t kNoRow = std::numeric_limits<std::uint32_t>::max();

void check_index(std::size_t i, std::size_t count)
{
    if (i >= count)
        throw IndexOutOfRange(fmt::format("vertex index {} out of range (count {})", i, count));
}

} // namespace

CliqueInstance::CliqueInstance(std::size_t vertex_count, std::span<const PairEdge> pairs,
                               std::span<const TripleEdge> triples)
  : vertex_count_(vertex_count),
    adjacency_(vertex_count, VertexSet(vertex_count)),
    row_index_(vertex_count * vertex_count, kNoRow)
{
    if (vertex_count >= kNoRow)
        throw PreconditionViolated("too many vertices");
    std::set<PairEdge> pair_set;
    for (PairEdge e : pairs) {
        check_index(e[0], vertex_count);
        check_index(e[1], vertex_count);
        if (e[0] == e[1])
            throw PreconditionViolated(fmt::format("pair edge repeats vertex {}", e[0]));
        std::sort(e.begin(), e.end());
        pair_set.insert(e);
    }
    pair_list_.assign(pair_set.begin(), pair_set.end());
    for (const auto& [u, v] : pair_list_) {
        adjacency_[u].set(v);
        adjacency_[v].set(u);
        row_index_[u * vertex_count + v] = row_index_[v * vertex_count + u] =
            static_cast<std::uint32_t>(rows_.size());
        rows_.emplace_back(vertex_count);
    }

    std::set<TripleEdge> triple_set;
    for (TripleEdge t : triples) {
        for (const auto i : t)
            check_index(i, vertex_count);
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw PreconditionViolated(fmt::format("triple edge repeats a vertex"));
        if (!has_pair(t[0], t[1]) || !has_pair(t[0], t[2]) || !has_pair(t[1], t[2]))
            throw PreconditionViolated(
                fmt::format("triple {} {} {} has a sub-pair that is not a pair edge", t[0], t[1], t[2]));
        triple_set.insert(t);
    }
    triple_list_.assign(triple_set.begin(), triple_set.end());
    for (const auto& [a, b, c] : triple_list_) {
        rows_[row_index_[a * vertex_count + b]].set(c);
        rows_[row_index_[a * vertex_count + c]].set(b);
        rows_[row_index_[b * vertex_count + c]].set(a);
    }
}

CliqueInstance CliqueInstance::from_hypergraph(const CompatibilityHypergraph& g)
{
    return CliqueInstance(g.vertices.size(), g.pair_edges, g.triple_edges);
}

bool CliqueInstance::has_triple(std::size_t u, std::size_t v, std::size_t w) const noexcept
{
    return has_pair(u, v) && triple_row(u, v).test(w);
}

CliqueInstance CliqueInstance::induced(std::span<const std::size_t> keep) const
{
    std::vector<std::size_t> label(vertex_count_, kNoRow);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_index(keep[i], vertex_count_);
        label[keep[i]] = i;
    }
    std::vector<PairEdge> pairs;
    for (const auto& [u, v] : pair_list_)
        if (label[u] != kNoRow && label[v] != kNoRow)
            pairs.push_back({label[u], label[v]});
    std::vector<TripleEdge> triples;
    for (const auto& [a, b, c] : triple_list_)
        if (label[a] != kNoRow && label[b] != kNoRow && label[c] != kNoRow)
            triples.push_back({label[a], label[b], label[c]});
    return CliqueInstance(keep.size(), pairs, triples);
}

bool is_clique(const CliqueInstance& inst, std::span<const std::size_t> vertices)
{
    for (const auto v : vertices)
        check_index(v, inst.vertex_count());
    const std::size_t k = vertices.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (vertices[i] == vertices[j])
                throw PreconditionViolated(fmt::format("vertex {} listed twice", vertices[i]));
            if (!inst.has_pair(vertices[i], vertices[j]))
                return false;
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                if (!inst.has_triple(vertices[i], vertices[j], vertices[l]))
                    return false;
    return true;
}

namespace {

// Vertices ordered by repeatedly removing a minimum-degree vertex of the
// pair graph (ties: lowest index).
std::vector<std::size_t> degeneracy_order(const CliqueInstance& inst)
{
    const std::size_t v = inst.vertex_count();
    std::vector<std::size_t> degree(v);
    for (std::size_t i = 0; i < v; ++i)
        degree[i] = inst.neighbors(i).count();
    std::vector<bool> removed(v, false);
    std::vector<std::size_t> order;
    order.reserve(v);
    for (std::size_t step = 0; step < v; ++step) {
        std::size_t best = v;
        for (std::size_t i = 0; i < v; ++i)
            if (!removed[i] && (best == v || degree[i] < degree[best]))
                best = i;
        removed[best] = true;
        order.push_back(best);
        for (std::size_t i = 0; i < v; ++i)
            if (!removed[i] && inst.has_pair(best, i))
                --degree[i];
    }
    return order;
}

class BranchAndBound {
public:
    BranchAndBound(const CliqueInstance& inst, std::optional<double> budget)
      : order_(degeneracy_order(inst)),
        inst_(inst.induced(order_)),
        start_(std::chrono::steady_clock::now()),
        budget_(budget)
    {
    }

    CliqueResult run()
    {
        const std::size_t v = inst_.vertex_count();
        VertexSet all(v);
        for (std::size_t i = 0; i < v; ++i)
            all.set(i);
        std::vector<std::size_t> current;
        expand(current, all);

        CliqueResult r;
        for (const auto i : best_)
            r.vertices.push_back(order_[i]);
        std::sort(r.vertices.begin(), r.vertices.end());
        r.size = r.vertices.size();
        r.budget_exhausted = expired_;
        r.certificate = expired_ ? Certificate::HeuristicBest : Certificate::ExactOptimal;
        return r;
    }

private:
    bool out_of_time()
    {
        if (expired_)
            return true;
        if (!budget_ || (++nodes_ & 1023) != 0)
            return false;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        expired_ = elapsed.count() > *budget_;
        return expired_;
    }

    void expand(std::vector<std::size_t>& current, VertexSet candidates)
    {
        if (current.size() > best_.size())
            best_ = current;
        while (!candidates.none()) {
            if (out_of_time())
                return;
            if (current.size() + candidates.count() <= best_.size())
                return;
            const std::size_t v = candidates.first();
            candidates.reset(v);
            VertexSet next = candidates;
            next &= inst_.neighbors(v);
            for (const auto u : current) {
                if (next.none())
                    break;
                next &= inst_.triple_row(u, v);
            }
            current.push_back(v);
            expand(current, std::move(next));
            current.pop_back();
        }
    }

    std::vector<std::size_t> order_;
    CliqueInstance inst_; // relabelled so vertex i is order_[i]
    std::vector<std::size_t> best_;
    std::chrono::steady_clock::time_point start_;
    std::optional<double> budget_;
    std::uint64_t nodes_ = 0;
    bool expired_ = false;
};

// Larger first; among equal sizes the lexicographically smaller vertex list.
bool better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

class RandomGreedy {
public:
    RandomGreedy(const CliqueInstance& inst, std::size_t plateau_limit)
      : inst_(inst), plateau_limit_(plateau_limit)
    {
    }

    std::vector<std::size_t> restart(std::mt19937_64& rng)
    {
        const std::size_t v = inst_.vertex_count();
        std::vector<std::size_t> clique{std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)};
        grow(clique, v, rng);
        std::vector<std::size_t> best = sorted(clique);
        std::size_t stall = 0;
        while (stall < plateau_limit_) {
            const std::size_t drop =
                std::uniform_int_distribution<std::size_t>(0, clique.size() - 1)(rng);
            const std::size_t dropped = clique[drop];
            clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(drop));
            grow(clique, dropped, rng);
            auto candidate = sorted(clique);
            if (candidate.size() > best.size()) {
                best = std::move(candidate);
                stall = 0;
            } else {
                if (candidate.size() < best.size())
                    clique = best;
                ++stall;
            }
        }
        return best;
    }

private:
    static std::vector<std::size_t> sorted(std::vector<std::size_t> c)
    {
        std::sort(c.begin(), c.end());
        return c;
    }

    // Vertices outside `clique` that extend it.
    VertexSet compatible(const std::vector<std::size_t>& clique) const
    {
        const std::size_t v = inst_.vertex_count();
        VertexSet out(v);
        for (std::size_t i = 0; i < v; ++i)
            out.set(i);
        for (const auto u : clique) {
            out &= inst_.neighbors(u);
        }
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                out &= inst_.triple_row(clique[i], clique[j]);
        return out;
    }

    // Adds uniformly random compatible vertices until maximal; `banned`
    // (or vertex_count) is never re-added in this call.
    void grow(std::vector<std::size_t>& clique, std::size_t banned, std::mt19937_64& rng) const
    {
        VertexSet cand = compatible(clique);
        if (banned < cand.size())
            cand.reset(banned);
        while (!cand.none()) {
            const std::size_t r =
                std::uniform_int_distribution<std::size_t>(0, cand.count() - 1)(rng);
            const std::size_t x = cand.nth(r);
            cand.reset(x);
            cand &= inst_.neighbors(x);
            for (const auto u : clique)
                cand &= inst_.triple_row(u, x);
            clique.push_back(x);
        }
    }

    const CliqueInstance& inst_;
    std::size_t plateau_limit_;
};

} // namespace

CliqueResult exact_max_clique(const CliqueInstance& inst, std::optional<double> time_budget_seconds)
{
    return BranchAndBound(inst, time_budget_seconds).run();
}

CliqueResult rhcs(const CliqueInstance& inst, const RhcsOptions& options)
{
    if (options.restarts < 1)
        throw PreconditionViolated("rhcs needs at least one restart");
    CliqueResult result;
    result.seed = options.seed;
    result.certificate = Certificate::HeuristicBest;
    if (inst.vertex_count() == 0)
        return result;

    const unsigned workers = detail::resolve_workers(options.workers);
    std::vector<std::vector<std::size_t>> best(workers);
    detail::parallel_for(options.restarts, workers,
                         [&](unsigned w, std::size_t begin, std::size_t end) {
                             RandomGreedy greedy(inst, options.plateau_limit);
                             for (std::size_t r = begin; r < end; ++r) {
                                 std::seed_seq seq{
                                     static_cast<std::uint32_t>(options.seed),
                                     static_cast<std::uint32_t>(options.seed >> 32),
                                     static_cast<std::uint32_t>(r),
                                     static_cast<std::uint32_t>(r >> 32)};
                                 std::mt19937_64 rng(seq);
                                 auto c = greedy.restart(rng);
                                 if (best[w].empty() || better(c, best[w]))
                                     best[w] = std::move(c);
                             }
                         });
    for (auto& b : best)
        if (!b.empty() && (result.vertices.empty() || better(b, result.vertices)))
            result.vertices = std::move(b);
    result.size = result.vertices.size();
    return result;
}

void write_edges(std::ostream& out, std::size_t vertex_count, std::span<const PairEdge> pairs,
                 std::span<const TripleEdge> triples)
{
    std::set<PairEdge> implied;
    for (TripleEdge t : triples) {
        std::sort(t.begin(), t.end());
        implied.insert({t[0], t[1]});
        implied.insert({t[0], t[2]});
        implied.insert({t[1], t[2]});
    }
    out << "vertices=" << vertex_count << '\n';
    for (const auto& [a, b, c] : triples)
        out << a << ' ' << b << ' ' << c << '\n';
    for (PairEdge e : pairs) {
        std::sort(e.begin(), e.end());
        if (!implied.count(e))
            out << e[0] << ' ' << e[1] << '\n';
    }
}

void write_edges(std::ostream& out, const CompatibilityHypergraph& g)
{
    write_edges(out, g.vertices.size(), g.pair_edges, g.triple_edges);
}

CliqueInstance read_edges(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> vertices;
    std::set<PairEdge> pairs;
    std::vector<TripleEdge> triples;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        if (!vertices) {
            const std::string key = "vertices=";
            if (line.rfind(key, 0) != 0)
                throw FormatError(fmt::format("line {}: expected 'vertices=<count>'", line_no));
            try {
                std::size_t used = 0;
                vertices = std::stoull(line.substr(key.size()), &used);
                if (key.size() + used != line.size())
                    throw FormatError("");
            } catch (const std::exception&) {
                throw FormatError(fmt::format("line {}: bad vertex count", line_no));
            }
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::size_t> idx;
        long long x;
        while (fields >> x) {
            if (x < 0)
                throw FormatError(fmt::format("line {}: negative vertex index", line_no));
            idx.push_back(static_cast<std::size_t>(x));
        }
        if (!fields.eof())
            throw FormatError(fmt::format("line {}: expected vertex indices", line_no));
        if (idx.size() == 2) {
            pairs.insert({std::min(idx[0], idx[1]), std::max(idx[0], idx[1])});
        } else if (idx.size() == 3) {
            TripleEdge t{idx[0], idx[1], idx[2]};
            std::sort(t.begin(), t.end());
            triples.push_back(t);
            pairs.insert({t[0], t[1]});
            pairs.insert({t[0], t[2]});
            pairs.insert({t[1], t[2]});
        } else {
            throw FormatError(fmt::format("line {}: expected 2 or 3 vertex indices", line_no));
        }
    }
    if (!vertices)
        throw FormatError("missing 'vertices=<count>' header");
    try {
        const std::vector<PairEdge> pair_list(pairs.begin(), pairs.end());
        return CliqueInstance(*vertices, pair_list, triples);
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

} // namespace brinkhuis
