// compatibility.cpp -- pattern products, Brinkhuis sets and the class hypergraph

#include "brinkhuis/compatibility.hpp"

#include "brinkhuis/detail/parallel.hpp"
#include "brinkhuis/errors.hpp"

#include <algorithm>
#include <cstring>
#include <fmt/format.h>
#include <set>

namespace brinkhuis {

namespace {

void require_uniform_squarefree(const std::vector<Word>& words, std::size_t n)
{
    for (const Word& w : words) {
        if (w.size() != n)
            throw PreconditionViolated(
                fmt::format("word {} has length {}, expected {}", w.str(), w.size(), n));
        if (!is_squarefree(w))
            throw PreconditionViolated(fmt::format("word {} is not squarefree", w.str()));
    }
}

bool boundaries_squarefree(SymbolSpan u, std::size_t n)
{
    // Blocks of length n are squarefree, so any square covers a boundary.
    for (std::size_t b = n; b < u.size(); b += n)
        if (has_square_covering(u, b - 1, b, 1, u.size() / 2))
            return false;
    return true;
}

} // namespace

bool product_squarefree(const Word& x, const Word& y, const Word& z)
{
    require_uniform_squarefree({x, y, z}, x.size());
    if (x.empty())
        return true;
    const Word u = x + y + z;
    return boundaries_squarefree(u, x.size());
}

bool word_set_is_brinkhuis(const std::vector<Word>& words, std::size_t n)
{
    require_uniform_squarefree(words, n);
    const std::size_t k = words.size();
    std::vector<Symbol> buf(3 * n);
    for (const Pattern& p : reduced_patterns())
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t c = 0; c < k; ++c) {
                    const std::size_t slots[3] = {a, b, c};
                    for (std::size_t s = 0; s < 3; ++s)
                        for (std::size_t i = 0; i < n; ++i)
                            buf[s * n + i] = tau(words[slots[s]][i], p[s]);
                    if (!is_squarefree(buf))
                        return false;
                }
    return true;
}

ProductTable::ProductTable(std::vector<Word> words, unsigned workers)
  : words_(std::move(words))
{
    n_ = words_.empty() ? 0 : words_.front().size();
    require_uniform_squarefree(words_, n_);
    const std::size_t k = words_.size();
    images_.resize(3 * k * n_);
    for (unsigned power = 0; power < 3; ++power)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n_; ++i)
                images_[(power * k + j) * n_ + i] = tau(words_[j][i], power);

    pairs_.assign(2 * k * k, 1);
    if (n_ == 0)
        return;
    std::vector<std::uint64_t> failures(std::max(1u, workers), 0);
    detail::parallel_for(k, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        std::vector<Symbol> buf(2 * n_);
        for (std::size_t a = begin; a < end; ++a) {
            std::memcpy(buf.data(), image(a, 0), n_);
            for (unsigned shift = 1; shift <= 2; ++shift)
                for (std::size_t b = 0; b < k; ++b) {
                    std::memcpy(buf.data() + n_, image(b, shift), n_);
                    if (has_square_covering(buf, n_ - 1, n_, 1, n_)) {
                        pairs_[(shift - 1) * k * k + a * k + b] = 0;
                        ++failures[w];
                    }
                }
        }
    });
    for (const auto f : failures)
        pair_failures_ += f;
}

bool ProductTable::spanning_ok(const Pattern& pattern, std::size_t a, std::size_t b,
                               std::size_t c, std::vector<Symbol>& scratch) const
{
    if (n_ == 0)
        return true;
    scratch.resize(3 * n_);
    std::memcpy(scratch.data(), image(a, 0), n_);
    std::memcpy(scratch.data() + n_, image(b, pattern[1]), n_);
    std::memcpy(scratch.data() + 2 * n_, image(c, pattern[2]), n_);
    // A square covering positions n-1 and 2n has period >= (n+2)/2.
    return !has_square_covering(scratch, n_ - 1, 2 * n_, (n_ + 3) / 2, 3 * n_ / 2);
}

PatternProduct ProductTable::product(const Pattern& pattern, std::size_t a, std::size_t b,
                                     std::size_t c) const
{
    std::vector<Symbol> buf(3 * n_);
    std::memcpy(buf.data(), image(a, pattern[0]), n_);
    std::memcpy(buf.data() + n_, image(b, pattern[1]), n_);
    std::memcpy(buf.data() + 2 * n_, image(c, pattern[2]), n_);
    return PatternProduct{pattern, {a, b, c}, make_word_unchecked(std::move(buf))};
}

namespace {

void require_compatible_classes(std::initializer_list<const ReversalClass*> classes)
{
    const std::size_t n = (*classes.begin())->length();
    std::set<Word> seen;
    for (const ReversalClass* c : classes) {
        if (c->length() != n)
            throw PreconditionViolated("reversal classes have different word lengths");
        if (!seen.insert(c->representative()).second)
            throw PreconditionViolated(
                fmt::format("reversal class {} given twice", c->representative().str()));
        for (const Word& w : c->members())
            if (!is_squarefree(w) || !is_admissible(w))
                throw PreconditionViolated(fmt::format("word {} is not admissible", w.str()));
    }
}

std::vector<Word> member_union(std::initializer_list<const ReversalClass*> classes)
{
    std::vector<Word> out;
    for (const ReversalClass* c : classes)
        out.insert(out.end(), c->members().begin(), c->members().end());
    return out;
}

} // namespace

bool class_pair_good(const ReversalClass& c1, const ReversalClass& c2)
{
    require_compatible_classes({&c1, &c2});
    return word_set_is_brinkhuis(member_union({&c1, &c2}), c1.length());
}

bool class_triple_good(const ReversalClass& c1, const ReversalClass& c2, const ReversalClass& c3)
{
    require_compatible_classes({&c1, &c2, &c3});
    return word_set_is_brinkhuis(member_union({&c1, &c2, &c3}), c1.length());
}

namespace {

struct VertexWords {
    std::vector<std::vector<std::size_t>> of_vertex;
};

// All ordered word triples over the union of `vs`, each product tested
// through the table. With `require_all`, only triples touching every vertex
// of `vs` are tested; the caller has established the others. Pair edges
// must not use it: admissibility alone does not cover mixed products of a
// word and its reversal such as w . tau(rev w) . w.
bool table_union_good(const ProductTable& table, const VertexWords& vw,
                      const std::vector<std::size_t>& vs, bool require_all,
                      std::vector<Symbol>& scratch)
{
    std::vector<std::size_t> words;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (const std::size_t w : vw.of_vertex[vs[i]]) {
            words.push_back(w);
            owner.push_back(i);
        }
    const std::size_t full_mask = (std::size_t{1} << vs.size()) - 1;
    for (std::size_t x = 0; x < words.size(); ++x)
        for (std::size_t y = 0; y < words.size(); ++y)
            for (std::size_t z = 0; z < words.size(); ++z) {
                if (require_all) {
                    const std::size_t mask = (std::size_t{1} << owner[x]) |
                                             (std::size_t{1} << owner[y]) |
                                             (std::size_t{1} << owner[z]);
                    if (mask != full_mask)
                        continue;
                }
                for (const Pattern& p : reduced_patterns())
                    if (!table.triple_ok(p, words[x], words[y], words[z], scratch))
                        return false;
            }
    return true;
}

} // namespace

CompatibilityHypergraph build_hypergraph(std::vector<ReversalClass> classes, EdgeStrategy strategy,
                                         unsigned workers)
{
    std::sort(classes.begin(), classes.end());
    CompatibilityHypergraph g;
    if (classes.empty())
        return g;
    const std::size_t n = classes.front().length();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].length() != n)
            throw PreconditionViolated("reversal classes have different word lengths");
        if (i > 0 && classes[i] == classes[i - 1])
            throw PreconditionViolated(fmt::format("reversal class {} given twice",
                                                   classes[i].representative().str()));
        for (const Word& w : classes[i].members())
            if (!is_squarefree(w) || !is_admissible(w))
                throw PreconditionViolated(fmt::format("word {} is not admissible", w.str()));
    }
    g.vertices = std::move(classes);
    const std::size_t v = g.vertices.size();

    std::vector<Word> words;
    VertexWords vw;
    vw.of_vertex.resize(v);
    for (std::size_t i = 0; i < v; ++i)
        for (const Word& w : g.vertices[i].members()) {
            vw.of_vertex[i].push_back(words.size());
            words.push_back(w);
        }
    const ProductTable table(std::move(words), workers);

    std::vector<std::vector<std::uint8_t>> adjacent(v, std::vector<std::uint8_t>(v, 0));
    {
        std::vector<Symbol> scratch;
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j) {
                bool good;
                if (strategy == EdgeStrategy::Pruned)
                    good = table_union_good(table, vw, {i, j}, false, scratch);
                else
                    good = word_set_is_brinkhuis(
                        member_union({&g.vertices[i], &g.vertices[j]}), n);
                if (good) {
                    adjacent[i][j] = adjacent[j][i] = 1;
                    g.pair_edges.push_back({i, j});
                }
            }
    }

    std::vector<std::vector<TripleEdge>> found(std::max(1u, workers));
    detail::parallel_for(v, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        std::vector<Symbol> scratch;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < v; ++j) {
                if (strategy == EdgeStrategy::Pruned && !adjacent[i][j])
                    continue;
                for (std::size_t l = j + 1; l < v; ++l) {
                    bool good;
                    if (strategy == EdgeStrategy::Pruned) {
                        good = adjacent[i][l] && adjacent[j][l] &&
                               table_union_good(table, vw, {i, j, l}, true, scratch);
                    } else {
                        good = word_set_is_brinkhuis(
                            member_union({&g.vertices[i], &g.vertices[j], &g.vertices[l]}), n);
                    }
                    if (good)
                        found[w].push_back({i, j, l});
                }
            }
    });
    for (auto& part : found)
        g.triple_edges.insert(g.triple_edges.end(), part.begin(), part.end());
    return g;
}

Word apply_morphism(const std::vector<Word>& b0, const MorphismChoice& choice)
{
    if (!is_squarefree(choice.source))
        throw PreconditionViolated(
            fmt::format("morphism source {} is not squarefree", choice.source.str()));
    if (choice.assignment.size() != choice.source.size())
        throw PreconditionViolated("assignment length differs from source length");
    std::vector<Symbol> out;
    for (std::size_t p = 0; p < choice.source.size(); ++p) {
        const std::size_t j = choice.assignment[p];
        if (j >= b0.size())
            throw PreconditionViolated(
                fmt::format("assignment index {} out of range for {} words", j, b0.size()));
        for (const Symbol s : b0[j].symbols())
            out.push_back(tau(s, choice.source[p]));
    }
    return make_word_unchecked(std::move(out));
}

} // namespace brinkhuis
