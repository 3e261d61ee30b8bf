// admissibility.cpp -- words that generate a special Brinkhuis triple alone

#include "brinkhuis/admissibility.hpp"

#include "brinkhuis/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace brinkhuis {

const std::array<Pattern, 12>& all_patterns()
{
    static const std::array<Pattern, 12> patterns = [] {
        std::array<Pattern, 12> out{};
        std::size_t k = 0;
        for (Symbol a = 0; a < 3; ++a)
            for (Symbol b = 0; b < 3; ++b)
                for (Symbol c = 0; c < 3; ++c)
                    if (a != b && b != c)
                        out[k++] = {a, b, c};
        return out;
    }();
    return patterns;
}

const std::array<Pattern, 4>& reduced_patterns()
{
    static const std::array<Pattern, 4> patterns{
        {{0, 1, 0}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}}};
    return patterns;
}

namespace {

bool pattern_product_squarefree(const Word& w, const Pattern& pattern, std::vector<Symbol>& buf)
{
    const std::size_t n = w.size();
    buf.resize(3 * n);
    for (std::size_t slot = 0; slot < 3; ++slot)
        for (std::size_t i = 0; i < n; ++i)
            buf[slot * n + i] = tau(w[i], pattern[slot]);
    return is_squarefree(buf);
}

} // namespace

bool is_admissible(const Word& w, PatternSet patterns)
{
    if (!is_squarefree(w))
        throw NotSquarefree(fmt::format("word {} is not squarefree", w.str()));
    std::vector<Symbol> buf;
    if (patterns == PatternSet::Reduced) {
        for (const Pattern& p : reduced_patterns())
            if (!pattern_product_squarefree(w, p, buf))
                return false;
    } else {
        for (const Pattern& p : all_patterns())
            if (!pattern_product_squarefree(w, p, buf))
                return false;
    }
    return true;
}

ReversalClass::ReversalClass(const Word& w)
{
    Word r = reverse(w);
    if (r == w) {
        members_.push_back(w);
    } else {
        members_.push_back(std::min(w, r));
        members_.push_back(std::max(w, r));
    }
}

std::vector<ReversalClass> reversal_classes(const std::vector<Word>& words)
{
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<ReversalClass> out;
    for (const Word& w : sorted) {
        const Word r = reverse(w);
        if (!std::binary_search(sorted.begin(), sorted.end(), r))
            throw PreconditionViolated(
                fmt::format("reversal of {} is missing from the word set", w.str()));
        if (w <= r)
            out.emplace_back(w);
    }
    return out;
}

std::vector<Word> admissible_words(const GrimmClass& cls, std::size_t n, PatternSet patterns)
{
    std::vector<Word> out;
    for (Word& w : enumerate_grimm_class(cls, n))
        if (is_admissible(w, patterns))
            out.push_back(std::move(w));
    return out;
}

std::vector<ReversalClass> admissible_classes(const GrimmClass& cls, std::size_t n)
{
    return reversal_classes(admissible_words(cls, n));
}

AdmissibleCensus admissible_census_of(std::size_t n, const std::vector<Word>& admissible)
{
    AdmissibleCensus c;
    c.n = n;
    c.b = admissible.size();
    for (const Word& w : admissible)
        if (is_palindrome(w))
            ++c.b_p;
    c.b_n = (c.b - c.b_p) / 2;
    return c;
}

AdmissibleCensus admissible_census(const GrimmClass& cls, std::size_t n)
{
    return admissible_census_of(n, admissible_words(cls, n));
}

} // namespace brinkhuis
