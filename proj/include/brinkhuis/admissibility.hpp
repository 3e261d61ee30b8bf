// admissibility.hpp -- words that generate a special Brinkhuis triple alone

#pragma once

#include "brinkhuis/enumeration.hpp"
#include "brinkhuis/word.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace brinkhuis {

// A squarefree length-3 pattern i1 i2 i3 over {0,1,2}.
using Pattern = std::array<Symbol, 3>;

// All 12 squarefree patterns in lexicographic order.
const std::array<Pattern, 12>& all_patterns();

// The patterns with i1 = 0: 010, 012, 020, 021. Every other pattern is a
// tau-shift of one of these, and tau preserves squarefreeness.
const std::array<Pattern, 4>& reduced_patterns();

enum class PatternSet { Reduced, Full };

// {w, tau(w), tau^2(w)} is a special Brinkhuis triple, i.e. every pattern
// product tau^i1(w) tau^i2(w) tau^i3(w) is squarefree.
// Throws NotSquarefree if w is not squarefree.
bool is_admissible(const Word& w, PatternSet patterns = PatternSet::Reduced);

// The pair {w, reverse(w)}, canonicalized by its lexicographically smaller
// member. Palindromes give singleton classes.
class ReversalClass {
public:
    explicit ReversalClass(const Word& w);

    const Word& representative() const noexcept { return members_.front(); }
    // Sorted; one element if palindromic, else two.
    const std::vector<Word>& members() const noexcept { return members_; }
    bool palindromic() const noexcept { return members_.size() == 1; }
    std::size_t length() const noexcept { return representative().size(); }

    friend bool operator==(const ReversalClass& a, const ReversalClass& b)
    {
        return a.representative() == b.representative();
    }
    friend auto operator<=>(const ReversalClass& a, const ReversalClass& b)
    {
        return a.representative() <=> b.representative();
    }

private:
    std::vector<Word> members_;
};

// Groups words into reversal classes sorted by representative. Throws
// PreconditionViolated if some word's reversal is missing from `words`.
std::vector<ReversalClass> reversal_classes(const std::vector<Word>& words);

struct AdmissibleCensus {
    std::size_t n = 0;
    std::uint64_t b = 0;
    std::uint64_t b_p = 0;
    std::uint64_t b_n = 0;

    friend bool operator==(const AdmissibleCensus&, const AdmissibleCensus&) = default;
};

std::vector<Word> admissible_words(const GrimmClass& cls, std::size_t n,
                                   PatternSet patterns = PatternSet::Reduced);
std::vector<ReversalClass> admissible_classes(const GrimmClass& cls, std::size_t n);
AdmissibleCensus admissible_census(const GrimmClass& cls, std::size_t n);
AdmissibleCensus admissible_census_of(std::size_t n, const std::vector<Word>& admissible);

} // namespace brinkhuis
