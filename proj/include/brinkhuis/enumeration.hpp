// enumeration.hpp -- squarefree words by pruned backtracking

#pragma once

#include "brinkhuis/word.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace brinkhuis {

// The two prefix/suffix classes that contain every special Brinkhuis triple.
// The suffix of each class is the reversal of its prefix, so both classes
// are closed under reversal.
enum class GrimmClassId { Class1 = 1, Class2 = 2 };

struct GrimmClass {
    GrimmClassId id;
    Word prefix;
    Word suffix;

    int number() const { return static_cast<int>(id); }
};

const GrimmClass& grimm_class(GrimmClassId id);
// Accepts 1 or 2; throws DomainError otherwise.
const GrimmClass& grimm_class(int number);

inline constexpr std::size_t kGrimmAffixLength = 6;
inline constexpr std::size_t kGrimmMinLength = 2 * kGrimmAffixLength;

// a == a_p + 2 * a_n. a_n counts unordered {w, reverse(w)} pairs with
// w != reverse(w), not the nonpalindromic words themselves.
struct ClassCensus {
    std::size_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t a_p = 0;
    std::uint64_t a_n = 0;

    friend bool operator==(const ClassCensus&, const ClassCensus&) = default;
};

using WordSink = std::function<void(SymbolSpan)>;

// Number of squarefree words of length n over {0..alphabet_size-1}.
// alphabet_size must be 2 or 3.
std::uint64_t count_squarefree(std::size_t n, unsigned alphabet_size = 3);

inline constexpr std::size_t kDefaultEnumerationCeiling = 30;

// All ternary squarefree words of length n, sorted. Refuses (ResourceLimit)
// when n > ceiling; use the sink overload for longer words.
std::vector<Word> enumerate_squarefree(std::size_t n,
                                       std::size_t ceiling = kDefaultEnumerationCeiling);

// Streams the same words in the same (lexicographic) order; no ceiling.
void enumerate_squarefree(std::size_t n, const WordSink& sink);

// Squarefree words of length n with the class's prefix and suffix.
// Throws LengthTooSmall when n < 12.
std::vector<Word> enumerate_grimm_class(const GrimmClass& cls, std::size_t n);
void enumerate_grimm_class(const GrimmClass& cls, std::size_t n, const WordSink& sink);

ClassCensus census(const GrimmClass& cls, std::size_t n);
ClassCensus census_of(std::size_t n, const std::vector<Word>& words);

} // namespace brinkhuis
