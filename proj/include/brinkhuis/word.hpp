// word.hpp -- ternary words and square detection

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brinkhuis {

using Symbol = std::uint8_t;
using SymbolSpan = std::span<const Symbol>;

// An immutable finite sequence over {0,1,2}. Ordering is lexicographic by
// symbol value, so "01" < "010" < "02".
class Word {
public:
    Word() = default;

    // Throws InvalidSymbol if any symbol is not in {0,1,2}.
    explicit Word(std::vector<Symbol> symbols);
    explicit Word(SymbolSpan symbols) : Word(std::vector<Symbol>(symbols.begin(), symbols.end())) {}

    // Parses the text form: characters '0','1','2', with ASCII spaces and
    // tabs ignored anywhere ("012021 020102" is a 12-symbol word).
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    SymbolSpan symbols() const noexcept { return symbols_; }
    operator SymbolSpan() const noexcept { return symbols_; }

    std::string str() const;

    friend Word operator+(const Word& a, const Word& b);

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

private:
    struct Unchecked {};
    Word(Unchecked, std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    friend Word make_word_unchecked(std::vector<Symbol> symbols);

    std::vector<Symbol> symbols_;
};

// For hot paths whose symbols are in range by construction.
Word make_word_unchecked(std::vector<Symbol> symbols);

// A square xx inside a word: symbols[start, start+period) equals
// symbols[start+period, start+2*period).
struct SquareWitness {
    std::size_t start = 0;
    std::size_t period = 0;

    friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
    friend auto operator<=>(const SquareWitness&, const SquareWitness&) = default;
};

// True if `witness` is in bounds for `w` and its two halves are equal.
bool witness_holds(SymbolSpan w, const SquareWitness& witness);

// Reference check: scans every (start, period) pair. Correct, O(n^3).
bool is_squarefree_oracle(SymbolSpan w);

// Fast squarefreeness test (divide and conquer over crossing squares,
// O(n log n)).
bool is_squarefree(SymbolSpan w);

// Returns the square with lexicographically minimal (start, period), or
// nullopt if `w` is squarefree.
std::optional<SquareWitness> find_square(SymbolSpan w);

// True iff some square of `w` ends at its last symbol. Precondition: w is
// nonempty. If w minus its last symbol is squarefree, w is squarefree iff
// this returns false.
bool has_square_ending_at_last(SymbolSpan w);

// True iff `w` contains a square [s, s+2p) with s <= lo, s+2p-1 >= hi and
// min_period <= p <= max_period. Requires lo <= hi < w.size().
bool has_square_covering(SymbolSpan w, std::size_t lo, std::size_t hi,
                         std::size_t min_period, std::size_t max_period);

// tau maps 0->1, 1->2, 2->0; applied `power` times (taken mod 3).
inline Symbol tau(Symbol s, unsigned power) noexcept
{
    return static_cast<Symbol>((s + power) % 3);
}
Word tau(const Word& w, unsigned power);
Word reverse(const Word& w);
bool is_palindrome(SymbolSpan w);

} // namespace brinkhuis
