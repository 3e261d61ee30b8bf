// enumeration.cpp -- squarefree words by pruned backtracking

#include "brinkhuis/enumeration.hpp"

#include "brinkhuis/errors.hpp"

#include <fmt/format.h>

namespace brinkhuis {

const GrimmClass& grimm_class(GrimmClassId id)
{
    static const GrimmClass class1{GrimmClassId::Class1, Word::parse("012021"),
                                   Word::parse("120210")};
    static const GrimmClass class2{GrimmClassId::Class2, Word::parse("012102"),
                                   Word::parse("201210")};
    return id == GrimmClassId::Class1 ? class1 : class2;
}

const GrimmClass& grimm_class(int number)
{
    if (number != 1 && number != 2)
        throw DomainError(fmt::format("Grimm class must be 1 or 2, got {}", number));
    return grimm_class(static_cast<GrimmClassId>(number));
}

namespace {

// Depth-first extension of `buf`, one symbol at a time. `fixed` supplies the
// symbols forced at the tail (the class suffix); positions before
// n - fixed.size() range over the alphabet in increasing order.
class Backtracker {
public:
    Backtracker(std::size_t n, unsigned alphabet, SymbolSpan fixed_tail, const WordSink* sink)
      : n_(n), alphabet_(alphabet), tail_(fixed_tail), sink_(sink)
    {
        buf_.reserve(n);
    }

    // Returns false if the seed itself is not squarefree.
    bool seed(SymbolSpan prefix)
    {
        for (const Symbol s : prefix) {
            buf_.push_back(s);
            if (has_square_ending_at_last(buf_))
                return false;
        }
        return true;
    }

    std::uint64_t run()
    {
        if (buf_.size() > n_)
            return 0;
        extend();
        return count_;
    }

private:
    void extend()
    {
        if (buf_.size() == n_) {
            ++count_;
            if (sink_)
                (*sink_)(buf_);
            return;
        }
        const std::size_t free_len = n_ - tail_.size();
        if (buf_.size() >= free_len) {
            buf_.push_back(tail_[buf_.size() - free_len]);
            if (!has_square_ending_at_last(buf_))
                extend();
            buf_.pop_back();
            return;
        }
        for (unsigned c = 0; c < alphabet_; ++c) {
            if (!buf_.empty() && buf_.back() == c)
                continue;
            buf_.push_back(static_cast<Symbol>(c));
            if (!has_square_ending_at_last(buf_))
                extend();
            buf_.pop_back();
        }
    }

    std::size_t n_;
    unsigned alphabet_;
    SymbolSpan tail_;
    const WordSink* sink_;
    std::vector<Symbol> buf_;
    std::uint64_t count_ = 0;
};

void check_grimm_length(std::size_t n)
{
    if (n < kGrimmMinLength)
        throw LengthTooSmall(
            fmt::format("Grimm class words need length >= {}, got {}", kGrimmMinLength, n));
}

} // namespace

std::uint64_t count_squarefree(std::size_t n, unsigned alphabet_size)
{
    if (alphabet_size != 2 && alphabet_size != 3)
        throw DomainError(fmt::format("alphabet size must be 2 or 3, got {}", alphabet_size));
    Backtracker bt(n, alphabet_size, {}, nullptr);
    return bt.run();
}

void enumerate_squarefree(std::size_t n, const WordSink& sink)
{
    Backtracker bt(n, 3, {}, &sink);
    bt.run();
}

std::vector<Word> enumerate_squarefree(std::size_t n, std::size_t ceiling)
{
    if (n > ceiling)
        throw ResourceLimit(fmt::format(
            "refusing to materialize all squarefree words of length {} (ceiling {}); "
            "use a streaming sink",
            n, ceiling));
    std::vector<Word> out;
    enumerate_squarefree(n, [&](SymbolSpan w) { out.emplace_back(make_word_unchecked({w.begin(), w.end()})); });
    return out;
}

void enumerate_grimm_class(const GrimmClass& cls, std::size_t n, const WordSink& sink)
{
    check_grimm_length(n);
    Backtracker bt(n, 3, cls.suffix.symbols(), &sink);
    if (bt.seed(cls.prefix.symbols()))
        bt.run();
}

std::vector<Word> enumerate_grimm_class(const GrimmClass& cls, std::size_t n)
{
    std::vector<Word> out;
    enumerate_grimm_class(cls, n, [&](SymbolSpan w) { out.emplace_back(make_word_unchecked({w.begin(), w.end()})); });
    return out;
}

ClassCensus census_of(std::size_t n, const std::vector<Word>& words)
{
    ClassCensus c;
    c.n = n;
    c.a = words.size();
    for (const Word& w : words)
        if (is_palindrome(w))
            ++c.a_p;
    c.a_n = (c.a - c.a_p) / 2;
    return c;
}

ClassCensus census(const GrimmClass& cls, std::size_t n)
{
    return census_of(n, enumerate_grimm_class(cls, n));
}

} // namespace brinkhuis
