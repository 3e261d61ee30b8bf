#include "brinkhuis/errors.hpp"
#include "brinkhuis/word.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <random>

using namespace brinkhuis;

namespace {

Word W(const char* s) { return Word::parse(s); }

} // namespace

TEST_CASE("word parsing and text form")
{
    CHECK(W("012021 020102").size() == 12);
    CHECK(W("0\t1 2").str() == "012");
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("01x2"), InvalidSymbol);
    CHECK_THROWS_AS(Word(std::vector<Symbol>{0, 3}), InvalidSymbol);
    try {
        W("01x2");
    } catch (const InvalidSymbol& e) {
        CHECK(e.column() == 3);
    }
}

TEST_CASE("lexicographic order")
{
    CHECK(W("01") < W("010"));
    CHECK(W("010") < W("02"));
    CHECK(W("") < W("0"));
    CHECK(W("12") == W("1 2"));
}

TEST_CASE("squarefree oracle examples")
{
    CHECK(is_squarefree_oracle(W("010")));
    CHECK_FALSE(is_squarefree_oracle(W("0101")));
    CHECK(is_squarefree_oracle(W("210201202120102012")));
    CHECK(is_squarefree_oracle(W("")));
    CHECK(is_squarefree_oracle(W("2")));
}

TEST_CASE("find_square examples")
{
    CHECK_FALSE(find_square(W("0120")).has_value());
    CHECK(find_square(W("012012")) == SquareWitness{0, 3});
    CHECK(find_square(W("0101")) == SquareWitness{0, 2});
    // minimal start wins over minimal period: "1212" at 1 before "00" at 5
    CHECK(find_square(W("0121200")) == SquareWitness{1, 2});
}

TEST_CASE("find_square agrees with the oracle on all words of length <= 12")
{
    for (std::size_t n = 0; n <= 12; ++n)
        for (const auto& s : oracle::all_words(n)) {
            const auto got = find_square(s);
            const bool oracle_free = is_squarefree_oracle(s);
            REQUIRE(got.has_value() == !oracle_free);
            REQUIRE(is_squarefree(s) == oracle_free);
            if (got)
                REQUIRE(witness_holds(s, *got));
        }
}

TEST_CASE("find_square agrees with the oracle on random long words")
{
    std::mt19937_64 rng(20160416);
    // Mostly near-squarefree inputs: factors of random squarefree words,
    // half of them with one symbol changed. Fully random words almost always
    // have a square within their first few symbols.
    std::vector<Word> pool;
    for (int i = 0; i < 500; ++i)
        pool.push_back(oracle::random_squarefree(rng, 200));
    std::size_t squarefree_seen = 0;
    for (int iter = 0; iter < 100000; ++iter) {
        const std::size_t n = 13 + rng() % 188;
        Word w;
        if (iter % 10 == 0) {
            w = oracle::random_word(rng, n);
        } else {
            const Word& base = pool[rng() % pool.size()];
            const std::size_t off = rng() % (base.size() - n + 1);
            w = Word(base.symbols().subspan(off, n));
        }
        if (iter % 2 == 1) {
            std::vector<Symbol> s(w.symbols().begin(), w.symbols().end());
            s[rng() % n] = static_cast<Symbol>(rng() % 3);
            w = Word(s);
        }
        const bool oracle_free = is_squarefree_oracle(w);
        squarefree_seen += oracle_free;
        const auto got = find_square(w);
        REQUIRE(got.has_value() == !oracle_free);
        if (got) {
            REQUIRE(witness_holds(w, *got));
            REQUIRE(got->start + 2 * got->period <= w.size());
        }
    }
    CHECK(squarefree_seen > 30000);
}

TEST_CASE("witness is the lexicographically minimal square")
{
    for (std::size_t n = 0; n <= 9; ++n)
        for (const auto& s : oracle::all_words(n)) {
            std::optional<SquareWitness> expected;
            for (std::size_t st = 0; st < n && !expected; ++st)
                for (std::size_t p = 1; st + 2 * p <= n && !expected; ++p)
                    if (witness_holds(s, {st, p}))
                        expected = SquareWitness{st, p};
            REQUIRE(find_square(s) == expected);
        }
}

TEST_CASE("has_square_ending_at_last")
{
    CHECK_FALSE(has_square_ending_at_last(W("0121")));
    CHECK(has_square_ending_at_last(W("01211")));
    // "10201020" (start 1, period 4) ends at the last symbol.
    CHECK(has_square_ending_at_last(W("010201020")));
    CHECK_FALSE(has_square_ending_at_last(W("0")));

    // Incremental consistency over every squarefree word of length <= 11.
    for (std::size_t n = 0; n <= 11; ++n)
        for (const Word& u : oracle::squarefree_words(n))
            for (Symbol c = 0; c < 3; ++c) {
                const Word uc = u + Word(std::vector<Symbol>{c});
                REQUIRE(has_square_ending_at_last(uc) == !is_squarefree_oracle(uc));
            }
}

TEST_CASE("has_square_covering matches a direct scan")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20000; ++iter) {
        const std::size_t n = 2 + rng() % 40;
        const Word w = (iter % 3 == 0) ? oracle::random_word(rng, n)
                                       : oracle::random_squarefree(rng, n / 2 + 1) +
                                             oracle::random_squarefree(rng, n - n / 2 - 1);
        const std::size_t lo = rng() % n;
        const std::size_t hi = lo + rng() % (n - lo);
        const std::size_t pmin = 1 + rng() % n;
        const std::size_t pmax = pmin + rng() % n;
        bool expected = false;
        for (std::size_t s = 0; s <= lo && !expected; ++s)
            for (std::size_t p = pmin; p <= pmax && s + 2 * p <= n; ++p)
                if (s + 2 * p - 1 >= hi && witness_holds(w, {s, p})) {
                    expected = true;
                    break;
                }
        REQUIRE(has_square_covering(w, lo, hi, pmin, pmax) == expected);
    }
}

TEST_CASE("tau")
{
    CHECK(tau(W("012"), 1) == W("120"));
    CHECK(tau(W("210201202120102012"), 1) == W("021012010201210120"));
    CHECK(tau(W("210201202120102012"), 2) == W("102120121012021201"));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Word w = oracle::random_word(rng, rng() % 30);
        CHECK(tau(tau(tau(w, 1), 1), 1) == w);
        CHECK(tau(w, 0) == w);
        CHECK(tau(w, 2) == tau(tau(w, 1), 1));
    }
}

TEST_CASE("reverse and palindromes")
{
    CHECK(reverse(W("0122")) == W("2210"));
    CHECK(reverse(W("2112")) == W("2112"));
    CHECK(is_palindrome(W("2112")));
    CHECK_FALSE(is_palindrome(W("0122")));
    CHECK(is_palindrome(W("")));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Word w = oracle::random_word(rng, rng() % 30);
        CHECK(reverse(reverse(w)) == w);
    }
}

TEST_CASE("squarefreeness is invariant under tau and reversal")
{
    for (std::size_t n = 0; n <= 12; ++n)
        for (const auto& s : oracle::all_words(n)) {
            const Word w(s);
            const bool f = is_squarefree_oracle(w);
            REQUIRE(is_squarefree_oracle(tau(w, 1)) == f);
            REQUIRE(is_squarefree_oracle(tau(w, 2)) == f);
            REQUIRE(is_squarefree_oracle(reverse(w)) == f);
        }
}

TEST_CASE("tau is a bijection on squarefree words")
{
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto words = oracle::squarefree_words(n);
        std::set<Word> images;
        for (const Word& w : words) {
            const Word t = tau(w, 1);
            CHECK(is_squarefree_oracle(t));
            images.insert(t);
        }
        CHECK(images.size() == words.size());
    }
}
