#include "brinkhuis/enumeration.hpp"
#include "brinkhuis/errors.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <doctest.h>

using namespace brinkhuis;

TEST_CASE("ternary counts match brute force")
{
    CHECK(count_squarefree(0, 3) == 1);
    CHECK(count_squarefree(1, 3) == 3);
    CHECK(count_squarefree(2, 3) == 6);
    CHECK(count_squarefree(3, 3) == 12);
    CHECK(count_squarefree(4, 3) == 18);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(count_squarefree(n, 3) == oracle::squarefree_words(n).size());
}

TEST_CASE("binary squarefree words are finite")
{
    const std::uint64_t expected[] = {1, 2, 2, 2, 0, 0, 0};
    std::uint64_t total = 0;
    for (std::size_t n = 0; n < 7; ++n) {
        CHECK(count_squarefree(n, 2) == expected[n]);
        if (n > 0)
            total += count_squarefree(n, 2);
    }
    CHECK(total == 6);
    CHECK_THROWS_AS(count_squarefree(3, 4), DomainError);
}

TEST_CASE("enumeration equals filtered brute force")
{
    CHECK(enumerate_squarefree(1) == std::vector<Word>{Word::parse("0"), Word::parse("1"), Word::parse("2")});
    std::vector<Word> two;
    for (const char* s : {"01", "02", "10", "12", "20", "21"})
        two.push_back(Word::parse(s));
    CHECK(enumerate_squarefree(2) == two);
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto got = enumerate_squarefree(n);
        CHECK(got == oracle::squarefree_words(n));
        CHECK(got.size() == count_squarefree(n, 3));
    }
}

TEST_CASE("enumeration ceiling and streaming sink")
{
    CHECK_THROWS_AS(enumerate_squarefree(31), ResourceLimit);
    CHECK_NOTHROW(enumerate_squarefree(12, 12));
    CHECK_THROWS_AS(enumerate_squarefree(13, 12), ResourceLimit);
    std::uint64_t streamed = 0;
    std::vector<Symbol> last;
    bool sorted = true;
    enumerate_squarefree(20, [&](SymbolSpan w) {
        std::vector<Symbol> cur(w.begin(), w.end());
        if (streamed > 0 && !(last < cur))
            sorted = false;
        last = std::move(cur);
        ++streamed;
    });
    CHECK(sorted);
    CHECK(streamed == count_squarefree(20, 3));
}

TEST_CASE("submultiplicativity of counts")
{
    std::vector<std::uint64_t> s;
    for (std::size_t n = 0; n <= 14; ++n)
        s.push_back(count_squarefree(n, 3));
    for (std::size_t m = 0; m <= 14; ++m)
        for (std::size_t k = 0; m + k <= 14; ++k)
            CHECK(s[m + k] <= s[m] * s[k]);
}

TEST_CASE("Grimm classes")
{
    const GrimmClass& c1 = grimm_class(GrimmClassId::Class1);
    const GrimmClass& c2 = grimm_class(2);
    CHECK(c1.prefix.str() == "012021");
    CHECK(c1.suffix.str() == "120210");
    CHECK(c2.prefix.str() == "012102");
    CHECK(c2.suffix.str() == "201210");
    CHECK(reverse(c1.prefix) == c1.suffix);
    CHECK(reverse(c2.prefix) == c2.suffix);
    CHECK_THROWS_AS(grimm_class(3), DomainError);
}

TEST_CASE("Grimm class enumeration")
{
    const GrimmClass& c1 = grimm_class(1);
    const GrimmClass& c2 = grimm_class(2);
    CHECK_THROWS_AS(enumerate_grimm_class(c1, 11), LengthTooSmall);
    CHECK_THROWS_AS(census(c2, 0), LengthTooSmall);
    CHECK(enumerate_grimm_class(c1, 12).empty());

    CHECK(enumerate_grimm_class(c1, 35).size() == 109);
    CHECK(enumerate_grimm_class(c2, 35).size() == 142);

    for (const GrimmClass* cls : {&c1, &c2})
        for (std::size_t n = 12; n <= 30; ++n) {
            const auto words = enumerate_grimm_class(*cls, n);
            std::set<Word> members(words.begin(), words.end());
            REQUIRE(std::is_sorted(words.begin(), words.end()));
            REQUIRE(members.size() == words.size());
            for (const Word& w : words) {
                REQUIRE(is_squarefree_oracle(w));
                REQUIRE(Word(w.symbols().first(6)) == cls->prefix);
                REQUIRE(Word(w.symbols().last(6)) == cls->suffix);
                REQUIRE(members.count(reverse(w)) == 1);
            }
        }
}

TEST_CASE("Grimm class enumeration equals a filter of all squarefree words")
{
    for (int c = 1; c <= 2; ++c) {
        const GrimmClass& cls = grimm_class(c);
        for (std::size_t n = 12; n <= 22; ++n) {
            std::vector<Word> expected;
            for (const Word& w : enumerate_squarefree(n))
                if (Word(w.symbols().first(6)) == cls.prefix &&
                    Word(w.symbols().last(6)) == cls.suffix)
                    expected.push_back(w);
            REQUIRE(enumerate_grimm_class(cls, n) == expected);
        }
    }
}

TEST_CASE("census")
{
    const ClassCensus c1 = census(grimm_class(1), 35);
    CHECK(c1.a == 109);
    CHECK(c1.a_p == 9);
    CHECK(c1.a_n == 50);
    const ClassCensus c2 = census(grimm_class(2), 35);
    CHECK(c2.a == 142);
    CHECK(c2.a_p == 6);
    CHECK(c2.a_n == 68);

    for (int c = 1; c <= 2; ++c)
        for (std::size_t n = 12; n <= 40; ++n) {
            const ClassCensus k = census(grimm_class(c), n);
            REQUIRE(k.a == k.a_p + 2 * k.a_n);
            if (n % 2 == 0) {
                REQUIRE(k.a_p == 0);
                REQUIRE(k.a_n == k.a / 2);
            }
        }
}
