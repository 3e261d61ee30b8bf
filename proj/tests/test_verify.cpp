#include "brinkhuis/errors.hpp"
#include "brinkhuis/verify.hpp"
#include "brinkhuis/word_file.hpp"
#include "oracles.hpp"

#include <cmath>
#include <doctest.h>
#include <filesystem>
#include <fstream>

using namespace brinkhuis;

namespace fs = std::filesystem;

namespace {

TripleCandidate triple18()
{
    return {18, parse_word_file(BRINKHUIS_TEST_DATA_DIR "/triple_n18_k2.txt")};
}

// Smallest slot-triple index whose product fails, by the naive oracle.
std::optional<std::uint64_t> oracle_first_failure(const std::vector<Word>& b0)
{
    const std::size_t k = b0.size();
    for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(k) * k * k; ++t) {
        const auto& x = b0[t / (k * k)];
        const auto& y = b0[(t / k) % k];
        const auto& z = b0[t % k];
        for (const Pattern& p : reduced_patterns())
            if (oracle::has_square(x + oracle::tau_pow(y, p[1]) + oracle::tau_pow(z, p[2])))
                return t;
    }
    return std::nullopt;
}

struct TempPath {
    fs::path path;
    explicit TempPath(const char* name) : path(fs::temp_directory_path() / name) { fs::remove(path); }
    ~TempPath() { fs::remove(path); }
};

} // namespace

TEST_CASE("the 18/2 triple passes full verification")
{
    const auto cand = triple18();
    REQUIRE(cand.k() == 2);
    const auto r = verify_triple(cand);
    CHECK(r.passed);
    CHECK_FALSE(r.stage_failed);
    CHECK_FALSE(r.witness);
    REQUIRE(r.bound);
    CHECK(std::abs(*r.bound - 1.0416160) < 1e-7);
    CHECK(r.warnings.empty());
    CHECK(r.checks_performed > 0);
    const auto j = to_json(r);
    CHECK(j["passed"] == true);
    CHECK(j["mode"] == "full");
    CHECK(j["bound"].get<double>() == doctest::Approx(1.0416160).epsilon(1e-9));
}

TEST_CASE("every single-symbol mutant of the 18/2 triple fails")
{
    const auto cand = triple18();
    std::size_t failures = 0;
    for (std::size_t w = 0; w < 2; ++w)
        for (std::size_t pos = 0; pos < 18; ++pos)
            for (Symbol delta = 1; delta <= 2; ++delta) {
                auto mutant = cand;
                std::vector<Symbol> s(mutant.b0[w].symbols().begin(), mutant.b0[w].symbols().end());
                s[pos] = static_cast<Symbol>((s[pos] + delta) % 3);
                mutant.b0[w] = Word(s);
                const auto r = verify_triple(mutant);
                REQUIRE_FALSE(r.passed);
                REQUIRE(r.stage_failed);
                REQUIRE_FALSE(r.bound);
                REQUIRE_FALSE(oracle::brinkhuis_by_definition(mutant.b0));
                if (r.witness)
                    REQUIRE(witness_rechecks(*r.witness, mutant.b0));
                else
                    REQUIRE(*r.stage_failed == Stage::Parse);
                ++failures;
            }
    CHECK(failures == 72);
}

TEST_CASE("parse stage failures")
{
    auto r = verify_triple({18, {}});
    CHECK(r.stage_failed == Stage::Parse);
    r = verify_triple({17, triple18().b0});
    CHECK(r.stage_failed == Stage::Parse);
    auto dup = triple18();
    dup.b0.push_back(dup.b0[0]);
    r = verify_triple(dup);
    CHECK(r.stage_failed == Stage::Parse);
    CHECK_FALSE(r.passed);
}

TEST_CASE("stage ordering and witnesses")
{
    // squarefree but not admissible as a singleton
    const Word w = Word::parse("012");
    auto r = verify_triple({3, {w}});
    CHECK(r.stage_failed == Stage::Admissible);
    REQUIRE(r.witness);
    CHECK(witness_rechecks(*r.witness, {w}));
    CHECK(r.witness->pattern.size() == 3);

    r = verify_triple({4, {Word::parse("0110")}});
    CHECK(r.stage_failed == Stage::Squarefree);
    REQUIRE(r.witness);
    CHECK(r.witness->pattern.size() == 1);
    CHECK(witness_rechecks(*r.witness, {Word::parse("0110")}));

    // each word admissible, but the set is not
    const auto classes = admissible_classes(grimm_class(1), 35);
    bool saw_failure = false;
    for (std::size_t i = 0; i < classes.size() && !saw_failure; ++i)
        for (std::size_t j = i + 1; j < classes.size() && !saw_failure; ++j) {
            std::vector<Word> b0 = classes[i].members();
            b0.insert(b0.end(), classes[j].members().begin(), classes[j].members().end());
            const auto rep = verify_triple({35, b0});
            REQUIRE(rep.passed == oracle::brinkhuis_by_definition(b0));
            if (!rep.passed) {
                saw_failure = true;
                REQUIRE(rep.witness);
                CHECK(witness_rechecks(*rep.witness, b0));
                CHECK((rep.stage_failed == Stage::Pair || rep.stage_failed == Stage::Triple));
            }
        }
    CHECK(saw_failure);
}

TEST_CASE("triple-stage failure is the lowest index")
{
    // pairs of class 2 reversal classes at n = 35 whose boundaries are all
    // good but some pattern product is not
    const auto classes = admissible_classes(grimm_class(2), 35);
    std::size_t triple_failures = 0;
    for (std::size_t i = 0; i < classes.size() && triple_failures < 6; ++i)
        for (std::size_t j = i + 1; j < classes.size() && triple_failures < 6; ++j) {
            std::vector<Word> b0 = classes[i].members();
            b0.insert(b0.end(), classes[j].members().begin(), classes[j].members().end());
            auto prep = prepare_candidate({35, b0}, 1);
            if (!prep.table)
                continue;
            const std::uint64_t total = triple_index_count(b0.size());
            const auto o = verify_triple_range(*prep.table, 0, total, 1);
            if (!o.failure_index)
                continue;
            ++triple_failures;
            REQUIRE(o.failure_index == oracle_first_failure(b0));
            REQUIRE(witness_rechecks(*o.witness, b0));
            REQUIRE(verify_triple_range(*prep.table, 0, total, 4).failure_index == o.failure_index);
            const auto r = verify_triple({35, b0});
            REQUIRE(r.stage_failed == Stage::Triple);
            REQUIRE(r.witness->pattern.size() == 3);
        }
    CHECK(triple_failures == 6);
}

TEST_CASE("compute_bound")
{
    const std::vector<std::tuple<std::size_t, std::uint64_t, double>> rows{
        {25, 2, 1.0293022}, {22, 2, 1.0335578}, {18, 2, 1.0416160},
        {41, 65, 1.1099996}, {43, 110, 1.1184191}, {54, 952, 1.1381531}};
    for (const auto& [n, k, value] : rows)
        CHECK(std::abs(compute_bound(n, k) - value) <= 1e-7);
    CHECK(compute_bound(2, 1) == 1.0);
    CHECK(compute_bound(1000, 1) == 1.0);
    CHECK_THROWS_AS(compute_bound(1, 5), DomainError);
    CHECK_THROWS_AS(compute_bound(10, 0), DomainError);
}

TEST_CASE("sampled mode")
{
    VerifyOptions opts;
    opts.mode = VerifyMode::Sampled;
    opts.samples = 500;
    opts.seed = 9;
    const auto r = verify_triple(triple18(), opts);
    CHECK(r.passed);
    CHECK(r.mode == VerifyMode::Sampled);
    CHECK_FALSE(r.warnings.empty());
    const auto again = verify_triple(triple18(), opts);
    CHECK(again.checks_performed == r.checks_performed);
    CHECK(to_json(again) == to_json(r));

    std::vector<Word> b0;
    enumerate_squarefree(24, [&](SymbolSpan s) {
        Word w(s);
        if (is_admissible(w))
            b0.push_back(std::move(w));
    });
    opts.workers = 1;
    const auto rb = verify_triple({24, b0}, opts);
    CHECK(rb.passed == oracle::brinkhuis_by_definition(b0));
}

TEST_CASE("full mode warns above the threshold")
{
    VerifyOptions opts;
    opts.full_warning_threshold = 10;
    const auto r = verify_triple(triple18(), opts);
    CHECK(r.passed);
    CHECK(r.warnings.size() == 1);
}

TEST_CASE("checkpointed range runs resume")
{
    const auto prep = prepare_candidate(triple18(), 1);
    REQUIRE(prep.table);
    TempPath tmp("brinkhuis_test_checkpoint.json");
    RangeRunOptions opts;
    opts.begin = 1;
    opts.end = 8;
    opts.chunk = 2;
    opts.max_chunks = 2;
    opts.workers = 1;
    opts.checkpoint = tmp.path;
    auto cp = run_checkpointed_range(*prep.table, opts);
    CHECK_FALSE(cp.complete());
    CHECK(cp.next == 5);
    CHECK(read_checkpoint(tmp.path).next == 5);
    opts.max_chunks = 0;
    cp = run_checkpointed_range(*prep.table, opts);
    CHECK(cp.complete());
    CHECK(cp.next == 8);
    CHECK(cp.chunks_completed == 4);
    CHECK(cp.checks == 7 * 4);
    CHECK_FALSE(cp.failure_index);

    // a finished checkpoint is left alone
    const auto again = run_checkpointed_range(*prep.table, opts);
    CHECK(again.chunks_completed == 4);

    opts.begin = 0;
    CHECK_THROWS_AS(run_checkpointed_range(*prep.table, opts), PreconditionViolated);
    opts.begin = 1;

    auto other = triple18();
    std::swap(other.b0[0], other.b0[1]);
    const auto prep2 = prepare_candidate(other, 1);
    CHECK_THROWS_AS(run_checkpointed_range(*prep2.table, opts), PreconditionViolated);

    opts.chunk = 0;
    CHECK_THROWS_AS(run_checkpointed_range(*prep.table, opts), PreconditionViolated);
}

TEST_CASE("checkpoint JSON")
{
    Checkpoint c;
    c.n = 54;
    c.k = 952;
    c.digest = "00ff";
    c.begin = 3;
    c.end = 100;
    c.next = 50;
    c.checks = 188;
    c.chunks_completed = 2;
    const auto back = checkpoint_from_json(to_json(c));
    CHECK(back.next == 50);
    CHECK(back.digest == "00ff");
    CHECK_FALSE(back.failure_index);
    c.failure_index = 60;
    CHECK(checkpoint_from_json(to_json(c)).failure_index == std::optional<std::uint64_t>(60));

    auto j = to_json(c);
    j["next"] = 1000;
    CHECK_THROWS_AS(checkpoint_from_json(j), FormatError);
    CHECK_THROWS_AS(checkpoint_from_json(nlohmann::json::object()), FormatError);

    TempPath tmp("brinkhuis_test_bad_checkpoint.json");
    {
        std::ofstream out(tmp.path);
        out << "{not json";
    }
    CHECK_THROWS_AS(read_checkpoint(tmp.path), FormatError);
    CHECK_THROWS_AS(read_checkpoint("/nonexistent/cp.json"), IoError);
}

TEST_CASE("word list digest")
{
    const auto b0 = triple18().b0;
    CHECK(word_list_digest(b0) == word_list_digest(b0));
    CHECK(word_list_digest(b0) != word_list_digest({b0[1], b0[0]}));
    CHECK(word_list_digest(b0).size() == 16);
}
