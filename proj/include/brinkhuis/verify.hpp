// verify.hpp -- verification of special Brinkhuis triples and growth bounds

#pragma once

#include "brinkhuis/compatibility.hpp"
#include "brinkhuis/word.hpp"

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace brinkhuis {

// B0 of a special triple; B1 and B2 are its tau and tau^2 images.
struct TripleCandidate {
    std::size_t n = 0;
    std::vector<Word> b0;

    std::size_t k() const noexcept { return b0.size(); }
};

enum class Stage { Parse, Squarefree, Admissible, Pair, Triple };
enum class VerifyMode { Full, Sampled };

const char* stage_name(Stage s);
const char* mode_name(VerifyMode m);

// A product that is not squarefree. `pattern` gives the tau power for each
// slot (a single symbol for a word on its own, two for a pair boundary,
// three for a pattern product); `product` is the concatenation of
// tau^pattern[i](b0[slots[i]]) and `square` lies in it.
struct FailureWitness {
    Word pattern;
    std::vector<std::size_t> slots;
    Word product;
    SquareWitness square;
};

// Rebuilds the product from b0 and checks that `square` is a square in it.
bool witness_rechecks(const FailureWitness& w, const std::vector<Word>& b0);

struct VerificationReport {
    bool passed = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<Stage> stage_failed;
    std::optional<FailureWitness> witness;
    std::optional<double> bound; // only when passed
    VerifyMode mode = VerifyMode::Full;
    std::uint64_t checks_performed = 0;
    std::string message;
    std::vector<std::string> warnings;
};

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Full;
    std::uint64_t seed = 1;
    std::uint64_t samples = 1'000'000;
    unsigned workers = 0; // 0: hardware concurrency
    // Full mode warns when the triple stage exceeds this many product checks.
    std::uint64_t full_warning_threshold = 1'000'000'000;
};

// Stages in order: parse (lengths, duplicates), squarefreeness of each word,
// singleton admissibility, all pair boundaries, then pattern products. Full
// mode covers every ordered slot triple under the four i1 = 0 patterns and
// certifies the triple; sampled mode covers a seeded uniform sample of slot
// triples and is only a smoke test.
VerificationReport verify_triple(const TripleCandidate& cand, const VerifyOptions& options = {});

// k^(1/(n-1)); throws DomainError for n < 2 or k < 1.
double compute_bound(std::size_t n, std::uint64_t k);

nlohmann::json to_json(const VerificationReport& r);

// The first stages of verify_triple, through the pair boundaries. When the
// report has not failed, `table` holds the checked word list and the triple
// stage can be run over index ranges.
struct PreparedCandidate {
    VerificationReport report;
    std::optional<ProductTable> table;
};
PreparedCandidate prepare_candidate(const TripleCandidate& cand, unsigned workers = 0);

// Slot triple index t in [0, k^3) is (a, b, c) with t = (a*k + b)*k + c;
// each index covers the four i1 = 0 patterns.
std::uint64_t triple_index_count(std::size_t k);

struct RangeOutcome {
    std::uint64_t checks = 0;
    std::optional<std::uint64_t> failure_index; // lowest failing index
    std::optional<FailureWitness> witness;
};

// Pair boundaries must already be known good (prepare_candidate).
RangeOutcome verify_triple_range(const ProductTable& table, std::uint64_t begin,
                                 std::uint64_t end, unsigned workers = 0);

// Progress of a range run; persisted as JSON after every chunk.
struct Checkpoint {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string digest;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::uint64_t next = 0;
    std::uint64_t checks = 0;
    std::uint64_t chunks_completed = 0;
    std::optional<std::uint64_t> failure_index;

    bool complete() const noexcept { return next >= end || failure_index.has_value(); }
};

nlohmann::json to_json(const Checkpoint& c);
// Throws FormatError.
Checkpoint checkpoint_from_json(const nlohmann::json& j);
// Throws IoError / FormatError.
Checkpoint read_checkpoint(const std::filesystem::path& path);
// Writes through a temporary file and a rename.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c);

// Stable 64-bit FNV-1a digest of a word list, in hex.
std::string word_list_digest(const std::vector<Word>& words);

struct RangeRunOptions {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::uint64_t chunk = 1'000'000;
    // Stop after this many chunks in this call (0: no limit). Lets a run be
    // split across processes.
    std::uint64_t max_chunks = 0;
    unsigned workers = 0;
    std::filesystem::path checkpoint;
};

// Runs [begin, end) in chunks, saving a checkpoint after each. An existing
// checkpoint for the same word list and range is resumed; one for a
// different word list or range is an error (PreconditionViolated).
Checkpoint run_checkpointed_range(const ProductTable& table, const RangeRunOptions& options);

} // namespace brinkhuis
