// verify.cpp -- verification of special Brinkhuis triples and growth bounds

#include "brinkhuis/verify.hpp"

#include "brinkhuis/admissibility.hpp"
#include "brinkhuis/detail/parallel.hpp"
#include "brinkhuis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <random>
#include <set>

namespace brinkhuis {

const char* stage_name(Stage s)
{
    switch (s) {
    case Stage::Parse: return "parse";
    case Stage::Squarefree: return "squarefree";
    case Stage::Admissible: return "admissible";
    case Stage::Pair: return "pair";
    case Stage::Triple: return "triple";
    }
    return "?";
}

const char* mode_name(VerifyMode m)
{
    return m == VerifyMode::Full ? "full" : "sampled";
}

double compute_bound(std::size_t n, std::uint64_t k)
{
    if (n < 2)
        throw DomainError(fmt::format("bound needs n >= 2, got {}", n));
    if (k < 1)
        throw DomainError("bound needs k >= 1");
    return std::pow(static_cast<double>(k), 1.0 / static_cast<double>(n - 1));
}

namespace {

Word product_of(const Word& pattern, const std::vector<std::size_t>& slots,
                const std::vector<Word>& b0)
{
    std::vector<Symbol> buf;
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (const Symbol s : b0[slots[i]].symbols())
            buf.push_back(tau(s, pattern[i]));
    return make_word_unchecked(std::move(buf));
}

FailureWitness make_witness(Word pattern, std::vector<std::size_t> slots,
                            const std::vector<Word>& b0)
{
    FailureWitness w{std::move(pattern), std::move(slots), Word{}, {}};
    w.product = product_of(w.pattern, w.slots, b0);
    const auto sq = find_square(w.product);
    if (sq)
        w.square = *sq;
    return w;
}

Word pattern_word(std::initializer_list<Symbol> symbols)
{
    return make_word_unchecked(std::vector<Symbol>(symbols));
}

void fail(VerificationReport& r, Stage s, std::string message)
{
    r.passed = false;
    r.stage_failed = s;
    r.message = std::move(message);
}

} // namespace

bool witness_rechecks(const FailureWitness& w, const std::vector<Word>& b0)
{
    if (w.pattern.size() != w.slots.size())
        return false;
    for (const auto j : w.slots)
        if (j >= b0.size())
            return false;
    const Word rebuilt = product_of(w.pattern, w.slots, b0);
    return rebuilt == w.product && witness_holds(rebuilt, w.square);
}

std::uint64_t triple_index_count(std::size_t k)
{
    return static_cast<std::uint64_t>(k) * k * k;
}

PreparedCandidate prepare_candidate(const TripleCandidate& cand, unsigned workers)
{
    workers = detail::resolve_workers(workers);
    PreparedCandidate out;
    VerificationReport& r = out.report;
    r.n = cand.n;
    r.k = cand.k();

    if (cand.b0.empty()) {
        fail(r, Stage::Parse, "candidate has no words");
        return out;
    }
    for (std::size_t j = 0; j < cand.b0.size(); ++j)
        if (cand.b0[j].size() != cand.n) {
            fail(r, Stage::Parse, fmt::format("word {} has length {}, expected {}", j,
                                              cand.b0[j].size(), cand.n));
            return out;
        }
    {
        std::vector<std::size_t> order(cand.b0.size());
        for (std::size_t j = 0; j < order.size(); ++j)
            order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return cand.b0[x] < cand.b0[y] || (cand.b0[x] == cand.b0[y] && x < y);
        });
        for (std::size_t i = 1; i < order.size(); ++i)
            if (cand.b0[order[i]] == cand.b0[order[i - 1]]) {
                fail(r, Stage::Parse, fmt::format("words {} and {} are identical",
                                                  std::min(order[i - 1], order[i]),
                                                  std::max(order[i - 1], order[i])));
                return out;
            }
    }

    for (std::size_t j = 0; j < cand.b0.size(); ++j) {
        ++r.checks_performed;
        if (!is_squarefree(cand.b0[j])) {
            fail(r, Stage::Squarefree, fmt::format("word {} is not squarefree", j));
            r.witness = make_witness(pattern_word({0}), {j}, cand.b0);
            return out;
        }
    }

    {
        std::vector<Symbol> buf;
        for (std::size_t j = 0; j < cand.b0.size(); ++j)
            for (const Pattern& p : reduced_patterns()) {
                ++r.checks_performed;
                const Word prod = product_of(pattern_word({p[0], p[1], p[2]}), {j, j, j}, cand.b0);
                if (!is_squarefree(prod)) {
                    fail(r, Stage::Admissible, fmt::format("word {} is not admissible", j));
                    r.witness = make_witness(pattern_word({p[0], p[1], p[2]}), {j, j, j}, cand.b0);
                    return out;
                }
            }
    }

    ProductTable table(cand.b0, workers);
    const std::size_t k = table.size();
    r.checks_performed += 2 * static_cast<std::uint64_t>(k) * k;
    if (table.pair_failures() != 0) {
        for (std::size_t a = 0; a < k; ++a)
            for (unsigned d = 1; d <= 2; ++d)
                for (std::size_t b = 0; b < k; ++b)
                    if (!table.pair_ok(a, d, b)) {
                        fail(r, Stage::Pair,
                             fmt::format("pair boundary {} . tau^{}({}) is not squarefree", a, d, b));
                        r.witness = make_witness(pattern_word({0, static_cast<Symbol>(d)}), {a, b},
                                                 cand.b0);
                        return out;
                    }
    }
    out.table.emplace(std::move(table));
    return out;
}

namespace {

bool index_ok(const ProductTable& table, std::uint64_t t, std::vector<Symbol>& scratch,
              const Pattern** failed)
{
    const std::uint64_t k = table.size();
    const auto c = static_cast<std::size_t>(t % k);
    const auto b = static_cast<std::size_t>((t / k) % k);
    const auto a = static_cast<std::size_t>(t / (k * k));
    for (const Pattern& p : reduced_patterns())
        if (!table.spanning_ok(p, a, b, c, scratch)) {
            *failed = &p;
            return false;
        }
    return true;
}

FailureWitness triple_witness(const ProductTable& table, std::uint64_t t, const Pattern& p)
{
    const std::uint64_t k = table.size();
    std::vector<std::size_t> slots{static_cast<std::size_t>(t / (k * k)),
                                   static_cast<std::size_t>((t / k) % k),
                                   static_cast<std::size_t>(t % k)};
    return make_witness(pattern_word({p[0], p[1], p[2]}), std::move(slots), table.words());
}

struct PartialOutcome {
    std::uint64_t checks = 0;
    std::optional<std::uint64_t> position; // within the worker's input order
    const Pattern* pattern = nullptr;
};

} // namespace

RangeOutcome verify_triple_range(const ProductTable& table, std::uint64_t begin,
                                 std::uint64_t end, unsigned workers)
{
    workers = detail::resolve_workers(workers);
    RangeOutcome out;
    end = std::min(end, triple_index_count(table.size()));
    if (begin >= end)
        return out;
    std::vector<PartialOutcome> parts(workers);
    detail::parallel_for(end - begin, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        std::vector<Symbol> scratch;
        PartialOutcome& part = parts[w];
        for (std::uint64_t t = begin + lo; t < begin + hi; ++t) {
            part.checks += reduced_patterns().size();
            if (!index_ok(table, t, scratch, &part.pattern)) {
                part.position = t;
                return;
            }
        }
    });
    // Chunks are contiguous and increasing, so the first failing chunk holds
    // the lowest failing index; later chunks' counts still add up.
    for (const auto& part : parts) {
        out.checks += part.checks;
        if (part.position && !out.failure_index) {
            out.failure_index = part.position;
            out.witness = triple_witness(table, *part.position, *part.pattern);
        }
    }
    return out;
}

VerificationReport verify_triple(const TripleCandidate& cand, const VerifyOptions& options)
{
    const unsigned workers = detail::resolve_workers(options.workers);
    PreparedCandidate prep = prepare_candidate(cand, workers);
    VerificationReport r = std::move(prep.report);
    r.mode = options.mode;
    if (!prep.table)
        return r;
    const ProductTable& table = *prep.table;
    const std::uint64_t total = triple_index_count(table.size());

    if (options.mode == VerifyMode::Full) {
        const std::uint64_t products = total * reduced_patterns().size();
        if (products > options.full_warning_threshold)
            r.warnings.push_back(fmt::format(
                "full verification needs {} pattern product checks; expect a long run", products));
        const RangeOutcome o = verify_triple_range(table, 0, total, workers);
        r.checks_performed += o.checks;
        if (o.failure_index) {
            fail(r, Stage::Triple, fmt::format("pattern product at slot triple index {} is not squarefree",
                                               *o.failure_index));
            r.witness = o.witness;
            return r;
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        std::vector<std::uint64_t> sample(options.samples);
        for (auto& t : sample)
            t = pick(rng);
        std::vector<PartialOutcome> parts(workers);
        detail::parallel_for(sample.size(), workers,
                             [&](unsigned w, std::size_t lo, std::size_t hi) {
                                 std::vector<Symbol> scratch;
                                 PartialOutcome& part = parts[w];
                                 for (std::size_t i = lo; i < hi; ++i) {
                                     part.checks += reduced_patterns().size();
                                     if (!index_ok(table, sample[i], scratch, &part.pattern)) {
                                         part.position = i;
                                         return;
                                     }
                                 }
                             });
        for (const auto& part : parts) {
            r.checks_performed += part.checks;
            if (part.position && !r.stage_failed) {
                const std::uint64_t t = sample[*part.position];
                fail(r, Stage::Triple,
                     fmt::format("pattern product at slot triple index {} (sample {}) is not squarefree",
                                 t, *part.position));
                r.witness = triple_witness(table, t, *part.pattern);
            }
        }
        if (r.stage_failed)
            return r;
        r.warnings.push_back("sampled mode checks a subset of the slot triples; not a certificate");
    }
    r.passed = true;
    if (cand.n >= 2)
        r.bound = compute_bound(cand.n, cand.k());
    return r;
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["passed"] = r.passed;
    j["n"] = r.n;
    j["k"] = r.k;
    j["mode"] = mode_name(r.mode);
    j["checks_performed"] = r.checks_performed;
    j["stage_failed"] = r.stage_failed ? nlohmann::json(stage_name(*r.stage_failed)) : nlohmann::json();
    if (r.witness) {
        j["witness"] = {{"pattern", r.witness->pattern.str()},
                        {"slots", r.witness->slots},
                        {"product", r.witness->product.str()},
                        {"square_start", r.witness->square.start},
                        {"square_period", r.witness->square.period}};
    } else {
        j["witness"] = nullptr;
    }
    j["bound"] = r.bound ? nlohmann::json(std::round(*r.bound * 1e7) / 1e7) : nlohmann::json();
    j["message"] = r.message;
    j["warnings"] = r.warnings;
    return j;
}

std::string word_list_digest(const std::vector<Word>& words)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (const Word& w : words) {
        for (const Symbol s : w.symbols())
            mix(static_cast<unsigned char>('0' + s));
        mix('\n');
    }
    return fmt::format("{:016x}", h);
}

nlohmann::json to_json(const Checkpoint& c)
{
    return {{"n", c.n},
            {"k", c.k},
            {"digest", c.digest},
            {"begin", c.begin},
            {"end", c.end},
            {"next", c.next},
            {"checks", c.checks},
            {"chunks_completed", c.chunks_completed},
            {"failure_index", c.failure_index ? nlohmann::json(*c.failure_index) : nlohmann::json()}};
}

Checkpoint checkpoint_from_json(const nlohmann::json& j)
{
    try {
        Checkpoint c;
        c.n = j.at("n").get<std::size_t>();
        c.k = j.at("k").get<std::size_t>();
        c.digest = j.at("digest").get<std::string>();
        c.begin = j.at("begin").get<std::uint64_t>();
        c.end = j.at("end").get<std::uint64_t>();
        c.next = j.at("next").get<std::uint64_t>();
        c.checks = j.at("checks").get<std::uint64_t>();
        c.chunks_completed = j.at("chunks_completed").get<std::uint64_t>();
        if (!j.at("failure_index").is_null())
            c.failure_index = j.at("failure_index").get<std::uint64_t>();
        if (c.next < c.begin || c.next > c.end)
            throw FormatError("checkpoint position outside its range");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(fmt::format("malformed checkpoint: {}", e.what()));
    }
}

Checkpoint read_checkpoint(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(fmt::format("cannot open {}", path.string()));
    try {
        return checkpoint_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw IoError(fmt::format("cannot write {}", tmp.string()));
        out << to_json(c).dump(2) << '\n';
        if (!out)
            throw IoError(fmt::format("error writing {}", tmp.string()));
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint run_checkpointed_range(const ProductTable& table, const RangeRunOptions& options)
{
    if (options.chunk == 0)
        throw PreconditionViolated("chunk size must be positive");
    const std::uint64_t total = triple_index_count(table.size());
    const std::uint64_t end = std::min(options.end, total);
    if (options.begin > end)
        throw PreconditionViolated("range begins after its end");

    Checkpoint cp;
    cp.n = table.length();
    cp.k = table.size();
    cp.digest = word_list_digest(table.words());
    cp.begin = options.begin;
    cp.end = end;
    cp.next = options.begin;

    if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
        const Checkpoint saved = read_checkpoint(options.checkpoint);
        if (saved.digest != cp.digest || saved.n != cp.n || saved.k != cp.k)
            throw PreconditionViolated("checkpoint belongs to a different word list");
        if (saved.begin != cp.begin || saved.end != cp.end)
            throw PreconditionViolated(fmt::format(
                "checkpoint covers [{}, {}), requested [{}, {})", saved.begin, saved.end, cp.begin,
                cp.end));
        cp = saved;
    }

    std::uint64_t chunks_this_call = 0;
    while (!cp.complete()) {
        if (options.max_chunks != 0 && chunks_this_call >= options.max_chunks)
            break;
        const std::uint64_t chunk_end = std::min(cp.end, cp.next + options.chunk);
        const RangeOutcome o = verify_triple_range(table, cp.next, chunk_end, options.workers);
        cp.checks += o.checks;
        if (o.failure_index) {
            cp.failure_index = o.failure_index;
            cp.next = *o.failure_index;
        } else {
            cp.next = chunk_end;
        }
        ++cp.chunks_completed;
        ++chunks_this_call;
        if (!options.checkpoint.empty())
            write_checkpoint(options.checkpoint, cp);
    }
    return cp;
}

} // namespace brinkhuis
