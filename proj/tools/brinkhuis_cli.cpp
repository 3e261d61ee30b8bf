// brinkhuis -- command line front end
//
// Exit codes: 0 success, 1 verification failed, 2 usage error,
// 3 I/O or parse error.

#include "brinkhuis/errors.hpp"
#include "brinkhuis/pipeline.hpp"
#include "brinkhuis/word_file.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>

using namespace brinkhuis;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_json(const nlohmann::json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError(fmt::format("cannot write {}", path));
    return out;
}

nlohmann::json census_json(const ClassCensus& c)
{
    return {{"a", c.a}, {"ap", c.a_p}, {"an", c.a_n}};
}

nlohmann::json admissible_json(const AdmissibleCensus& c)
{
    return {{"b", c.b}, {"bp", c.b_p}, {"bn", c.b_n}};
}

std::vector<Word> admissible_of(const std::vector<Word>& words)
{
    std::vector<Word> out;
    for (const Word& w : words)
        if (is_admissible(w))
            out.push_back(w);
    return out;
}

std::string mode_label(const CliqueResult& r)
{
    return r.certificate == Certificate::ExactOptimal ? "exact" : "heuristic";
}

// count

struct CountArgs {
    std::size_t n = 0;
    unsigned alphabet = 3;
    bool json = false;
};

int run_count(const CountArgs& a)
{
    const std::uint64_t c = count_squarefree(a.n, a.alphabet);
    if (a.json)
        print_json({{"n", a.n}, {"alphabet", a.alphabet}, {"count", c}});
    else
        fmt::print("{}\n", c);
    return 0;
}

// enumerate

struct EnumerateArgs {
    std::size_t n = 0;
    int cls = 0;
    bool json = false;
};

int run_enumerate(const EnumerateArgs& a)
{
    std::vector<Word> kept;
    std::string line;
    const auto emit = [&](SymbolSpan s) {
        if (a.json || a.cls != 0)
            kept.emplace_back(s);
        if (!a.json) {
            line.resize(s.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                line[i] = static_cast<char>('0' + s[i]);
            std::cout << line << '\n';
        }
    };
    if (a.cls == 0)
        enumerate_squarefree(a.n, emit);
    else
        enumerate_grimm_class(grimm_class(a.cls), a.n, emit);

    if (a.json) {
        nlohmann::json j{{"n", a.n}};
        j["class"] = a.cls == 0 ? nlohmann::json() : nlohmann::json(a.cls);
        std::vector<std::string> words;
        for (const Word& w : kept)
            words.push_back(w.str());
        j["words"] = words;
        j["census"] = a.cls == 0 ? nlohmann::json() : census_json(census_of(a.n, kept));
        print_json(j);
    } else if (a.cls != 0) {
        const ClassCensus c = census_of(a.n, kept);
        fmt::print("a={} ap={} an={}\n", c.a, c.a_p, c.a_n);
    }
    return 0;
}

// census

struct CensusArgs {
    std::size_t n = 0;
    bool json = false;
};

int run_census(const CensusArgs& a)
{
    nlohmann::json j{{"n", a.n}, {"classes", nlohmann::json::array()}};
    for (const int c : {1, 2}) {
        const std::vector<Word> all = enumerate_grimm_class(grimm_class(c), a.n);
        const ClassCensus cc = census_of(a.n, all);
        const AdmissibleCensus ac = admissible_census_of(a.n, admissible_of(all));
        if (a.json)
            j["classes"].push_back(
                {{"class", c}, {"census", census_json(cc)}, {"admissible", admissible_json(ac)}});
        else
            fmt::print("{}{}\n", c == 1 ? "Done:  " : "       ", format_census_line(c, cc, ac));
    }
    if (a.json)
        print_json(j);
    return 0;
}

// admissible

struct AdmissibleArgs {
    std::size_t n = 0;
    int cls = 1;
    std::string out;
    bool json = false;
};

int run_admissible(const AdmissibleArgs& a)
{
    const std::vector<Word> all = enumerate_grimm_class(grimm_class(a.cls), a.n);
    const std::vector<Word> admissible = admissible_of(all);
    const auto classes = reversal_classes(admissible);
    const ClassCensus cc = census_of(a.n, all);
    const AdmissibleCensus ac = admissible_census_of(a.n, admissible);
    if (!a.out.empty())
        write_word_file(a.out, admissible);

    if (a.json) {
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& c : classes)
            reps.push_back({{"word", c.representative().str()}, {"palindromic", c.palindromic()}});
        print_json({{"n", a.n},
                    {"class", a.cls},
                    {"census", census_json(cc)},
                    {"admissible", admissible_json(ac)},
                    {"classes", reps}});
        return 0;
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        fmt::print("{}\n", format_success_line(i + 1, classes[i]));
    fmt::print("Done:  {}\n", format_census_line(a.cls, cc, ac));
    return 0;
}

// edges

struct EdgesArgs {
    std::size_t n = 0;
    int cls = 0;
    std::string words;
    std::string out;
    bool unpruned = false;
    unsigned workers = 1;
    bool json = false;
};

int run_edges(const EdgesArgs& a)
{
    std::vector<ReversalClass> classes;
    std::size_t n = a.n;
    if (!a.words.empty()) {
        const std::vector<Word> words = expand_with_reversals(parse_word_file(a.words));
        n = words.front().size();
        classes = reversal_classes(words);
    } else {
        if (a.cls == 0)
            throw CLI::ValidationError("edges", "give --class with --n, or --words");
        classes = admissible_classes(grimm_class(a.cls), a.n);
    }
    const auto g = build_hypergraph(std::move(classes),
                                    a.unpruned ? EdgeStrategy::Unpruned : EdgeStrategy::Pruned,
                                    a.workers);
    if (a.out.empty()) {
        write_edges(std::cout, g);
        return 0;
    }
    std::ofstream out = open_output(a.out);
    write_edges(out, g);
    if (a.json) {
        print_json({{"n", n},
                    {"vertices", g.vertices.size()},
                    {"pair_edges", g.pair_edges.size()},
                    {"triple_edges", g.triple_edges.size()},
                    {"out", a.out}});
    } else {
        fmt::print("{} admissible words of length {} read in\n", g.vertices.size(), n);
        fmt::print("admissible triples:\n");
        fmt::print("{} admissible triples found\n", g.triple_edges.size());
    }
    return 0;
}

// clique

struct CliqueArgs {
    std::string edges;
    bool exact = false;
    bool heuristic = false;
    RhcsOptions rhcs;
    double budget = 0;
    bool json = false;
};

int run_clique(const CliqueArgs& a)
{
    std::ifstream in(a.edges);
    if (!in)
        throw IoError(fmt::format("cannot open {}", a.edges));
    const CliqueInstance inst = read_edges(in);
    const CliqueResult r =
        a.heuristic ? rhcs(inst, a.rhcs)
                    : exact_max_clique(inst, a.budget > 0 ? std::optional<double>(a.budget)
                                                          : std::nullopt);
    if (a.json) {
        print_json({{"size", r.size},
                    {"vertices", r.vertices},
                    {"mode", mode_label(r)},
                    {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json()},
                    {"budget_exhausted", r.budget_exhausted}});
        return 0;
    }
    std::string vs;
    for (const auto v : r.vertices)
        vs += fmt::format(" {}", v);
    fmt::print("size={}\n", r.size);
    fmt::print("vertices:{}\n", vs);
    if (r.seed)
        fmt::print("mode={} seed={}\n", mode_label(r), *r.seed);
    else
        fmt::print("mode={}{}\n", mode_label(r), r.budget_exhausted ? " budget_exhausted" : "");
    return 0;
}

// verify

struct VerifyArgs {
    std::string b0;
    std::size_t n = 0;
    bool expand = false;
    bool sampled = false;
    VerifyOptions options;
    std::uint64_t range_begin = 0;
    std::uint64_t range_end = 0;
    std::uint64_t chunk = 1'000'000;
    std::uint64_t max_chunks = 0;
    std::string checkpoint;
    bool range = false;
    bool json = false;
};

void print_report(const VerificationReport& r)
{
    for (const auto& w : r.warnings)
        fmt::print(stderr, "warning: {}\n", w);
    if (r.passed) {
        fmt::print("PASS: special {}-Brinkhuis {}-triple verified ({}), checks={}, bound {:.7f}\n",
                   r.n, r.k, mode_name(r.mode), r.checks_performed, *r.bound);
        return;
    }
    fmt::print("FAIL: stage {}: {}\n", stage_name(*r.stage_failed), r.message);
    if (r.witness) {
        std::string slots;
        for (const auto s : r.witness->slots)
            slots += fmt::format(" {}", s);
        fmt::print("witness: pattern={} slots:{} square start={} period={}\n",
                   r.witness->pattern.str(), slots, r.witness->square.start,
                   r.witness->square.period);
    }
}

int run_verify(VerifyArgs a)
{
    std::vector<Word> words = parse_word_file(a.b0);
    if (a.expand)
        words = expand_with_reversals(words);
    const TripleCandidate cand{a.n, std::move(words)};

    if (!a.range) {
        a.options.mode = a.sampled ? VerifyMode::Sampled : VerifyMode::Full;
        const VerificationReport r = verify_triple(cand, a.options);
        if (a.json)
            print_json(to_json(r));
        else
            print_report(r);
        return r.passed ? 0 : kExitFailed;
    }

    PreparedCandidate prep = prepare_candidate(cand, a.options.workers);
    if (!prep.table) {
        if (a.json)
            print_json(to_json(prep.report));
        else
            print_report(prep.report);
        return kExitFailed;
    }
    RangeRunOptions ro;
    ro.begin = a.range_begin;
    ro.end = a.range_end == 0 ? triple_index_count(cand.k()) : a.range_end;
    ro.chunk = a.chunk;
    ro.max_chunks = a.max_chunks;
    ro.workers = a.options.workers;
    ro.checkpoint = a.checkpoint;
    const Checkpoint cp = run_checkpointed_range(*prep.table, ro);
    if (a.json) {
        print_json(to_json(cp));
    } else {
        fmt::print("range [{}, {}): next={} checks={} chunks={} {}\n", cp.begin, cp.end, cp.next,
                   cp.checks, cp.chunks_completed,
                   cp.failure_index ? fmt::format("FAILED at index {}", *cp.failure_index)
                   : cp.complete()  ? std::string("complete")
                                    : std::string("incomplete"));
    }
    return cp.failure_index ? kExitFailed : 0;
}

// bound

struct BoundArgs {
    std::size_t n = 0;
    std::uint64_t k = 0;
    bool json = false;
};

int run_bound(const BoundArgs& a)
{
    const double b = compute_bound(a.n, a.k);
    if (a.json)
        print_json({{"n", a.n}, {"k", a.k}, {"bound", std::round(b * 1e7) / 1e7}});
    else
        fmt::print("{:.7f}\n", b);
    return 0;
}

// pipeline

struct PipelineArgs {
    std::size_t n = 0;
    std::string cls = "both";
    std::string solver = "exact";
    RhcsOptions rhcs;
    unsigned workers = 1;
    std::string out_dir;
    bool json = false;
};

int run_pipeline_cmd(const PipelineArgs& a)
{
    PipelineOptions o;
    o.n = a.n;
    if (a.cls == "1")
        o.classes = {GrimmClassId::Class1};
    else if (a.cls == "2")
        o.classes = {GrimmClassId::Class2};
    o.solver = a.solver == "rhcs" ? Solver::Rhcs : Solver::Exact;
    o.rhcs = a.rhcs;
    o.workers = a.workers;
    if (!a.out_dir.empty())
        o.out_dir = a.out_dir;
    const PipelineSummary s = run_pipeline(o);
    if (a.json)
        print_json(to_json(s));
    else
        std::cout << format_pipeline_log(s, o);
    for (const auto& run : s.runs)
        if (run.report && !run.report->passed)
            return kExitFailed;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Squarefree ternary words and special Brinkhuis triples"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "number of squarefree words of length n");
    c->add_option("--n", count.n, "word length")->required();
    c->add_option("--alphabet", count.alphabet, "alphabet size")->check(CLI::IsMember({2, 3}));
    c->add_flag("--json", count.json);

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "list squarefree words, optionally of one class");
    e->add_option("--n", en.n, "word length")->required();
    e->add_option("--class", en.cls, "restrict to a prefix/suffix class")->check(CLI::IsMember({1, 2}));
    e->add_flag("--json", en.json);

    CensusArgs ce;
    auto* cs = app.add_subcommand("census", "census lines for both classes");
    cs->add_option("--n", ce.n, "word length")->required();
    cs->add_flag("--json", ce.json);

    AdmissibleArgs ad;
    auto* a = app.add_subcommand("admissible", "admissible reversal classes of one class");
    a->add_option("--n", ad.n, "word length")->required();
    a->add_option("--class", ad.cls, "class")->required()->check(CLI::IsMember({1, 2}));
    a->add_option("--out", ad.out, "write the admissible words to this file");
    a->add_flag("--json", ad.json);

    EdgesArgs ed;
    auto* g = app.add_subcommand("edges", "compatibility hypergraph edges");
    auto* g_n = g->add_option("--n", ed.n, "word length");
    auto* g_class = g->add_option("--class", ed.cls, "class")->check(CLI::IsMember({1, 2}));
    auto* g_words = g->add_option("--words", ed.words, "admissible word file (reversals added)");
    g_n->needs(g_class);
    g_class->needs(g_n);
    g_words->excludes(g_n)->excludes(g_class);
    g->add_option("--out", ed.out, "edges file (default: standard output)");
    g->add_flag("--unpruned", ed.unpruned, "test every triple from the definition");
    g->add_option("--workers", ed.workers, "threads (0: all cores)");
    g->add_flag("--json", ed.json);

    CliqueArgs cl;
    auto* q = app.add_subcommand("clique", "maximum clique of an edges file");
    q->add_option("--edges", cl.edges, "edges file")->required();
    auto* q_exact = q->add_flag("--exact", cl.exact, "branch and bound (default)");
    auto* q_rhcs = q->add_flag("--rhcs", cl.heuristic, "random restart heuristic");
    q_exact->excludes(q_rhcs);
    q->add_option("--seed", cl.rhcs.seed, "heuristic seed");
    q->add_option("--restarts", cl.rhcs.restarts, "heuristic restarts");
    q->add_option("--plateau", cl.rhcs.plateau_limit, "heuristic plateau moves per restart");
    q->add_option("--workers", cl.rhcs.workers, "heuristic threads (0: all cores)");
    q->add_option("--budget", cl.budget, "exact search time budget in seconds");
    q->add_flag("--json", cl.json);

    VerifyArgs ve;
    auto* v = app.add_subcommand("verify", "verify a special Brinkhuis triple given by B0");
    v->add_option("--b0", ve.b0, "word file")->required();
    v->add_option("--n", ve.n, "word length")->required();
    v->add_flag("--expand-reversals", ve.expand, "add the reversal of every word");
    auto* v_full = v->add_flag("--full", "check every slot triple (default)");
    auto* v_sampled = v->add_flag("--sampled", ve.sampled, "check a seeded sample of slot triples");
    v_full->excludes(v_sampled);
    v->add_option("--seed", ve.options.seed, "sample seed");
    v->add_option("--samples", ve.options.samples, "sample size");
    v->add_option("--workers", ve.options.workers, "threads (0: all cores)");
    auto* v_rb = v->add_option("--range-begin", ve.range_begin, "first slot triple index");
    auto* v_re = v->add_option("--range-end", ve.range_end, "end of the index range (default k^3)");
    auto* v_ch = v->add_option("--chunk", ve.chunk, "indices per checkpointed chunk");
    auto* v_mc = v->add_option("--max-chunks", ve.max_chunks, "stop after this many chunks");
    auto* v_cp = v->add_option("--checkpoint", ve.checkpoint, "checkpoint file for resuming");
    for (auto* opt : {v_rb, v_re, v_ch, v_mc, v_cp})
        opt->excludes(v_sampled);
    v->add_flag("--json", ve.json);

    BoundArgs bo;
    auto* b = app.add_subcommand("bound", "growth rate lower bound k^(1/(n-1))");
    b->add_option("--n", bo.n, "word length")->required();
    b->add_option("--k", bo.k, "words per class")->required();
    b->add_flag("--json", bo.json);

    PipelineArgs pi;
    auto* p = app.add_subcommand("pipeline", "enumeration through verification for one length");
    p->add_option("--n", pi.n, "word length")->required();
    p->add_option("--class", pi.cls, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    p->add_option("--solver", pi.solver, "exact or rhcs")->check(CLI::IsMember({"exact", "rhcs"}));
    p->add_option("--seed", pi.rhcs.seed, "heuristic seed");
    p->add_option("--restarts", pi.rhcs.restarts, "heuristic restarts");
    p->add_option("--plateau", pi.rhcs.plateau_limit, "heuristic plateau moves per restart");
    p->add_option("--workers", pi.workers, "threads (0: all cores)");
    p->add_option("--out-dir", pi.out_dir, "write word and edge files here");
    p->add_flag("--json", pi.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c)
            return run_count(count);
        if (*e)
            return run_enumerate(en);
        if (*cs)
            return run_census(ce);
        if (*a)
            return run_admissible(ad);
        if (*g)
            return run_edges(ed);
        if (*q)
            return run_clique(cl);
        if (*v) {
            ve.range = *v_rb || *v_re || *v_ch || *v_mc || *v_cp;
            return run_verify(ve);
        }
        if (*b)
            return run_bound(bo);
        if (*p)
            return run_pipeline_cmd(pi);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : kExitUsage;
    } catch (const InvalidSymbol& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitIo;
    } catch (const EmptyFile& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitIo;
    } catch (const IoError& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitIo;
    } catch (const FormatError& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitIo;
    } catch (const Error& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& err) {
        fmt::print(stderr, "error: {}\n", err.what());
        return kExitIo;
    }
    return kExitUsage;
}
