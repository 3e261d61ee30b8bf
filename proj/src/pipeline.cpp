// pipeline.cpp -- enumeration through verification for one word length

#include "brinkhuis/pipeline.hpp"

#include "brinkhuis/errors.hpp"
#include "brinkhuis/word_file.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>

namespace brinkhuis {

std::string format_success_line(std::size_t index, const ReversalClass& c)
{
    return fmt::format("Success [{:3}]: {}{}", index, c.representative().str(),
                       c.palindromic() ? " (palindromic)" : "");
}

std::string format_census_line(int cls, const ClassCensus& a, const AdmissibleCensus& b)
{
    return fmt::format("a{0}={1:3}, a{0}p={2:3}, a{0}n={3:3};   b{0}={4:3}, b{0}p={5:3}, b{0}n={6:3}",
                       cls, a.a, a.a_p, a.a_n, b.b, b.b_p, b.b_n);
}

namespace {

void write_edges_file(const std::filesystem::path& path, const CompatibilityHypergraph& g)
{
    std::ofstream out(path);
    if (!out)
        throw IoError(fmt::format("cannot write {}", path.string()));
    write_edges(out, g);
}

} // namespace

PipelineSummary run_pipeline(const PipelineOptions& options)
{
    if (options.n < kGrimmMinLength)
        throw LengthTooSmall(
            fmt::format("pipeline needs n >= {}, got {}", kGrimmMinLength, options.n));
    PipelineSummary summary;
    summary.n = options.n;
    for (const GrimmClassId id : options.classes) {
        const GrimmClass& cls = grimm_class(id);
        ClassRun run;
        run.id = id;
        const std::vector<Word> all = enumerate_grimm_class(cls, options.n);
        run.census = census_of(options.n, all);
        std::vector<Word> admissible;
        for (const Word& w : all)
            if (is_admissible(w))
                admissible.push_back(w);
        run.admissible = admissible_census_of(options.n, admissible);
        run.graph = build_hypergraph(reversal_classes(admissible), EdgeStrategy::Pruned,
                                     options.workers);

        const CliqueInstance inst = CliqueInstance::from_hypergraph(run.graph);
        if (options.solver == Solver::Exact) {
            run.clique = exact_max_clique(inst);
        } else {
            RhcsOptions ro = options.rhcs;
            ro.workers = options.workers;
            run.clique = rhcs(inst, ro);
        }
        for (const auto v : run.clique.vertices) {
            const auto& m = run.graph.vertices[v].members();
            run.b0.insert(run.b0.end(), m.begin(), m.end());
        }
        std::sort(run.b0.begin(), run.b0.end());
        if (!run.b0.empty()) {
            VerifyOptions vo;
            vo.mode = VerifyMode::Full;
            vo.workers = options.workers;
            run.report = verify_triple(TripleCandidate{options.n, run.b0}, vo);
        }

        if (options.out_dir) {
            std::filesystem::create_directories(*options.out_dir);
            const int c = cls.number();
            if (!admissible.empty())
                write_word_file(*options.out_dir / fmt::format("a{}.txt", c), admissible);
            write_edges_file(*options.out_dir / fmt::format("t{}.txt", c), run.graph);
            if (!run.b0.empty())
                write_word_file(*options.out_dir / fmt::format("b{}.txt", c), run.b0);
        }
        summary.runs.push_back(std::move(run));
    }
    return summary;
}

std::string format_pipeline_log(const PipelineSummary& summary, const PipelineOptions& options)
{
    std::string out;
    auto line = [&](const std::string& s) {
        out += s;
        out += '\n';
    };
    std::size_t index = 0;
    for (const ClassRun& run : summary.runs)
        for (const ReversalClass& c : run.graph.vertices)
            line(format_success_line(++index, c));
    for (std::size_t i = 0; i < summary.runs.size(); ++i) {
        const ClassRun& run = summary.runs[i];
        line(std::string(i == 0 ? "Done:  " : "       ") +
             format_census_line(static_cast<int>(run.id), run.census, run.admissible));
    }
    for (const ClassRun& run : summary.runs) {
        const int c = static_cast<int>(run.id);
        line(fmt::format("{} admissible words of length {} read in", run.graph.vertices.size(),
                         summary.n));
        line("admissible triples:");
        line(fmt::format("{} admissible triples found", run.graph.triple_edges.size()));
        const bool exact = run.clique.certificate == Certificate::ExactOptimal;
        line(fmt::format("class {} hyperclique: size={} mode={}{}", c, run.clique.size,
                         exact ? "exact" : "heuristic",
                         run.clique.seed ? fmt::format(" seed={}", *run.clique.seed) : ""));
        std::string vs;
        for (const auto v : run.clique.vertices)
            vs += fmt::format(" {}", v);
        line(fmt::format("class {} vertices:{}", c, vs));
        if (!run.report) {
            line(fmt::format("class {} triple: no words to verify", c));
            continue;
        }
        const VerificationReport& r = *run.report;
        if (r.passed)
            line(fmt::format("class {} triple: special {}-Brinkhuis {}-triple verified ({}), "
                             "bound {:.7f}",
                             c, r.n, r.k, mode_name(r.mode), *r.bound));
        else
            line(fmt::format("class {} triple: verification FAILED at stage {}: {}", c,
                             stage_name(*r.stage_failed), r.message));
    }
    (void)options;
    return out;
}

nlohmann::json to_json(const PipelineSummary& summary)
{
    nlohmann::json j;
    j["n"] = summary.n;
    j["classes"] = nlohmann::json::array();
    for (const ClassRun& run : summary.runs) {
        nlohmann::json c;
        c["class"] = static_cast<int>(run.id);
        c["census"] = {{"a", run.census.a}, {"ap", run.census.a_p}, {"an", run.census.a_n}};
        c["admissible"] = {
            {"b", run.admissible.b}, {"bp", run.admissible.b_p}, {"bn", run.admissible.b_n}};
        nlohmann::json reps = nlohmann::json::array();
        for (const ReversalClass& v : run.graph.vertices)
            reps.push_back({{"word", v.representative().str()}, {"palindromic", v.palindromic()}});
        c["vertices"] = reps;
        c["pair_edges"] = run.graph.pair_edges.size();
        c["triple_edges"] = run.graph.triple_edges.size();
        c["clique"] = {{"size", run.clique.size},
                       {"vertices", run.clique.vertices},
                       {"mode", run.clique.certificate == Certificate::ExactOptimal ? "exact"
                                                                                     : "heuristic"},
                       {"seed", run.clique.seed ? nlohmann::json(*run.clique.seed)
                                                : nlohmann::json()}};
        c["report"] = run.report ? to_json(*run.report) : nlohmann::json();
        j["classes"].push_back(c);
    }
    return j;
}

} // namespace brinkhuis
