// pipeline.hpp -- enumeration through verification for one word length

#pragma once

#include "brinkhuis/admissibility.hpp"
#include "brinkhuis/compatibility.hpp"
#include "brinkhuis/enumeration.hpp"
#include "brinkhuis/hyperclique.hpp"
#include "brinkhuis/verify.hpp"

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace brinkhuis {

enum class Solver { Exact, Rhcs };

struct PipelineOptions {
    std::size_t n = 0;
    std::vector<GrimmClassId> classes{GrimmClassId::Class1, GrimmClassId::Class2};
    Solver solver = Solver::Exact;
    RhcsOptions rhcs;
    unsigned workers = 1;
    // When set, a<c>.txt (admissible words), t<c>.txt (edges) and
    // b<c>.txt (B0 of the found triple) are written here.
    std::optional<std::filesystem::path> out_dir;
};

struct ClassRun {
    GrimmClassId id;
    ClassCensus census;
    AdmissibleCensus admissible;
    CompatibilityHypergraph graph;
    CliqueResult clique;
    std::vector<Word> b0; // members of the clique's classes, sorted
    std::optional<VerificationReport> report; // absent when b0 is empty
};

struct PipelineSummary {
    std::size_t n = 0;
    std::vector<ClassRun> runs;
};

// Throws LengthTooSmall for n < 12.
PipelineSummary run_pipeline(const PipelineOptions& options);

// Human output in the style of the original search log: a "Success" line
// per admissible reversal class, the census, the edge counts, then the
// clique and its verification.
std::string format_pipeline_log(const PipelineSummary& summary, const PipelineOptions& options);

nlohmann::json to_json(const PipelineSummary& summary);

// Shared line formats.
std::string format_success_line(std::size_t index, const ReversalClass& c);
std::string format_census_line(int class_number, const ClassCensus& a, const AdmissibleCensus& b);

} // namespace brinkhuis
