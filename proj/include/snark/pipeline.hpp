#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "snark/circular_flow.hpp"
#include "snark/matching.hpp"
#include "snark/multipole.hpp"
#include "snark/tetra_flow.hpp"

namespace snark {

using Json = nlohmann::json;

/// One acceptance criterion. The certificate holds everything the verdict
/// rests on and is deterministic; timing lives outside it.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    Json certificate;
    double seconds = 0;
    double budget_seconds = 0;
};

inline constexpr int criterion_count = 11;

struct PipelineOptions {
    /// Seed of the random (2,2)-poles in criterion 3.
    std::uint64_t seed = 2025;
};

std::string criterion_title(int id);
/// Runs criterion id in [1, criterion_count]; throws std::out_of_range otherwise.
CriterionResult run_criterion(int id, const PipelineOptions& options = {});

/// Every criterion in order, then the summary document.
std::vector<CriterionResult> run_all_criteria(const PipelineOptions& options = {});
Json summary_document(const std::vector<CriterionResult>& results, const PipelineOptions& options = {});

// Serialisation of certificates.
Json flow_json(const Multipole& m, const PQFlow& f);
Json cover_json(const Cover& c);
Json tetra_flow_json(const TetraFlow& f);

struct VerifyReport {
    int checked = 0;
    std::vector<std::string> problems;
};

/// Re-checks, without searching, every witness in a document produced by the
/// CLI or the pipeline: any object carrying a "graph" document next to a
/// "cover", "tetra_flow" or "flow".
VerifyReport verify_document(const Json& doc);

}  // namespace snark
