#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beables/json_convert.hpp"
#include "beables/tolerance.hpp"

namespace beables {

inline constexpr const char* kToolVersion = "0.1.0";

// Where an assertion's expected value comes from: a claim of the verified
// publication, a trivial identity, or an independent derivation.
enum class Provenance { paper, trivial, derived };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// One verified statement: expected against actual with the residual that
// decided it. passed holds exactly when residual <= tolerance.
struct Assertion {
    std::string id;
    std::string description;
    Json expected;
    Json actual;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    Provenance provenance = Provenance::derived;
    std::string citation;

    bool operator==(const Assertion&) const = default;
};

Assertion make_assertion(std::string id, std::string description, Json expected, Json actual,
                         double residual, double tolerance, Provenance provenance,
                         std::string citation);

// Convenience for yes/no assertions: residual 0 on match, 1 on mismatch.
Assertion make_bool_assertion(std::string id, std::string description, bool expected,
                              bool actual, Provenance provenance, std::string citation);

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool all_passed = true;

    bool operator==(const ReportSummary&) const = default;
};

struct Report {
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    TolerancePolicy tolerance;
    std::map<std::string, std::vector<Assertion>> sections;
    ReportSummary summary;

    bool operator==(const Report&) const;
};

// Deterministic assembly: sections ordered by name, assertions by id,
// summary recomputed. Throws DuplicateId on colliding assertion ids within
// a section.
Report assemble(std::map<std::string, std::vector<Assertion>> sections, std::uint64_t seed,
                const TolerancePolicy& tol);

std::string serialize(const Report& report);
Report parse_report(const std::string& text);

}  // namespace beables
