#include "beables/report.hpp"

#include <algorithm>

#include "beables/errors.hpp"

namespace beables {

// --- json conversions ----------------------------------------------------

Json complex_to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(path + ": expected a complex value as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Vector vector_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected an array");
    Vector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = complex_from_json(j[i], path + "/" + std::to_string(i));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw SchemaError(path + "/0: expected an array");
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_path = path + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError(row_path + ": ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k)
            m(static_cast<Index>(i), static_cast<Index>(k)) =
                complex_from_json(j[i][k], row_path + "/" + std::to_string(k));
    }
    return m;
}

// --- assertions ------------------------------------------------------------

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::paper: return "paper";
        case Provenance::trivial: return "trivial";
        case Provenance::derived: return "derived";
    }
    return "derived";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "paper") return Provenance::paper;
    if (s == "trivial") return Provenance::trivial;
    if (s == "derived") return Provenance::derived;
    throw SchemaError("unknown provenance tag: " + s);
}

Assertion make_assertion(std::string id, std::string description, Json expected, Json actual,
                         double residual, double tolerance, Provenance provenance,
                         std::string citation) {
    Assertion a;
    a.id = std::move(id);
    a.description = std::move(description);
    a.expected = std::move(expected);
    a.actual = std::move(actual);
    a.residual = residual;
    a.tolerance = tolerance;
    a.passed = residual <= tolerance;
    a.provenance = provenance;
    a.citation = std::move(citation);
    return a;
}

Assertion make_bool_assertion(std::string id, std::string description, bool expected,
                              bool actual, Provenance provenance, std::string citation) {
    return make_assertion(std::move(id), std::move(description), expected, actual,
                          expected == actual ? 0.0 : 1.0, 0.0, provenance,
                          std::move(citation));
}

// --- report ------------------------------------------------------------------

bool Report::operator==(const Report& other) const {
    return tool_version == other.tool_version && seed == other.seed &&
           tolerance.eps_eq == other.tolerance.eps_eq &&
           tolerance.eps_eig == other.tolerance.eps_eig && sections == other.sections &&
           summary == other.summary;
}

Report assemble(std::map<std::string, std::vector<Assertion>> sections, std::uint64_t seed,
                const TolerancePolicy& tol) {
    Report report;
    report.seed = seed;
    report.tolerance = tol;
    for (auto& [name, assertions] : sections) {
        std::stable_sort(assertions.begin(), assertions.end(),
                         [](const Assertion& a, const Assertion& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < assertions.size(); ++i)
            if (assertions[i].id == assertions[i - 1].id)
                throw DuplicateId("assemble: duplicate assertion id '" + assertions[i].id +
                                  "' in section '" + name + "'");
        report.summary.total += assertions.size();
        for (const Assertion& a : assertions)
            (a.passed ? report.summary.passed : report.summary.failed) += 1;
    }
    report.summary.all_passed = report.summary.failed == 0;
    report.sections = std::move(sections);
    return report;
}

namespace {

Json assertion_to_json(const Assertion& a) {
    Json j;
    j["id"] = a.id;
    j["description"] = a.description;
    j["expected"] = a.expected;
    j["actual"] = a.actual;
    j["residual"] = a.residual;
    j["tolerance"] = a.tolerance;
    j["passed"] = a.passed;
    j["provenance"] = to_string(a.provenance);
    j["citation"] = a.citation;
    return j;
}

Assertion assertion_from_json(const Json& j) {
    Assertion a;
    a.id = j.at("id").get<std::string>();
    a.description = j.at("description").get<std::string>();
    a.expected = j.at("expected");
    a.actual = j.at("actual");
    a.residual = j.at("residual").get<double>();
    a.tolerance = j.at("tolerance").get<double>();
    a.passed = j.at("passed").get<bool>();
    a.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    a.citation = j.at("citation").get<std::string>();
    return a;
}

}  // namespace

std::string serialize(const Report& report) {
    Json j;
    j["tool_version"] = report.tool_version;
    j["seed"] = report.seed;
    j["tolerance"] = Json{{"eps_eq", report.tolerance.eps_eq},
                          {"eps_eig", report.tolerance.eps_eig}};
    Json sections;
    for (const auto& [name, assertions] : report.sections) {
        Json list = Json::array();
        for (const Assertion& a : assertions) list.push_back(assertion_to_json(a));
        sections[name] = std::move(list);
    }
    j["sections"] = std::move(sections);
    j["summary"] = Json{{"total", report.summary.total},
                        {"passed", report.summary.passed},
                        {"failed", report.summary.failed},
                        {"all_passed", report.summary.all_passed}};
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
    const Json j = Json::parse(text);
    Report report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.tolerance.eps_eq = j.at("tolerance").at("eps_eq").get<double>();
    report.tolerance.eps_eig = j.at("tolerance").at("eps_eig").get<double>();
    for (const auto& [name, list] : j.at("sections").items()) {
        std::vector<Assertion> assertions;
        for (const Json& a : list) assertions.push_back(assertion_from_json(a));
        report.sections[name] = std::move(assertions);
    }
    report.summary.total = j.at("summary").at("total").get<std::size_t>();
    report.summary.passed = j.at("summary").at("passed").get<std::size_t>();
    report.summary.failed = j.at("summary").at("failed").get<std::size_t>();
    report.summary.all_passed = j.at("summary").at("all_passed").get<bool>();
    return report;
}

}  // namespace beables
