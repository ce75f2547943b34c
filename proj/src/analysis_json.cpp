#include "codetops/analysis_json.hpp"

namespace codetops {

namespace {

Json row_to_json(const Field& f, std::span<const uint32_t> row) {
    Json out = Json::array();
    for (uint32_t v : row) out.push_back(f.format(v));
    return out;
}

Json rows_to_json(const MatrixGF& m) {
    Json out = Json::array();
    for (size_t r = 0; r < m.rows(); ++r)
        out.push_back(row_to_json(*m.field(), m.row(r)));
    return out;
}

std::vector<uint32_t> json_to_row(const Field& f, const Json& j) {
    std::vector<uint32_t> row;
    row.reserve(j.size());
    for (const auto& item : j) {
        std::optional<uint32_t> v =
            f.parse_element(item.get<std::string>());
        if (!v)
            throw ParseError(0, 0,
                             "'" + item.get<std::string>() +
                                 "' is not an element of " + f.describe());
        row.push_back(*v);
    }
    return row;
}

std::vector<std::vector<uint32_t>> json_to_rows(const Field& f,
                                                const Json& j) {
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(json_to_row(f, r));
    return rows;
}

Subspace json_to_subspace(const FieldPtr& f, const Json& j, size_t n) {
    if (j.empty()) return Subspace::zero(f, n);
    return Subspace::from_rows(f, json_to_rows(*f, j));
}

Classification classification_from_string(const std::string& s) {
    if (s == "Empty") return Classification::Empty;
    if (s == "SinglePoint") return Classification::SinglePoint;
    if (s == "LineContained") return Classification::LineContained;
    if (s == "MaximalTop") return Classification::MaximalTop;
    throw ParseError(0, 0, "unknown classification '" + s + "'");
}

std::string big_to_string(const BigInt& v) { return v.str(); }

}  // namespace

Json analysis_to_json(const TopAnalysis& a, double seconds) {
    const Field& f = *a.field;
    Json j;
    j["field"] = {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
    j["n"] = a.n;
    j["k"] = a.k;
    j["generator"] = rows_to_json(a.generator);
    j["degenerate"] = a.degenerate;

    if (a.classes) {
        Json idx = Json::array();
        for (const auto& c : a.classes->classes) idx.push_back(c);
        Json reps = Json::array();
        for (const auto& r : a.classes->reps) reps.push_back(row_to_json(f, r));
        j["column_classes"] = {{"indices", idx}, {"representatives", reps}};
    } else {
        j["column_classes"] = nullptr;
    }

    Json wp = Json::array();
    for (const auto& w : a.wprime) wp.push_back(row_to_json(f, w));
    j["wprime"] = wp;
    j["wprime_count"] = {{"projective", a.wprime.size()},
                         {"full", big_to_string(a.wprime_full_count())}};
    j["dim_w"] = a.w_span.dim();
    j["w_perp"] = rows_to_json(a.w_perp.basis());

    Json members = Json::array();
    for (const Subspace& s : a.members) members.push_back(rows_to_json(s.basis()));
    j["members"] = members;
    j["common"] = a.common ? rows_to_json(a.common->basis()) : Json(nullptr);

    j["classification"] = to_string(a.classification);
    if (a.line_pair)
        j["line"] = {{"s", rows_to_json(a.line_pair->first.basis())},
                     {"u", rows_to_json(a.line_pair->second.basis())}};
    else
        j["line"] = nullptr;

    j["counts"] = {
        {"top_size", big_to_string(a.top_size())},
        {"members", a.members.size()},
        {"lines_through_member",
         a.line_count ? Json(big_to_string(*a.line_count)) : Json(nullptr)}};

    if (seconds >= 0) j["timing_seconds"] = seconds;
    return j;
}

TopAnalysis analysis_from_json(const Json& j) {
    const Json& jf = j.at("field");
    std::optional<std::vector<uint32_t>> modulus;
    std::vector<uint32_t> mod = jf.at("modulus").get<std::vector<uint32_t>>();
    if (!mod.empty()) modulus = mod;
    FieldPtr field = Field::make(jf.at("p").get<uint64_t>(),
                                 jf.at("m").get<uint32_t>(), modulus);

    MatrixGF generator =
        MatrixGF::from_rows(field, json_to_rows(*field, j.at("generator")));
    size_t n = j.at("n").get<size_t>();
    size_t k = j.at("k").get<size_t>();
    if (generator.cols() != n || generator.rows() != k + 1)
        throw ParseError(0, 0, "generator shape disagrees with n/k");

    TopAnalysis a{field,
                  n,
                  k,
                  generator,
                  Subspace::from_span(generator),
                  j.at("degenerate").get<bool>(),
                  std::nullopt,
                  {},
                  Subspace::zero(field, k + 1),
                  Subspace::full(field, k + 1),
                  {},
                  std::nullopt,
                  classification_from_string(
                      j.at("classification").get<std::string>()),
                  std::nullopt,
                  std::nullopt};

    if (!j.at("column_classes").is_null()) a.classes = column_classes(generator);

    for (const auto& w : j.at("wprime"))
        a.wprime.push_back(json_to_row(*field, w));
    if (!a.wprime.empty()) {
        a.w_span = Subspace::from_rows(field, a.wprime);
        a.w_perp = orthogonal_complement(a.w_span);
    }

    for (const auto& mem : j.at("members"))
        a.members.push_back(json_to_subspace(field, mem, n));
    if (!j.at("common").is_null())
        a.common = json_to_subspace(field, j.at("common"), n);

    if (!j.at("line").is_null())
        a.line_pair = std::make_pair(
            json_to_subspace(field, j.at("line").at("s"), n),
            json_to_subspace(field, j.at("line").at("u"), n));

    const Json& counts = j.at("counts");
    if (!counts.at("lines_through_member").is_null())
        a.line_count =
            BigInt(counts.at("lines_through_member").get<std::string>());
    return a;
}

}  // namespace codetops
