#include "scoreseq/json_io.hpp"

#include "scoreseq/errors.hpp"

#include "json.hpp"

#include <string>

namespace scoreseq::json {

using Json = nlohmann::ordered_json;

namespace {

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InvalidArgument(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

Rational rational_from(const Json& value) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    throw InvalidArgument("rationals must be written as \"p/q\" strings or integers");
}

std::size_t size_from(const Json& value, const char* what) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw InvalidArgument(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

Json rationals(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& r : values) out.push_back(r.to_string());
    return out;
}

Json sequence_json(const ScoreSequence& d) {
    Json out;
    out["n"] = d.size();
    out["scores"] = rationals(d.entries());
    return out;
}

Json tournament_json(const GeneralisedTournament& g) {
    Json out;
    out["n"] = g.size();
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g.weight(i, j).to_string());
        rows.push_back(std::move(row));
    }
    out["weights"] = std::move(rows);
    return out;
}

Json witness_json(const VertexBijection& rho) {
    Json image = Json::array();
    for (auto v : rho.image()) image.push_back(v + 1);
    Json out;
    out["image"] = std::move(image);
    return out;
}

Json trace_json(const ApproximationTrace& trace) {
    Json out;
    out["n_prime"] = trace.n_prime ? Json(*trace.n_prime) : Json(nullptr);
    out["m"] = trace.m;
    Json intervals = Json::array();
    for (const auto& iv : trace.intervals) {
        intervals.push_back(Json::array({iv.lo.to_string(), iv.hi.to_string()}));
    }
    out["intervals"] = std::move(intervals);
    out["picks"] = rationals(trace.picks);
    return out;
}

Json sequence_list(const std::vector<ScoreSequence>& list) {
    Json out = Json::array();
    for (const auto& d : list) out.push_back(rationals(d.entries()));
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::vector<Rational> parse_scores(std::string_view text) {
    const Json doc = parse_document(text);
    const Json& scores = field(doc, "scores");
    if (!scores.is_array()) throw InvalidArgument("'scores' must be an array");
    if (scores.empty()) throw InvalidArgument("'scores' must not be empty");
    if (doc.contains("n") && size_from(doc.at("n"), "n") != scores.size()) {
        throw InvalidArgument("'n' does not match the number of scores");
    }
    std::vector<Rational> out;
    out.reserve(scores.size());
    for (const auto& s : scores) out.push_back(rational_from(s));
    return out;
}

GeneralisedTournament parse_tournament(std::string_view text) {
    const Json doc = parse_document(text);
    const Json& rows = field(doc, "weights");
    if (!rows.is_array() || rows.empty()) throw InvalidArgument("'weights' must be a non-empty array");
    const std::size_t n = rows.size();
    if (doc.contains("n") && size_from(doc.at("n"), "n") != n) {
        throw InvalidArgument("'n' does not match the weight matrix");
    }
    std::vector<Rational> weights;
    weights.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw InvalidArgument("weight matrix must be square");
        for (const auto& w : row) weights.push_back(rational_from(w));
    }
    return GeneralisedTournament(n, std::move(weights));
}

VertexBijection parse_witness(std::string_view text) {
    const Json doc = parse_document(text);
    const Json& image = field(doc, "image");
    if (!image.is_array()) throw InvalidArgument("'image' must be an array");
    std::vector<std::size_t> out;
    out.reserve(image.size());
    for (const auto& v : image) {
        const std::size_t label = size_from(v, "witness label");
        if (label == 0) throw InvalidArgument("witness labels are 1-based");
        out.push_back(label - 1);
    }
    return VertexBijection(std::move(out));
}

BlowUpPlan parse_plan(std::string_view text) {
    const Json doc = parse_document(text);
    const std::size_t n = size_from(field(doc, "n"), "n");
    const std::size_t m = size_from(field(doc, "m"), "m");
    const Json& rows = field(doc, "targets");
    if (!rows.is_array() || rows.size() != n) throw DimensionMismatch("'targets' must have n rows");
    std::vector<std::int64_t> targets;
    targets.reserve(n * m);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != m) throw DimensionMismatch("'targets' rows must have m entries");
        for (const auto& c : row) {
            if (!c.is_number_integer()) throw InvalidArgument("plan targets must be integers");
            targets.push_back(c.get<std::int64_t>());
        }
    }
    return BlowUpPlan(n, m, std::move(targets));
}

std::string to_json(const ScoreSequence& d) { return dump(sequence_json(d)); }

std::string to_json(const GeneralisedTournament& g) { return dump(tournament_json(g)); }

std::string to_json(const VertexBijection& rho) { return dump(witness_json(rho)); }

std::string to_json(const ConditionReport& report) {
    Json out;
    out["n"] = report.prefix_slacks.size();
    out["prefix_slacks"] = rationals(report.prefix_slacks);
    out["condition_I"] = report.condition_I;
    out["condition_II"] = report.condition_II;
    out["first_violation"] =
        report.first_violation ? Json(*report.first_violation) : Json(nullptr);
    return dump(out);
}

std::string to_json(const BlowUpPlan& plan) {
    Json out;
    out["n"] = plan.clusters();
    out["m"] = plan.factor();
    Json rows = Json::array();
    for (std::size_t i = 0; i < plan.clusters(); ++i) {
        Json row = Json::array();
        for (std::size_t l = 0; l < plan.factor(); ++l) row.push_back(plan.target(i, l));
        rows.push_back(std::move(row));
    }
    out["targets"] = std::move(rows);
    return dump(out);
}

std::string to_json(const ApproximationTrace& trace) { return dump(trace_json(trace)); }

std::string to_json(const EplettReport& report) {
    Json out;
    out["n"] = report.n;
    out["equal"] = report.equal;
    out["only_in_conditions"] = sequence_list(report.only_in_conditions);
    out["only_in_bruteforce"] = sequence_list(report.only_in_bruteforce);
    out["sequences"] = sequence_list({report.from_conditions.begin(), report.from_conditions.end()});
    return dump(out);
}

std::string to_json(const RealizationDocument& doc) {
    Json out = tournament_json(doc.tournament);
    out["method"] = doc.method;
    out["scores"] = rationals(scores_of(doc.tournament).labeled);
    out["witness"] = doc.witness ? witness_json(*doc.witness) : Json(nullptr);
    Json notices = Json::array();
    for (const auto& note : doc.notices) notices.push_back(note);
    out["notices"] = std::move(notices);
    return dump(out);
}

std::string to_json(const Approximation& approx) {
    Json out;
    out["sequence"] = sequence_json(approx.sequence);
    out["trace"] = trace_json(approx.trace);
    return dump(out);
}

}  // namespace scoreseq::json
