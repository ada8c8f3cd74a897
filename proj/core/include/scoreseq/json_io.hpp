#pragma once

#include "scoreseq/approximation.hpp"
#include "scoreseq/blowup.hpp"
#include "scoreseq/model.hpp"
#include "scoreseq/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

/*
 * JSON documents exchanged by the command-line tool. Every number that can be
 * fractional is written as a canonical "p/q" string ("3" for integers); vertex
 * labels are 1-based. Parsing failures throw InvalidArgument.
 *
 *   sequence    {"n": 3, "scores": ["0", "1", "2"]}
 *   tournament  {"n": 2, "weights": [["0", "1/2"], ["1/2", "0"]]}
 *   witness     {"image": [2, 1]}
 *   plan        {"n": 2, "m": 2, "targets": [[1, 2], [1, 2]]}
 *
 * Output is pretty-printed with a fixed key order, so equal values always
 * serialize to identical bytes.
 */

namespace scoreseq::json {

/// Raw score list in input order; sortedness is left to the caller.
std::vector<Rational> parse_scores(std::string_view text);
GeneralisedTournament parse_tournament(std::string_view text);
VertexBijection parse_witness(std::string_view text);
BlowUpPlan parse_plan(std::string_view text);

std::string to_json(const ScoreSequence& d);
std::string to_json(const GeneralisedTournament& g);
std::string to_json(const VertexBijection& rho);
std::string to_json(const ConditionReport& report);
std::string to_json(const BlowUpPlan& plan);
std::string to_json(const ApproximationTrace& trace);
std::string to_json(const EplettReport& report);

/// Output of `scoreseq realize`: a tournament document with extra fields, readable by
/// parse_tournament.
struct RealizationDocument {
    std::string method;
    GeneralisedTournament tournament;
    std::optional<VertexBijection> witness;
    std::vector<std::string> notices;
};
std::string to_json(const RealizationDocument& doc);

/// Output of `scoreseq approximate`: {"sequence": {...}, "trace": {...}}.
std::string to_json(const Approximation& approx);

}  // namespace scoreseq::json
