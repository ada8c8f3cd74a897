// scoreseq: command-line front end for self-converse score sequences.
//
// Exit codes: 0 success, 1 infeasible input (a condition fails, no witness,
// oracle mismatch), 2 unreadable or malformed input, 3 resource cap hit,
// 4 internal error.

#include "scoreseq/scoreseq.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace scoreseq;

enum ExitCode : int {
    kOk = 0,
    kInfeasible = 1,
    kParseError = 2,
    kResourceLimit = 3,
    kInternal = 4,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + output + "'");
    out << text;
}

struct SequenceInput {
    ScoreSequence sequence;
    std::vector<std::size_t> order;  // sorted position -> input position
};

SequenceInput load_sequence(const std::string& path, bool sort) {
    auto raw = json::parse_scores(read_file(path));
    if (!sort) {
        ScoreSequence d(std::move(raw));
        std::vector<std::size_t> order(d.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        return {std::move(d), std::move(order)};
    }
    auto normalized = normalize_scores(std::move(raw));
    return {std::move(normalized.sequence), std::move(normalized.order)};
}

struct CheckArgs {
    std::string input;
    std::string output;
    bool sort = false;
};

int run_check(const CheckArgs& args) {
    const auto in = load_sequence(args.input, args.sort);
    const auto report = check_condition_I(in.sequence);
    emit(json::to_json(report), args.output);
    return report.condition_I && report.condition_II ? kOk : kInfeasible;
}

struct RealizeArgs {
    std::string input;
    std::string output;
    std::string method = "auto";
    std::size_t cap = kDefaultSymmetricCap;
    std::size_t moon_cap = RealizeOptions{}.moon_cap;
    bool sort = false;
};

int run_realize(const RealizeArgs& args) {
    const auto in = load_sequence(args.input, args.sort);
    const ScoreSequence& d = in.sequence;
    const RealizeOptions options{args.cap, args.moon_cap};

    std::string method = args.method;
    std::vector<std::string> notices;
    if (method == "auto") {
        const auto report = check_condition_I(d);
        if (!report.condition_I || !report.condition_II) {
            std::cerr << "scoreseq: no self-converse realization: Condition "
                      << (report.condition_I ? "II" : "I")
                      << " fails (use --method moon for a plain realization)\n";
            return kInfeasible;
        }
        const std::uint64_t m = lcm_denominator(d);
        if (m <= args.cap && d.size() * m <= args.cap) {
            method = "pipeline";
        } else {
            method = "symmetrize";
            notices.push_back("blow-up of " + std::to_string(d.size()) + " x " + std::to_string(m) +
                              " vertices exceeds the cap of " + std::to_string(args.cap) +
                              "; used symmetrize(moon) instead of the blow-up pipeline");
            std::cerr << "scoreseq: notice: " << notices.back() << "\n";
        }
    }

    std::optional<GeneralisedTournament> g;
    std::optional<VertexBijection> witness;
    if (method == "pipeline") {
        auto result = realize_self_converse_rational(d, options);
        g = std::move(result.tournament);
        witness = std::move(result.witness);
    } else if (method == "symmetrize") {
        g = symmetrize(moon_realize(d, options));
        witness = VertexBijection::reversal(d.size());
    } else {
        g = moon_realize(d, options);
    }

    // Back to the caller's labeling when the input was sorted on the way in.
    const std::size_t n = d.size();
    std::vector<std::size_t> input_to_sorted(n);
    for (std::size_t k = 0; k < n; ++k) input_to_sorted[in.order[k]] = k;
    GeneralisedTournament out = relabel(*g, input_to_sorted);
    if (witness) {
        std::vector<std::size_t> image(n);
        for (std::size_t v = 0; v < n; ++v) image[v] = in.order[(*witness)(input_to_sorted[v])];
        witness = VertexBijection(std::move(image));
        if (!is_self_converse_witness(out, *witness)) {
            throw InternalError("realization failed its own witness check");
        }
    }

    emit(json::to_json(json::RealizationDocument{method, std::move(out), witness, notices}),
         args.output);
    return kOk;
}

struct ApproximateArgs {
    std::string input;
    std::string output;
    std::uint64_t m = 1;
    bool sort = false;
};

int run_approximate(const ApproximateArgs& args) {
    const auto in = load_sequence(args.input, args.sort);
    emit(json::to_json(approximate(in.sequence, args.m)), args.output);
    return kOk;
}

struct PlanArgs {
    std::string input;
    std::string output;
    std::uint64_t m = 0;
};

int run_plan(const PlanArgs& args) {
    const auto in = load_sequence(args.input, false);
    const std::uint64_t m = args.m == 0 ? lcm_denominator(in.sequence) : args.m;
    emit(json::to_json(blowup_scores(in.sequence, m)), args.output);
    return kOk;
}

struct WitnessArgs {
    std::string input;
    std::string output;
    std::size_t cap = kDefaultWitnessSearchCap;
};

int run_witness(const WitnessArgs& args) {
    const auto g = json::parse_tournament(read_file(args.input));
    const auto rho = find_self_converse_witness(g, args.cap);
    if (!rho) {
        std::cerr << "scoreseq: no witness: the tournament is not self-converse\n";
        return kInfeasible;
    }
    emit(json::to_json(*rho), args.output);
    return kOk;
}

struct OracleArgs {
    std::string output;
    std::size_t n = 1;
};

int run_oracle(const OracleArgs& args) {
    const auto report = verify_eplett(args.n);
    emit(json::to_json(report), args.output);
    return report.equal ? kOk : kInfeasible;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidArgument& e) {
        std::cerr << "scoreseq: invalid input: " << e.what() << "\n";
        return kParseError;
    } catch (const ConditionViolation& e) {
        std::cerr << "scoreseq: infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const NonIntegral& e) {
        std::cerr << "scoreseq: infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const ResourceLimit& e) {
        std::cerr << "scoreseq: resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "scoreseq: internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Score sequences of (self-converse) generalised tournaments"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Test Conditions I and II for a sequence");
    check_cmd->add_option("input", check.input, "Sequence JSON file")->required();
    check_cmd->add_flag("--sort", check.sort, "Sort unsorted input instead of rejecting it");
    check_cmd->add_option("-o,--output", check.output, "Write the report here instead of stdout");

    RealizeArgs realize;
    auto* realize_cmd = app.add_subcommand("realize", "Construct a tournament with the given scores");
    realize_cmd->add_option("input", realize.input, "Sequence JSON file")->required();
    realize_cmd->add_option("--method", realize.method, "auto, pipeline, symmetrize or moon")
        ->check(CLI::IsMember({"auto", "pipeline", "symmetrize", "moon"}))
        ->capture_default_str();
    realize_cmd->add_option("--cap", realize.cap, "Largest blow-up for the self-converse search")
        ->capture_default_str();
    realize_cmd->add_option("--moon-cap", realize.moon_cap, "Largest blow-up for the moon path")
        ->capture_default_str();
    realize_cmd->add_flag("--sort", realize.sort, "Sort unsorted input; output keeps input labels");
    realize_cmd->add_option("-o,--output", realize.output, "Write the tournament here instead of stdout");

    ApproximateArgs approx;
    auto* approx_cmd = app.add_subcommand("approximate", "Perturb a sequence within 1/m, keeping I and II");
    approx_cmd->add_option("input", approx.input, "Sequence JSON file")->required();
    approx_cmd->add_option("-m", approx.m, "Approximation parameter")->required()->check(CLI::PositiveNumber);
    approx_cmd->add_flag("--sort", approx.sort, "Sort unsorted input instead of rejecting it");
    approx_cmd->add_option("-o,--output", approx.output, "Write the result here instead of stdout");

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand("plan", "Print the blow-up degree plan of a sequence");
    plan_cmd->add_option("input", plan.input, "Sequence JSON file")->required();
    plan_cmd->add_option("-m", plan.m, "Blow-up factor (default: lcm of the denominators)");
    plan_cmd->add_option("-o,--output", plan.output, "Write the plan here instead of stdout");

    WitnessArgs witness;
    auto* witness_cmd = app.add_subcommand("witness", "Search for a self-converse witness");
    witness_cmd->add_option("input", witness.input, "Tournament JSON file")->required();
    witness_cmd->add_option("--cap", witness.cap, "Largest tournament to search")->capture_default_str();
    witness_cmd->add_option("-o,--output", witness.output, "Write the witness here instead of stdout");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively compare brute force with Conditions I and II");
    oracle_cmd->add_option("--n", oracle.n, "Number of vertices (1..6)")->required();
    oracle_cmd->add_option("-o,--output", oracle.output, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    if (*check_cmd) return guarded([&] { return run_check(check); });
    if (*realize_cmd) return guarded([&] { return run_realize(realize); });
    if (*approx_cmd) return guarded([&] { return run_approximate(approx); });
    if (*plan_cmd) return guarded([&] { return run_plan(plan); });
    if (*witness_cmd) return guarded([&] { return run_witness(witness); });
    if (*oracle_cmd) return guarded([&] { return run_oracle(oracle); });
    return kParseError;
}
