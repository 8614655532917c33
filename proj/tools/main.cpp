#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinweave/coupled_basis.hpp"
#include "spinweave/errors.hpp"
#include "spinweave/json_io.hpp"
#include "spinweave/projector.hpp"
#include "spinweave/setup.hpp"
#include "spinweave/verifier.hpp"

namespace {

using namespace spinweave;

// 0: success / identity holds; 1: bad input; 2: a check failed;
// 3: brute-force size cap exceeded.
constexpr int kExitBadInput = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitCapExceeded = 3;

void emit(const Json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw Error("cannot write to '" + output + "'");
    out << text;
}

SetupConfig compile_from_policy(const CouplingPath& path, HalfInt m, const std::string& policy) {
    if (policy == "canonical") return compile_setup(path, m, AssignmentPolicy::canonical());
    if (policy.starts_with("random:")) {
        std::string_view digits = std::string_view(policy).substr(7);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ParseError(policy, "bad seed in '" + policy + "'");
        return compile_setup(path, m, AssignmentPolicy::seeded(seed));
    }
    if (policy.starts_with("file:"))
        return compile_setup(path, m, load_layout_file(policy.substr(5)));
    throw ParseError(policy,
                     "policy must be canonical, random:<seed> or file:<layout.json>");
}

struct TargetArgs {
    std::string path;
    std::string m;
    std::string policy = "canonical";
    std::string output;
};

void add_target_options(CLI::App* cmd, TargetArgs& args) {
    cmd->add_option("--path", args.path, "coupling history, e.g. 1/2,1,1/2 or doubled 1,2,1")
        ->required();
    cmd->add_option("--m", args.m, "magnetic quantum number, e.g. 1/2 or -1")->required();
    cmd->add_option("--policy", args.policy, "canonical | random:<seed> | file:<layout.json>");
    cmd->add_option("-o,--output", args.output, "write JSON here instead of stdout");
}

int run_generate(const TargetArgs& args, bool decimal) {
    CouplingPath path = parse_path(args.path);
    HalfInt m = parse_half_int(args.m);
    SetupConfig cfg = compile_from_policy(path, m, args.policy);
    EquivalenceReport report = check_proportionality(path, m, cfg);
    SparseState alg = apply_projection_sequence(cfg);
    SparseState ref = build_coupled_state(path, m);
    emit(make_state_document(report, cfg, alg, ref, decimal), args.output);
    return report.holds ? 0 : kExitCheckFailed;
}

int run_oracle(const TargetArgs& args, int cap) {
    CouplingPath path = parse_path(args.path);
    HalfInt m = parse_half_int(args.m);
    SetupConfig cfg = compile_from_policy(path, m, args.policy);
    SparseState oracle_state = permutation_sum_oracle(cfg, m, cap);
    SparseState alg = apply_projection_sequence(cfg);
    bool equal = oracle_state == alg;
    emit(Json{{"equal", equal},
              {"label", Json{{"m", to_string(m)}, {"path", path.to_string()}}},
              {"n", cfg.n},
              {"schema", kSchemaVersion},
              {"setup", setup_to_json(cfg)},
              {"state_alg", state_to_json(alg)},
              {"state_oracle", state_to_json(oracle_state)}},
         args.output);
    return equal ? 0 : kExitCheckFailed;
}

int run_verify(const SweepOptions& opts, const std::string& output) {
    SweepSummary summary = full_sweep(opts);
    emit(summary_to_json(summary), output);
    return summary.all_passed ? 0 : kExitCheckFailed;
}

int run_enumerate(int n, const std::string& output) {
    std::vector<CouplingPath> paths = enumerate_paths(n);
    Json list = Json::array();
    long long state_count = 0;
    for (const CouplingPath& path : paths) {
        list.push_back(path.to_string());
        state_count += path.final_spin().doubled() + 1;
    }
    emit(Json{{"count", paths.size()},
              {"n", n},
              {"paths", std::move(list)},
              {"schema", kSchemaVersion},
              {"space_dimension", 1ll << n},
              {"state_count", state_count}},
         output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compile photon-detection setups for total-spin eigenstates and verify them"};
    app.require_subcommand(1);

    TargetArgs generate_args;
    bool decimal = false;
    CLI::App* generate = app.add_subcommand(
        "generate", "compile a setup, simulate it and compare to the coupled state");
    add_target_options(generate, generate_args);
    generate->add_flag("--decimal", decimal, "include approximate normalized amplitudes");

    TargetArgs oracle_args;
    int oracle_cmd_cap = kDefaultOracleCap;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "compare the brute-force permutation sum against the sequential fold");
    add_target_options(oracle, oracle_args);
    oracle->add_option("--oracle-cap", oracle_cmd_cap, "largest n the permutation sum may attempt");

    SweepOptions sweep;
    std::string suite = "all";
    std::string verify_output;
    CLI::App* verify = app.add_subcommand("verify", "run identity checks over every (path, m)");
    verify->add_option("--n-max", sweep.n_max, "largest qubit count to sweep");
    verify->add_option("--suite", suite, "all | proportionality | recursion | sums | ratio | oracle | invariance")
        ->check(CLI::IsMember({"all", "proportionality", "recursion", "sums", "ratio", "oracle",
                               "invariance"}));
    verify->add_option("--seed", sweep.seed, "base seed for the randomized checks");
    verify->add_option("--oracle-cap", sweep.oracle_cap, "largest n the permutation sum may attempt");
    verify->add_option("--oracle-random-per-n", sweep.oracle_random_per_n,
                       "extra seeded-random layouts per n in the oracle suite");
    verify->add_option("--invariance-trials", sweep.invariance_trials,
                       "random layouts per (path, m) in the invariance suite");
    verify->add_option("--invariance-n-max", sweep.invariance_n_max,
                       "largest n for the invariance suite");
    verify->add_option("-o,--output", verify_output, "write JSON here instead of stdout");

    int enumerate_n = 0;
    std::string enumerate_output;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all coupling histories for n");
    enumerate->add_option("--n", enumerate_n, "qubit count")->required()->check(CLI::Range(1, 24));
    enumerate->add_option("-o,--output", enumerate_output, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (generate->parsed()) return run_generate(generate_args, decimal);
        if (oracle->parsed()) return run_oracle(oracle_args, oracle_cmd_cap);
        if (verify->parsed()) {
            sweep.with_proportionality = suite == "all" || suite == "proportionality";
            sweep.with_recursion = suite == "all" || suite == "recursion";
            sweep.with_sums = suite == "all" || suite == "sums";
            sweep.with_ratio = suite == "all" || suite == "ratio";
            sweep.with_oracle = suite == "all" || suite == "oracle";
            sweep.with_invariance = suite == "all" || suite == "invariance";
            return run_verify(sweep, verify_output);
        }
        if (enumerate->parsed()) return run_enumerate(enumerate_n, enumerate_output);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
