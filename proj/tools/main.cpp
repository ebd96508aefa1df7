// Command-line interface: decompose, verify-theorem, search, oracle-check,
// enumerate. Exit codes: 0 success, 1 usage or input error, 2 invariant
// violation (a defect), 3 search found a gap witness.

#include <CLI11.hpp>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/decomposition.hpp"
#include "wreathchar/errors.hpp"
#include "wreathchar/report_io.hpp"
#include "wreathchar/search.hpp"
#include "wreathchar/tuple.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace wreathchar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitGapWitness = 3;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << content;
}

Tuple parse_tuple_arg(const std::string& text, int p, const std::string& name) {
    Tuple t = Tuple::parse(text);
    if (t.p() != p) {
        throw std::invalid_argument(name + " has length " + std::to_string(t.p()) +
                                    ", expected p = " + std::to_string(p));
    }
    return t;
}

ShardSpec parse_shard(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("shard must be INDEX/TOTAL, got \"" + text + "\"");
    }
    try {
        ShardSpec shard{std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1))};
        return shard;
    } catch (const std::exception&) {
        throw std::invalid_argument("shard must be INDEX/TOTAL, got \"" + text + "\"");
    }
}

int env_worker_override() {
    const char* env = std::getenv("WREATHCHAR_THREADS");
    if (env == nullptr) return 0;
    const int value = std::atoi(env);
    return value > 0 ? value : 0;
}

struct DecomposeArgs {
    int p = 0;
    std::string phi, psi;
    std::string format = "text";
    std::string out;
};

int run_decompose(const DecomposeArgs& args) {
    const Prime prime(args.p);
    Tuple phi = parse_tuple_arg(args.phi, args.p, "--phi");
    Tuple psi = parse_tuple_arg(args.psi, args.p, "--psi");
    if (!is_irreducible_inducing(phi)) {
        throw std::invalid_argument("--phi is constant and does not induce irreducibly");
    }
    if (!is_irreducible_inducing(psi)) {
        throw std::invalid_argument("--psi is constant and does not induce irreducibly");
    }
    OrbitRep phi_rep(phi), psi_rep(psi);
    Decomposition d = decompose(phi_rep, psi_rep);

    if (args.format == "json") {
        nlohmann::json j = to_json(d);
        j["report_type"] = "decomposition";
        j["phi"] = phi.str();
        j["psi"] = psi.str();
        j["phi_class"] = phi_rep.tuple().str();
        j["psi_class"] = psi_rep.tuple().str();
        write_output(j.dump(2), args.out);
    } else {
        std::string text = "phi: " + phi.str() + "  (class " + phi_rep.tuple().str() + ")\n" +
                           "psi: " + psi.str() + "  (class " + psi_rep.tuple().str() + ")\n" +
                           to_text(d);
        write_output(text, args.out);
    }
    return kExitOk;
}

struct VerifyArgs {
    int p = 0;
    std::string format = "text";
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    TheoremReport report = verify_theorem(Prime(args.p));
    if (args.format == "json") {
        nlohmann::json j = to_json(report);
        j["report_type"] = "verify-theorem";
        write_output(j.dump(2), args.out);
    } else {
        write_output(to_text(report), args.out);
    }
    return kExitOk;
}

struct SearchArgs {
    int p = 0;
    std::string mode = "exhaustive";
    long long n_pairs = 0;
    std::optional<std::uint64_t> seed;
    std::string shard = "0/1";
    int threads = 0;
    bool no_shift = false, no_scale = false, no_swap = false;
    std::string format = "text";
    std::string out, csv, checkpoint_dir, merge_dir;
};

std::string shard_filename(const ShardSpec& shard) {
    char name[64];
    std::snprintf(name, sizeof(name), "shard-%04d-of-%04d.json", shard.index, shard.total);
    return name;
}

int emit_search_report(const SearchReport& report, const SearchArgs& args) {
    if (args.format == "json") {
        nlohmann::json j = to_json(report);
        j["report_type"] = "search";
        write_output(j.dump(2), args.out);
    } else {
        write_output(to_text(report), args.out);
    }
    if (!args.csv.empty()) {
        std::ofstream out(args.csv);
        if (!out) throw std::invalid_argument("cannot open CSV file: " + args.csv);
        out << histogram_csv(report);
    }
    return report.gap_counts.empty() ? kExitOk : kExitGapWitness;
}

int run_search_cmd(const SearchArgs& args) {
    if (!args.merge_dir.empty()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(args.merge_dir)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        }
        if (files.empty()) {
            throw std::invalid_argument("no .json checkpoints in " + args.merge_dir);
        }
        std::sort(files.begin(), files.end());
        std::vector<SearchReport> parts;
        for (const std::string& file : files) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot read checkpoint: " + file);
            nlohmann::json j;
            in >> j;
            parts.push_back(search_report_from_json(j));
        }
        SearchReport merged = merge_reports(parts);
        std::cerr << "merged " << parts.size() << " checkpoint(s)\n";
        return emit_search_report(merged, args);
    }

    SearchConfig cfg{Prime(args.p)};
    if (args.mode == "exhaustive") {
        cfg.mode = SearchMode::Exhaustive;
    } else if (args.mode == "sample") {
        cfg.mode = SearchMode::Sample;
        if (!args.seed.has_value()) {
            throw std::invalid_argument("sample mode requires --seed");
        }
        if (args.n_pairs < 1) {
            throw std::invalid_argument("sample mode requires --n >= 1");
        }
    } else {
        throw std::invalid_argument("mode must be exhaustive or sample");
    }
    cfg.n_pairs = args.n_pairs;
    cfg.seed = args.seed.value_or(0);
    cfg.shard = parse_shard(args.shard);
    cfg.symmetry = SymmetryFlags{!args.no_shift, !args.no_scale, !args.no_swap};
    cfg.worker_count = args.threads > 0 ? args.threads : env_worker_override();

    SearchReport report = run_search(cfg);

    if (!args.checkpoint_dir.empty()) {
        std::filesystem::create_directories(args.checkpoint_dir);
        const std::filesystem::path path =
            std::filesystem::path(args.checkpoint_dir) / shard_filename(cfg.shard);
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write checkpoint: " + path.string());
        nlohmann::json j = to_json(report);
        j["report_type"] = "search";
        out << j.dump(2);
        std::cerr << "checkpoint written: " << path.string() << "\n";
    }
    return emit_search_report(report, args);
}

struct OracleCheckArgs {
    int p = 0;
    int trials = 100;
    std::uint64_t seed = 0;
};

int run_oracle_check(const OracleCheckArgs& args) {
    const int p = args.p;
    if (p > kOracleCap) {
        throw std::invalid_argument("oracle-check refuses p = " + std::to_string(p) +
                                    " (cap " + std::to_string(kOracleCap) +
                                    "; cost grows as p^p)");
    }
    const Prime prime(p);
    std::vector<int> entries(static_cast<size_t>(p));
    for (int trial = 0; trial < args.trials; ++trial) {
        detail::SplitMix64 rng =
            detail::pair_stream_rng(args.seed, static_cast<std::uint64_t>(trial));
        detail::sample_nonconstant_entries(rng, p, entries.data());
        OrbitRep phi{Tuple(prime, entries)};
        detail::sample_nonconstant_entries(rng, p, entries.data());
        OrbitRep psi{Tuple(prime, entries)};

        Decomposition tuple_route = decompose(phi, psi);
        Decomposition oracle_route = oracle_decompose(phi, psi);
        if (!(tuple_route == oracle_route)) {
            std::cout << "DISAGREEMENT at trial " << trial << "\n"
                      << "phi: " << phi.tuple().str() << "\npsi: " << psi.tuple().str() << "\n"
                      << "tuple calculus:\n" << to_text(tuple_route)
                      << "oracle:\n" << to_text(oracle_route);
            throw invariant_error("tuple calculus and cyclotomic oracle disagree");
        }
    }
    std::cout << "oracle-check: " << args.trials << " seeded pairs at p = " << p
              << " decompose identically via both routes\n";
    return kExitOk;
}

struct EnumerateArgs {
    int p = 0;
    std::string out;
};

int run_enumerate(const EnumerateArgs& args) {
    const auto reps = enumerate_faithful_reps(Prime(args.p));
    std::string lines;
    lines.reserve(reps.size() * static_cast<size_t>(2 * args.p));
    for (const OrbitRep& rep : reps) {
        lines += rep.tuple().str();
        lines += '\n';
    }
    write_output(lines, args.out);
    std::cerr << reps.size() << " faithful classes at p = " << args.p << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible character products on the wreath product C_p wr C_p"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto* dec_cmd = app.add_subcommand(
        "decompose", "decompose the product of two induced irreducible characters");
    dec_cmd->add_option("--p", dec.p, "prime modulus")->required();
    dec_cmd->add_option("--phi", dec.phi, "first tuple, comma-separated residues")->required();
    dec_cmd->add_option("--psi", dec.psi, "second tuple")->required();
    dec_cmd->add_option("--format", dec.format)->check(CLI::IsMember({"text", "json"}));
    dec_cmd->add_option("--out", dec.out, "output path (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand(
        "verify-theorem", "check the p-1 distinct-constituent count for the canonical pair");
    verify_cmd->add_option("--p", verify.p, "prime >= 5")->required();
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", verify.out);

    SearchArgs search;
    auto* search_cmd = app.add_subcommand(
        "search", "histogram distinct-constituent counts over faithful pairs");
    search_cmd->add_option("--p", search.p, "prime modulus");
    search_cmd->add_option("--mode", search.mode, "exhaustive | sample");
    search_cmd->add_option("--n", search.n_pairs, "sample size");
    search_cmd->add_option("--seed", search.seed, "sample seed");
    search_cmd->add_option("--shard", search.shard, "INDEX/TOTAL partition of the stream");
    search_cmd->add_option("--threads", search.threads,
                           "worker count (default: WREATHCHAR_THREADS or all cores)");
    search_cmd->add_flag("--no-shift", search.no_shift, "work on raw faithful tuples");
    search_cmd->add_flag("--no-scale", search.no_scale, "disable scale reduction");
    search_cmd->add_flag("--no-swap", search.no_swap, "enumerate ordered pairs");
    search_cmd->add_option("--format", search.format)->check(CLI::IsMember({"text", "json"}));
    search_cmd->add_option("--out", search.out, "report path (default stdout)");
    search_cmd->add_option("--csv", search.csv, "also write the histogram as CSV");
    search_cmd->add_option("--checkpoint-dir", search.checkpoint_dir,
                           "write this shard's report into the directory");
    search_cmd->add_option("--merge-checkpoints", search.merge_dir,
                           "merge all checkpoints in the directory instead of searching");

    OracleCheckArgs oracle;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "compare the tuple calculus against the cyclotomic referee");
    oracle_cmd->add_option("--p", oracle.p, "prime (at most the oracle cap)")->required();
    oracle_cmd->add_option("--trials", oracle.trials, "number of seeded pairs");
    oracle_cmd->add_option("--seed", oracle.seed, "rng seed");

    EnumerateArgs enumerate;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list all faithful rotation-class representatives");
    enumerate_cmd->add_option("--p", enumerate.p, "prime modulus")->required();
    enumerate_cmd->add_option("--out", enumerate.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dec_cmd->parsed()) return run_decompose(dec);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (search_cmd->parsed()) {
            if (search.merge_dir.empty() && search.p == 0) {
                throw std::invalid_argument("search requires --p");
            }
            return run_search_cmd(search);
        }
        if (oracle_cmd->parsed()) return run_oracle_check(oracle);
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate);
        throw std::invalid_argument("no subcommand given");
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation (defect): " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::overflow_error& e) {
        std::cerr << "invariant violation (overflow): " << e.what() << "\n";
        return kExitInvariant;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
