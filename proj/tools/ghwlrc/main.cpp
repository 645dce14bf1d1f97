#include "ghwlrc/code_file.hpp"
#include "ghwlrc/constructions.hpp"
#include "ghwlrc/report.hpp"
#include "ghwlrc/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct AnalyzeArgs {
    std::string path;
    bool json = false;
    bool witnesses = false;
    std::size_t limit_n = ghwlrc::EnumerationLimits{}.max_n;
    std::uint64_t limit_oracle = ghwlrc::EnumerationLimits{}.max_oracle_codewords;
    std::optional<int> promised_r;
};

struct ConstructArgs {
    std::string kind;
    unsigned q = 0;
    int n = 0;
    int k = 0;
    int r = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 1;
    int count = 200;
};

int run_analyze(const AnalyzeArgs& args)
{
    ghwlrc::AnalysisOptions options;
    options.witnesses = args.witnesses;
    options.promised_r = args.promised_r;
    options.limits.max_n = args.limit_n;
    options.limits.max_oracle_codewords = args.limit_oracle;

    const ghwlrc::LinearCode code = ghwlrc::read_code_file(args.path);
    const ghwlrc::AnalysisReport report = ghwlrc::analyze(code, options);
    if (args.json) {
        std::cout << ghwlrc::to_json(report).dump(2) << '\n';
    } else {
        std::cout << ghwlrc::to_text(report);
    }
    return report.has_violation() ? kViolation : kOk;
}

int run_construct(const ConstructArgs& args)
{
    std::optional<ghwlrc::Construction> c;
    if (args.kind == "tamo-barg") {
        c = ghwlrc::tamo_barg(args.q, args.n, args.k, args.r);
    } else if (args.kind == "reed-solomon") {
        c = ghwlrc::reed_solomon(args.q, args.n, args.k);
    } else {
        c = ghwlrc::random_code(args.q, args.n, args.k, args.seed);
    }
    ghwlrc::write_code_file(args.out, c->code);
    return kOk;
}

int run_verify(const VerifyArgs& args)
{
    ghwlrc::SuiteOptions options;
    options.seed = args.seed;
    options.count = args.count;

    std::vector<std::string> names;
    if (args.suite == "all") {
        names = ghwlrc::suite_names();
    } else {
        names.push_back(args.suite);
    }

    bool all_passed = true;
    for (const auto& name : names) {
        const ghwlrc::SuiteResult result = ghwlrc::run_suite(name, options);
        std::cout << "suite " << result.name << ": " << (result.passed() ? "pass" : "FAIL") << '\n';
        for (const auto& [claim, t] : result.tallies) {
            std::cout << "  " << claim << " " << t.passed << "/" << t.checked << '\n';
        }
        for (const auto& note : result.notes) std::cout << "  note: " << note << '\n';
        for (const auto& failure : result.failures) std::cout << "  " << failure << '\n';
        all_passed = all_passed && result.passed();
    }
    return all_passed ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Hamming weights and locality of linear codes"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Hierarchies, locality and bound verdicts for a code file");
    analyze->add_option("file", analyze_args.path, "code file")->required();
    analyze->add_flag("--json", analyze_args.json, "JSON report");
    analyze->add_flag("--witnesses", analyze_args.witnesses, "include subcode witnesses");
    analyze->add_option("--limit-n", analyze_args.limit_n, "largest n for subset sweeps")->check(CLI::PositiveNumber);
    analyze->add_option("--limit-oracle", analyze_args.limit_oracle, "largest q^k for the subcode oracle")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--promised-r", analyze_args.promised_r, "evaluate bounds with this locality");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Write a code file for a standard construction");
    construct->add_option("kind", construct_args.kind, "tamo-barg | reed-solomon | random")
        ->required()
        ->check(CLI::IsMember({"tamo-barg", "reed-solomon", "random"}));
    construct->add_option("--q", construct_args.q, "field order")->required();
    construct->add_option("--n", construct_args.n, "length")->required();
    construct->add_option("--k", construct_args.k, "dimension")->required();
    construct->add_option("--r", construct_args.r, "locality (tamo-barg)");
    construct->add_option("--seed", construct_args.seed, "seed (random)");
    construct->add_option("-o,--output", construct_args.out, "output file")->required();

    VerifyArgs verify_args;
    std::vector<std::string> choices = ghwlrc::suite_names();
    choices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run the claim verification suites");
    verify->add_option("suite", verify_args.suite, "suite name or 'all'")->check(CLI::IsMember(choices));
    verify->add_option("--seed", verify_args.seed, "suite seed");
    verify->add_option("--count", verify_args.count, "random codes per suite")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*construct) {
            if (construct_args.kind == "tamo-barg" && construct->count("--r") == 0) {
                std::cerr << "error: tamo-barg needs --r\n";
                return kUsage;
            }
            return run_construct(construct_args);
        }
        return run_verify(verify_args);
    } catch (const ghwlrc::ParseError& e) {
        std::cerr << analyze_args.path << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
