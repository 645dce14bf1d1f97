// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include "ghwlrc/code_file.hpp"
#include "ghwlrc/ghw.hpp"
#include "ghwlrc/suites.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#ifndef GHWLRC_CLI
#error "GHWLRC_CLI must name the command-line binary"
#endif

using namespace ghwlrc;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " -- " << detail << '\n';
    if (!ok) ++failures;
}

std::string join(const std::vector<int>& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

/// All tallies of `claims` pass, and at least `minimum` checks ran in total.
bool all_pass(const std::map<std::string, SuiteResult>& suites, const std::vector<std::string>& claims,
              int minimum, std::string& detail)
{
    int checked = 0, passed = 0;
    for (const auto& [name, result] : suites) {
        for (const auto& claim : claims) {
            auto it = result.tallies.find(claim);
            if (it == result.tallies.end()) continue;
            checked += it->second.checked;
            passed += it->second.passed;
        }
    }
    detail = std::to_string(passed) + "/" + std::to_string(checked) + " checks";
    return checked >= minimum && passed == checked;
}

std::string first_failure(const SuiteResult& r)
{
    return r.failures.empty() ? std::string() : "; first failure: " + r.failures.front();
}

std::string capture(const std::string& command, int& status)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    status = pclose(pipe);
    return out;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

int main()
{
    using Clock = std::chrono::steady_clock;
    const SuiteOptions options; // seed 1, 200 codes
    std::map<std::string, SuiteResult> suites;
    std::map<std::string, double> seconds;
    for (const auto& name : suite_names()) {
        const auto t = Clock::now();
        suites.emplace(name, run_suite(name, options));
        seconds[name] = std::chrono::duration<double>(Clock::now() - t).count();
    }
    auto timing = [&](const std::string& name) {
        std::ostringstream s;
        s.precision(3);
        s << ", " << seconds[name] << " s";
        return s.str();
    };

    // 1
    {
        const auto t = Clock::now();
        std::string why;
        const auto fx = certified_tamo_barg(13, 12, 6, 3, &why);
        bool ok = false;
        std::string detail = "fixture unavailable: " + why;
        if (fx) {
            const auto primal = weight_hierarchy(fx->code).values;
            const auto dual = dual_weight_hierarchy(fx->code).values;
            const double s = std::chrono::duration<double>(Clock::now() - t).count();
            ok = primal == std::vector<int>{6, 7, 8, 10, 11, 12} && dual == std::vector<int>{4, 8, 9, 10, 11, 12} &&
                 s < 5.0;
            detail = "primal " + join(primal) + ", dual " + join(dual) + ", " + std::to_string(s) + " s";
        }
        report(1, "hierarchies of a certified (12,6,3) LRC over GF(13)", ok, detail);
    }

    // 2
    {
        const auto& r = suites.at("duality");
        const auto& t = r.tallies.count("wei_duality") ? r.tallies.at("wei_duality") : ClaimTally{};
        const bool ok = r.passed() && t.checked >= 200 && t.passed == t.checked && seconds["duality"] < 120;
        report(2, "Wei duality on seeded random codes", ok,
               std::to_string(t.passed) + "/" + std::to_string(t.checked) + " codes" + timing("duality") +
                   first_failure(r));
    }

    // 3
    {
        const auto& r = suites.at("oracle");
        const auto& t = r.tallies.count("ghw_equals_oracle") ? r.tallies.at("ghw_equals_oracle") : ClaimTally{};
        const bool ok = r.passed() && t.checked >= 200 && t.passed == t.checked && seconds["oracle"] < 300;
        report(3, "subset-rank ghw equals subcode-enumeration oracle", ok,
               std::to_string(t.passed) + "/" + std::to_string(t.checked) + " codes" + timing("oracle") +
                   first_failure(r));
    }

    // 4
    {
        const auto& r = suites.at("lemmas");
        bool ok = r.passed();
        std::ostringstream detail;
        for (const char* claim : {"lem1", "lem2", "lem3", "lem4", "thm1", "thm1_at_i1_is_eq1", "thm1_at_r_eq_k_is_eq2"}) {
            const auto it = r.tallies.find(claim);
            const ClaimTally t = it == r.tallies.end() ? ClaimTally{} : it->second;
            ok = ok && t.checked > 0 && t.passed == t.checked;
            detail << claim << ' ' << t.passed << '/' << t.checked << ' ';
        }
        report(4, "unconditional LRC bounds and formula reductions", ok, detail.str() + first_failure(r));
    }

    // 5
    {
        const auto& r = suites.at("optimal-rk");
        const auto& t2 = r.tallies.count("thm2") ? r.tallies.at("thm2") : ClaimTally{};
        const auto& t1 = r.tallies.count("thm1_with_equality") ? r.tallies.at("thm1_with_equality") : ClaimTally{};
        const bool ok = r.passed() && t2.checked >= 2 && t1.checked == t2.checked;
        std::string detail = std::to_string(t2.checked) + " certified fixtures, thm2/thm3/thm1-equality all exact";
        for (const auto& note : r.notes) detail += "; " + note;
        report(5, "exact hierarchies of optimal LRCs with r | k", ok, detail + first_failure(r));
    }

    // 6
    {
        const auto& r = suites.at("optimal-rnk");
        const bool exact = r.tallies.count("lem5_second_branch_12_5_3") &&
                           r.tallies.at("lem5_second_branch_12_5_3").passed == 1 &&
                           r.tallies.count("d_is_7_12_5_3") && r.tallies.at("d_is_7_12_5_3").passed == 1;
        const bool ok = r.passed() && exact;
        report(6, "lem5 (exact second branch), lem6, thm4 on a certified (12,5,3) LRC over GF(13)", ok,
               std::string(exact ? "d = 7, d_i^perp = 5+i for i >= 2" : "fixture unavailable or inexact") +
                   first_failure(r));
    }

    // 7
    {
        std::string detail;
        const bool ok = all_pass(suites, {"mu_eq_rho_plus_1", "d_eq_n_k_mu_2", "d_eq_n_k_rho_1"}, 3 * 200, detail);
        report(7, "mu/rho identities over every suite", ok, detail);
    }

    // 8
    {
        std::string detail;
        bool ok = all_pass(suites, {"prop1_sound", "prop2_sound"}, 2 * 200, detail);
        const auto& p = suites.at("props");
        const bool tight = p.tallies.count("prop1_tight_12_6_3") && p.tallies.at("prop1_tight_12_6_3").passed == 1 &&
                           p.tallies.count("prop2_tight_12_6_3") && p.tallies.at("prop2_tight_12_6_3").passed == 1;
        ok = ok && tight;
        report(8, "prop1/prop2 soundness, tight on (12,6,3)", ok,
               detail + (tight ? ", both bounds equal 6 on (12,6,3)" : ", not tight on (12,6,3)"));
    }

    // 9
    {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("ghwlrc_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const std::string cli = GHWLRC_CLI;
        bool ok = true;
        std::string detail;

        const fs::path fixture = dir / "tb.txt";
        int status = 0;
        capture("\"" + cli + "\" construct tamo-barg --q 13 --n 12 --k 6 --r 3 -o \"" + fixture.string() + "\"", status);
        ok = ok && status == 0;
        int s1 = 0, s2 = 0;
        const std::string cmd = "\"" + cli + "\" analyze \"" + fixture.string() + "\" --json --witnesses";
        const std::string out1 = capture(cmd, s1);
        const std::string out2 = capture(cmd, s2);
        try {
            auto j1 = nlohmann::json::parse(out1), j2 = nlohmann::json::parse(out2);
            j1.erase("timings");
            j2.erase("timings");
            const bool same = s1 == 0 && s2 == 0 && j1.dump() == j2.dump();
            ok = ok && same;
            detail += same ? "analyze --json comparable sections byte-identical" : "analyze --json outputs differ";
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string("analyze output is not JSON: ") + e.what();
        }

        const fs::path r1 = dir / "r1.txt", r2 = dir / "r2.txt";
        int c1 = 0, c2 = 0;
        capture("\"" + cli + "\" construct random --q 2 --n 8 --k 4 --seed 1 -o \"" + r1.string() + "\"", c1);
        capture("\"" + cli + "\" construct random --q 2 --n 8 --k 4 --seed 1 -o \"" + r2.string() + "\"", c2);
        const std::string a = slurp(r1), b = slurp(r2);
        const bool reproducible = c1 == 0 && c2 == 0 && !a.empty() && a == b &&
                                  a == serialize_code_file(random_code(2, 8, 4, 1).code);
        ok = ok && reproducible;
        detail += reproducible ? "; random construct identical across processes" : "; random construct differs";
        fs::remove_all(dir);
        report(9, "determinism", ok, detail);
    }

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
