#include "ghwlrc/report.hpp"

#include <chrono>
#include <sstream>

namespace ghwlrc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

nlohmann::json one_based(const std::vector<std::size_t>& coordinates)
{
    auto out = nlohmann::json::array();
    for (std::size_t c : coordinates) out.push_back(c + 1);
    return out;
}

nlohmann::json optional_int(const std::optional<int>& value)
{
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json witnesses_json(const WeightHierarchy& h)
{
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < h.witnesses.size(); ++i) {
        const auto& w = h.witnesses[i];
        out.push_back({{"i", i + 1}, {"weight", h.values[i]}, {"dimension", w.dimension},
                       {"support", one_based(w.support)}, {"basis", w.basis}});
    }
    return out;
}

std::string join(const std::vector<int>& values)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ')';
    return out.str();
}

} // namespace

bool AnalysisReport::has_violation() const { return bounds.any_violated() || !wei_duality || !gk_forms_agree; }

AnalysisReport analyze(const LinearCode& code, const AnalysisOptions& options)
{
    const auto start = Clock::now();
    AnalysisReport rep;
    const Field& f = code.gf();
    rep.q = f.q();
    rep.p = f.p();
    rep.m = f.m();
    rep.modulus = f.modulus();
    rep.n = code.n();
    rep.k = code.k();

    auto t = Clock::now();
    rep.primal = weight_hierarchy(code, options.witnesses, options.limits);
    rep.dual = dual_weight_hierarchy(code, options.witnesses, options.limits);
    rep.timings.hierarchy_ms = elapsed_ms(t);

    t = Clock::now();
    try {
        rep.locality = locality(code, options.limits);
    } catch (const NoLocality& e) {
        rep.locality_note = e.what();
    }
    rep.timings.locality_ms = elapsed_ms(t);

    t = Clock::now();
    std::optional<int> r;
    if (options.promised_r) {
        const int promised = *options.promised_r;
        if (promised < 1 || promised > code.k()) throw std::invalid_argument("promised locality must satisfy 1 <= r <= k");
        if (!rep.locality || rep.locality->r > promised) {
            throw std::invalid_argument("code does not have locality " + std::to_string(promised));
        }
        r = promised;
    } else if (rep.locality) {
        r = rep.locality->r;
    }
    rep.bounds = evaluate_bounds(rep.q, rep.primal, rep.dual, r);
    rep.wei_duality = check_wei_duality(rep.primal, rep.dual).holds;
    const GkDual forms = gk_dual_forms(rep.dual.values, rep.n, rep.k);
    rep.gk_forms_agree = forms.max_form == forms.min_form && rep.primal.d(1) == rep.n + 1 - forms.max_form;
    rep.timings.bounds_ms = elapsed_ms(t);
    rep.timings.total_ms = elapsed_ms(start);
    return rep;
}

nlohmann::json comparable_json(const AnalysisReport& rep)
{
    using nlohmann::json;
    const BoundReport& b = rep.bounds;

    json params = {{"q", rep.q}, {"p", rep.p}, {"m", rep.m}, {"modulus", rep.modulus}, {"n", rep.n},
                   {"k", rep.k}, {"d", b.d},   {"r", optional_int(b.r)}};

    json loc = nullptr;
    if (rep.locality) {
        json rows = json::array();
        for (const auto& row : rep.locality->covering_rows) {
            rows.push_back({{"support", one_based(row.support)}, {"entries", row.entries}, {"weight", row.weight()}});
        }
        loc = {{"r", rep.locality->r}, {"per_coordinate", rep.locality->per_coordinate}, {"covering_rows", rows}};
    } else {
        loc = {{"r", nullptr}, {"note", rep.locality_note}};
    }

    json bounds = json::object();
    for (const auto& v : b.verdicts) {
        json entry = {{"status", to_string(v.status)}, {"first_violation", optional_int(v.index)}};
        if (!v.detail.empty()) entry["detail"] = v.detail;
        bounds[v.claim] = entry;
    }
    auto attach = [&bounds](const std::string& claim, const std::string& key, json value) {
        if (bounds.contains(claim)) bounds[claim][key] = std::move(value);
    };
    attach("eq1", "bound", optional_int(b.singleton_like));
    {
        json thm1 = json::array(), thm4 = json::array(), lem1 = json::array(), lem5 = json::array(),
             lem4 = json::array(), lem6 = json::array();
        for (const auto& row : b.primal_rows) {
            thm1.push_back(optional_int(row.generalized_singleton_like));
            thm4.push_back(optional_int(row.optimal_primal_lower));
        }
        for (const auto& row : b.dual_rows) {
            lem1.push_back(optional_int(row.dual_upper));
            lem5.push_back(optional_int(row.optimal_dual_lower));
        }
        if (b.r) {
            for (int i = 1; i <= b.k; ++i) {
                lem4.push_back(gap_lower_bound(*b.r, i));
                if (b.is_optimal) lem6.push_back(optimal_gap_upper(b.n, b.k, *b.r, i));
            }
        }
        attach("thm1", "bounds", thm1);
        attach("lem1", "bounds", lem1);
        attach("lem4", "bounds", lem4);
        if (b.r && b.is_optimal && b.k % *b.r != 0) {
            attach("thm4", "bounds", thm4);
            attach("lem5", "bounds", lem5);
            attach("lem6", "bounds", lem6);
        }
    }
    attach("prop1", "value", b.prop1.value);
    attach("prop1", "lrc_value", optional_int(b.prop1.lrc_value));
    attach("prop1", "range_empty", b.prop1.range_empty);
    attach("prop2", "value", b.prop2.value);
    attach("prop2", "lrc_value", optional_int(b.prop2.lrc_value));
    attach("prop2", "range_empty", b.prop2.range_empty);
    attach("prop3_mu", "mu", b.mu);
    attach("prop4_rho", "rho", b.rho);
    attach("prop4_rho", "gk_dual", b.gk_dual);

    json doc = {{"params", params},
                {"locality", loc},
                {"primal_hierarchy", rep.primal.values},
                {"primal_gaps", rep.primal.gaps},
                {"dual_hierarchy", rep.dual.values},
                {"dual_gaps", rep.dual.gaps},
                {"bounds", bounds},
                {"is_optimal", b.is_optimal},
                {"self_checks", {{"wei_duality", rep.wei_duality}, {"gk_dual_forms_agree", rep.gk_forms_agree}}}};
    if (!rep.primal.witnesses.empty() || !rep.dual.witnesses.empty()) {
        doc["witnesses"] = {{"primal", witnesses_json(rep.primal)}, {"dual", witnesses_json(rep.dual)}};
    }
    return doc;
}

nlohmann::json to_json(const AnalysisReport& rep)
{
    nlohmann::json doc = comparable_json(rep);
    doc["timings"] = {{"hierarchy_ms", rep.timings.hierarchy_ms},
                      {"locality_ms", rep.timings.locality_ms},
                      {"bounds_ms", rep.timings.bounds_ms},
                      {"total_ms", rep.timings.total_ms}};
    return doc;
}

std::string to_text(const AnalysisReport& rep)
{
    const BoundReport& b = rep.bounds;
    std::ostringstream out;
    out << "code      [" << rep.n << ", " << rep.k << ", " << b.d << "] over GF(" << rep.q << ")";
    if (rep.m > 1) {
        out << " modulus";
        for (unsigned c : rep.modulus) out << ' ' << c;
    }
    out << '\n';
    if (rep.locality) {
        out << "locality  r = " << rep.locality->r << " (" << rep.locality->covering_rows.size() << " covering rows)\n";
    } else {
        out << "locality  none (" << rep.locality_note << ")\n";
    }
    if (b.r && rep.locality && *b.r != rep.locality->r) out << "          bounds use promised r = " << *b.r << '\n';
    out << "primal    d_i   = " << join(rep.primal.values) << "  gaps " << join(rep.primal.gaps) << '\n';
    out << "dual      d_i^T = " << join(rep.dual.values) << "  gaps " << join(rep.dual.gaps) << '\n';
    out << "g_k^T = " << b.gk_dual << "  mu = " << b.mu << "  rho = " << b.rho << '\n';
    if (b.singleton_like) out << "Singleton-like bound " << *b.singleton_like << ", optimal: " << (b.is_optimal ? "yes" : "no") << '\n';
    out << "prop1 bound " << b.prop1.value;
    if (b.prop1.lrc_value) out << " (locality form " << *b.prop1.lrc_value << ")";
    out << ", prop2 bound " << b.prop2.value;
    if (b.prop2.lrc_value) out << " (locality form " << *b.prop2.lrc_value << ")";
    out << '\n';
    out << "Wei duality " << (rep.wei_duality ? "ok" : "FAILED") << ", g_k^T forms " << (rep.gk_forms_agree ? "agree" : "DISAGREE")
        << '\n';
    out << "claims:\n";
    for (const auto& v : b.verdicts) {
        out << "  " << v.claim << std::string(v.claim.size() < 10 ? 10 - v.claim.size() : 1, ' ') << to_string(v.status);
        if (v.index) out << " at i = " << *v.index;
        if (!v.detail.empty()) out << "  [" << v.detail << "]";
        out << '\n';
    }
    return out.str();
}

} // namespace ghwlrc
