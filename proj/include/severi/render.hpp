#pragma once

// Input parsing and output rendering for the CLI: JSON check requests,
// text/structured/CSV report rendering.  Structured output round-trips:
// report_from_json(report_to_json(r)) == r field-for-field.

#include <severi/criterion.hpp>
#include <severi/examples.hpp>
#include <severi/families.hpp>
#include <severi/lattice.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace severi {

using Json = nlohmann::json;

struct input_error : error {
    using error::error;
};

struct CheckRequest {
    SurfaceModel surface;
    DivisorClass class_coeffs;
    std::optional<BigInt> delta;
    bool validate_signature = true;
};

namespace detail {

inline BigInt bigint_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return BigInt(std::to_string(j.get<std::uint64_t>()));
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw input_error("'" + where + "' is not a valid integer literal");
        }
    }
    throw input_error("'" + where + "' must be an integer (number or decimal string)");
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer() || !j.is_string())
        return Rational(bigint_from_json(j, where));
    try {
        Rational r(j.get<std::string>());
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("'" + where + "' is not a valid rational literal");
    }
}

inline std::vector<BigInt> int_vector_from_json(const Json& j, const std::string& where,
                                                std::size_t want) {
    if (!j.is_array())
        throw input_error("'" + where + "' must be an array of integers");
    if (j.size() != want)
        throw input_error("'" + where + "' has " + std::to_string(j.size()) +
                          " entries, expected " + std::to_string(want));
    std::vector<BigInt> out;
    out.reserve(want);
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(bigint_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace detail

// Input schema: object with name (string), basis (non-empty array of strings),
// gram (rank x rank integer matrix), canonical and class (integer arrays of
// length rank), optional delta (non-negative integer), optional
// validate_signature (boolean, default true).  Throws input_error naming the
// first violated field.
inline CheckRequest parse_check_request(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(std::string("input is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("input root must be an object");
    if (!j.contains("name")) throw input_error("missing field 'name'");
    if (!j["name"].is_string()) throw input_error("'name' must be a string");
    if (!j.contains("basis")) throw input_error("missing field 'basis'");
    const Json& basis = j["basis"];
    if (!basis.is_array() || basis.empty())
        throw input_error("'basis' must be a non-empty array of strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i].is_string())
            throw input_error("'basis[" + std::to_string(i) + "]' must be a string");
        names.push_back(basis[i].get<std::string>());
    }
    const std::size_t rank = names.size();
    if (!j.contains("gram")) throw input_error("missing field 'gram'");
    const Json& gram = j["gram"];
    if (!gram.is_array() || gram.size() != rank)
        throw input_error("'gram' must be a " + std::to_string(rank) + "x" +
                          std::to_string(rank) + " integer matrix");
    GramMatrix g;
    for (std::size_t i = 0; i < rank; ++i)
        g.push_back(detail::int_vector_from_json(gram[i], "gram[" + std::to_string(i) + "]",
                                                 rank));
    if (!j.contains("canonical")) throw input_error("missing field 'canonical'");
    DivisorClass canonical(detail::int_vector_from_json(j["canonical"], "canonical", rank));
    if (!j.contains("class")) throw input_error("missing field 'class'");
    DivisorClass cls(detail::int_vector_from_json(j["class"], "class", rank));
    std::optional<BigInt> delta;
    if (j.contains("delta") && !j["delta"].is_null()) {
        BigInt d = detail::bigint_from_json(j["delta"], "delta");
        if (d < 0) throw input_error("'delta' must be a non-negative integer");
        delta = std::move(d);
    }
    bool validate_signature = true;
    if (j.contains("validate_signature")) {
        if (!j["validate_signature"].is_boolean())
            throw input_error("'validate_signature' must be a boolean");
        validate_signature = j["validate_signature"].get<bool>();
    }
    return CheckRequest{
        SurfaceModel(j["name"].get<std::string>(), IntersectionLattice(names, g),
                     std::move(canonical)),
        std::move(cls), std::move(delta), validate_signature};
}

// ---- JSON rendering -------------------------------------------------------

inline Json to_json(const BigInt& v) { return to_string(v); }
inline Json to_json(const Rational& v) { return to_string(v); }

inline Json to_json(const SurdExpr& e) {
    return Json{{"p", to_string(e.p)},
                {"q", to_string(e.q)},
                {"n", to_string(e.n)},
                {"r", to_string(e.r)},
                {"display", to_string(e)}};
}

inline SurdExpr surd_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw input_error("'" + where + "' must be an object");
    for (const char* f : {"p", "q", "n", "r"})
        if (!j.contains(f))
            throw input_error("'" + where + "' is missing field '" + f + "'");
    return SurdExpr(detail::bigint_from_json(j["p"], where + ".p"),
                    detail::bigint_from_json(j["q"], where + ".q"),
                    detail::bigint_from_json(j["n"], where + ".n"),
                    detail::bigint_from_json(j["r"], where + ".r"));
}

inline Json to_json(const NumericalInvariants& inv) {
    return Json{{"c2", to_string(inv.c2)},     {"ck", to_string(inv.ck)},
                {"k2", to_string(inv.k2)},     {"t", to_string(inv.t)},
                {"cm2k_sq", to_string(inv.cm2k_sq)}, {"hodge", to_string(inv.hodge)},
                {"pa", to_string(inv.pa)}};
}

inline NumericalInvariants invariants_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("'invariants' must be an object");
    NumericalInvariants inv;
    inv.c2 = detail::bigint_from_json(j.at("c2"), "invariants.c2");
    inv.ck = detail::bigint_from_json(j.at("ck"), "invariants.ck");
    inv.k2 = detail::bigint_from_json(j.at("k2"), "invariants.k2");
    inv.t = detail::bigint_from_json(j.at("t"), "invariants.t");
    inv.cm2k_sq = detail::bigint_from_json(j.at("cm2k_sq"), "invariants.cm2k_sq");
    inv.hodge = detail::bigint_from_json(j.at("hodge"), "invariants.hodge");
    inv.pa = detail::rational_from_json(j.at("pa"), "invariants.pa");
    return inv;
}

inline HypothesisId hypothesis_id_from_string(const std::string& s) {
    static const std::map<std::string, HypothesisId> ids = {
        {"H1a", HypothesisId::H1a}, {"H1b", HypothesisId::H1b},
        {"H2", HypothesisId::H2},   {"H3", HypothesisId::H3},
        {"H4", HypothesisId::H4}};
    auto it = ids.find(s);
    if (it == ids.end()) throw input_error("unknown hypothesis id '" + s + "'");
    return it->second;
}

inline Json to_json(const HypothesisCheck& c) {
    return Json{{"id", to_string(c.id)},
                {"description", c.description},
                {"lhs", to_string(c.lhs)},
                {"rhs", to_string(c.rhs)},
                {"satisfied", c.satisfied}};
}

inline Json to_json(const RegularityReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(to_json(c));
    Json j{{"invariants", to_json(rep.invariants)},
           {"checks", std::move(checks)},
           {"case", to_string(rep.case_label)},
           {"alpha", to_json(rep.alpha)},
           {"beta", to_json(rep.beta)},
           {"notes", rep.notes}};
    j["delta_max"] = rep.delta_max ? Json(to_string(*rep.delta_max)) : Json(nullptr);
    return j;
}

inline RegularityReport report_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("report must be an object");
    RegularityReport rep;
    rep.invariants = invariants_from_json(j.at("invariants"));
    const Json& checks = j.at("checks");
    if (!checks.is_array()) throw input_error("'checks' must be an array");
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const Json& c = checks[i];
        const std::string where = "checks[" + std::to_string(i) + "]";
        if (!c.is_object()) throw input_error("'" + where + "' must be an object");
        HypothesisCheck check;
        check.id = hypothesis_id_from_string(c.at("id").get<std::string>());
        check.description = c.at("description").get<std::string>();
        check.lhs = detail::bigint_from_json(c.at("lhs"), where + ".lhs");
        check.rhs = detail::bigint_from_json(c.at("rhs"), where + ".rhs");
        check.satisfied = c.at("satisfied").get<bool>();
        rep.checks.push_back(std::move(check));
    }
    const std::string case_label = j.at("case").get<std::string>();
    if (case_label == "I")
        rep.case_label = CaseLabel::case_i;
    else if (case_label == "II")
        rep.case_label = CaseLabel::case_ii;
    else if (case_label == "none")
        rep.case_label = CaseLabel::none;
    else
        throw input_error("unknown case label '" + case_label + "'");
    if (!j.at("delta_max").is_null())
        rep.delta_max = detail::bigint_from_json(j.at("delta_max"), "delta_max");
    rep.alpha = surd_from_json(j.at("alpha"), "alpha");
    rep.beta = surd_from_json(j.at("beta"), "beta");
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

inline Json to_json(const DeltaProbe& probe) {
    Json j{{"delta", to_string(probe.delta)},
           {"f_value", to_string(probe.f_value)},
           {"bogomolov", to_string(probe.bogomolov)},
           {"geometric_genus", to_string(probe.geometric_genus_value)},
           {"genus_negative", probe.genus_negative}};
    if (probe.within_delta_max) j["within_delta_max"] = *probe.within_delta_max;
    return j;
}

inline Json to_json(const SurfaceModel& surface) {
    Json gram = Json::array();
    for (const auto& row : surface.lattice.gram) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        gram.push_back(std::move(r));
    }
    Json canonical = Json::array();
    for (const auto& v : surface.canonical.coeffs) canonical.push_back(to_string(v));
    return Json{{"name", surface.name},
                {"basis", surface.lattice.basis_names},
                {"gram", std::move(gram)},
                {"canonical", std::move(canonical)}};
}

inline Json to_json(const DivisorClass& c) {
    Json out = Json::array();
    for (const auto& v : c.coeffs) out.push_back(to_string(v));
    return out;
}

inline Json to_json(const FamilyPoint& fp) {
    return Json{{"d", fp.d},
                {"a", fp.a},
                {"degree", to_string(fp.degree)},
                {"pa_adjunction", to_string(fp.pa_adjunction)},
                {"pa_closed_form", to_string(fp.pa_closed_form)},
                {"proposition_delta", to_string(fp.proposition_delta)},
                {"report", to_json(fp.report)},
                {"notes", fp.notes}};
}

// ---- text rendering -------------------------------------------------------

// "3H + L", "-H + 4E", "2H", "0"
inline std::string class_to_string(const std::vector<std::string>& names,
                                   const DivisorClass& c) {
    std::string out;
    for (std::size_t i = 0; i < c.coeffs.size() && i < names.size(); ++i) {
        const BigInt& v = c.coeffs[i];
        if (v == 0) continue;
        if (out.empty())
            out += (v < 0) ? "-" : "";
        else
            out += (v < 0) ? " - " : " + ";
        const BigInt mag = abs(v);
        if (mag != 1) out += to_string(mag);
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

inline std::string render_report_text(const SurfaceModel& surface, const DivisorClass& c,
                                      const RegularityReport& rep,
                                      const std::optional<DeltaProbe>& probe = {}) {
    std::ostringstream os;
    const auto& names = surface.lattice.basis_names;
    os << "surface: " << surface.name << "\n";
    os << "basis:   ";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << "   (rank " << names.size() << ")\n";
    os << "class:     C = " << class_to_string(names, c) << "\n";
    os << "canonical: K = " << class_to_string(names, surface.canonical) << "\n";
    const NumericalInvariants& inv = rep.invariants;
    os << "\ninvariants\n";
    os << "  C^2 = " << to_string(inv.c2) << "   C.K = " << to_string(inv.ck)
       << "   K^2 = " << to_string(inv.k2) << "\n";
    os << "  C(C-2K) = " << to_string(inv.t) << "   (C-2K)^2 = " << to_string(inv.cm2k_sq)
       << "   H(C,K) = " << to_string(inv.hodge) << "\n";
    os << "  p_a(C) = " << to_string(inv.pa) << "\n";
    os << "\nhypotheses\n";
    for (const auto& check : rep.checks) {
        os << "  [" << (check.satisfied ? "pass" : "FAIL") << "] " << to_string(check.id)
           << "  " << check.description << "   (" << to_string(check.lhs) << " vs "
           << to_string(check.rhs) << ")\n";
    }
    os << "  result: " << (rep.all_satisfied() ? "pass" : "fail") << " (case "
       << to_string(rep.case_label) << ")\n";
    os << "\nbounds\n";
    os << "  alpha = " << to_string(rep.alpha) << "\n";
    os << "  beta  = " << to_string(rep.beta) << "\n";
    if (rep.delta_max)
        os << "  delta_max = " << to_string(*rep.delta_max) << "\n";
    else
        os << "  delta_max = (absent: hypotheses fail)\n";
    if (probe) {
        os << "\ndelta probe (delta = " << to_string(probe->delta) << ")\n";
        os << "  f(delta) = " << to_string(probe->f_value) << "\n";
        os << "  (C-K)^2 - 4*delta = " << to_string(probe->bogomolov) << "\n";
        os << "  geometric genus = " << to_string(probe->geometric_genus_value)
           << (probe->genus_negative ? "  (negative: delta exceeds p_a)" : "") << "\n";
        if (probe->within_delta_max)
            os << "  delta <= delta_max: " << (*probe->within_delta_max ? "yes" : "no")
               << "\n";
    }
    if (!rep.notes.empty()) {
        os << "\nnotes\n";
        for (const auto& n : rep.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

inline std::string render_family_text(const FamilyPoint& fp,
                                      const std::optional<DeltaProbe>& probe = {}) {
    std::ostringstream os;
    const SurfaceModel surface = build_surface(fp.d);
    const DivisorClass c({BigInt(fp.a), BigInt(-1)});
    os << "family point: d = " << fp.d << ", a = " << fp.a << "\n";
    os << "  deg(C) = " << to_string(fp.degree) << "\n";
    os << "  p_a by adjunction = " << to_string(fp.pa_adjunction) << "\n";
    os << "  published closed-form genus = " << to_string(fp.pa_closed_form) << "\n";
    os << "  published node bound = " << to_string(fp.proposition_delta) << "\n";
    if (!fp.notes.empty()) {
        os << "  family notes:\n";
        for (const auto& n : fp.notes) os << "  - " << n << "\n";
    }
    os << "\n" << render_report_text(surface, c, fp.report, probe);
    return os.str();
}

// ---- CSV rendering --------------------------------------------------------

inline constexpr const char* scan_csv_header =
    "d,a,c2,ck,k2,t,hodge,case,pass,delta_max,proposition_delta,minimal_a";

// One row per point, row-major; the minimal_a column marks the cell whose a
// is the smallest admissible one for its d (search capped at a_cap, or the
// default 10*d when a_cap <= 0).
inline std::string render_scan_csv(const std::vector<FamilyPoint>& points,
                                   long a_cap = 0) {
    std::ostringstream os;
    os << scan_csv_header << "\n";
    std::map<long, std::optional<long>> min_a;
    for (const FamilyPoint& fp : points) {
        auto it = min_a.find(fp.d);
        if (it == min_a.end())
            it = min_a.emplace(fp.d, a_cap > 0 ? minimal_a(fp.d, a_cap) : minimal_a(fp.d))
                     .first;
        const NumericalInvariants& inv = fp.report.invariants;
        os << fp.d << ',' << fp.a << ',' << to_string(inv.c2) << ',' << to_string(inv.ck)
           << ',' << to_string(inv.k2) << ',' << to_string(inv.t) << ','
           << to_string(inv.hodge) << ',' << to_string(fp.report.case_label) << ','
           << (fp.report.all_satisfied() ? 1 : 0) << ','
           << (fp.report.delta_max ? to_string(*fp.report.delta_max) : std::string())
           << ',' << to_string(fp.proposition_delta) << ','
           << ((it->second && *it->second == fp.a) ? 1 : 0) << "\n";
    }
    return os.str();
}

inline constexpr const char* report_csv_header =
    "name,c2,ck,k2,t,cm2k_sq,hodge,pa,case,pass,delta_max";

inline std::string report_csv_row(const std::string& name, const RegularityReport& rep) {
    std::ostringstream os;
    const NumericalInvariants& inv = rep.invariants;
    std::string quoted = name;  // commas in names would break the row
    for (auto& ch : quoted)
        if (ch == ',') ch = ';';
    os << quoted << ',' << to_string(inv.c2) << ',' << to_string(inv.ck) << ','
       << to_string(inv.k2) << ',' << to_string(inv.t) << ',' << to_string(inv.cm2k_sq)
       << ',' << to_string(inv.hodge) << ',' << to_string(inv.pa) << ','
       << to_string(rep.case_label) << ',' << (rep.all_satisfied() ? 1 : 0) << ','
       << (rep.delta_max ? to_string(*rep.delta_max) : std::string());
    return os.str();
}

}  // namespace severi
