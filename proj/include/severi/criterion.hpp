#pragma once

// The numerical regularity criterion: five hypothesis checks on the
// invariants of (surface, C), the bound roots alpha/beta of the node
// polynomial, and the resulting maximal admissible node count.

#include <severi/exactnum.hpp>
#include <severi/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace severi {

struct negative_discriminant : error {
    using error::error;
};

enum class HypothesisId { H1a, H1b, H2, H3, H4 };

inline const char* to_string(HypothesisId id) {
    switch (id) {
        case HypothesisId::H1a: return "H1a";
        case HypothesisId::H1b: return "H1b";
        case HypothesisId::H2: return "H2";
        case HypothesisId::H3: return "H3";
        case HypothesisId::H4: return "H4";
    }
    return "?";
}

struct HypothesisCheck {
    HypothesisId id;
    std::string description;
    BigInt lhs;
    BigInt rhs;
    bool satisfied;

    bool operator==(const HypothesisCheck&) const = default;
};

enum class CaseLabel { case_i, case_ii, none };

inline const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::case_i: return "I";
        case CaseLabel::case_ii: return "II";
        case CaseLabel::none: return "none";
    }
    return "?";
}

// attached to every report: the lattice arithmetic cannot see geometry
inline constexpr const char* regularity_caveat =
    "numerical checks on the intersection lattice cannot certify the geometric "
    "side conditions (existence, irreducibility and positivity of the classes "
    "involved); the bound applies only when those hold";

inline std::vector<HypothesisCheck> check_hypotheses(const NumericalInvariants& inv) {
    std::vector<HypothesisCheck> checks;
    checks.reserve(5);
    checks.push_back({HypothesisId::H1a, "(C-2K)^2 > 0", inv.cm2k_sq, 0,
                      inv.cm2k_sq > 0});
    checks.push_back({HypothesisId::H1b, "C(C-2K) > 0", inv.t, 0, inv.t > 0});
    if (inv.t >= 8)
        checks.push_back({HypothesisId::H2, "K^2 > -4 (case C(C-2K) >= 8)", inv.k2,
                          -4, inv.k2 > -4});
    else
        checks.push_back({HypothesisId::H2, "K^2 >= 0 (case C(C-2K) < 8)", inv.k2, 0,
                          inv.k2 >= 0});
    checks.push_back({HypothesisId::H3, "C.K >= 0", inv.ck, 0, inv.ck >= 0});
    const BigInt h4_rhs = 4 * (inv.t - 4);
    checks.push_back({HypothesisId::H4, "H(C,K) < 4(C(C-2K) - 4)", inv.hodge, h4_rhs,
                      inv.hodge < h4_rhs});
    return checks;
}

inline std::vector<HypothesisCheck> check_hypotheses(const SurfaceModel& surface,
                                                     const DivisorClass& c) {
    return check_hypotheses(invariants(surface, c));
}

struct BoundRoots {
    SurdExpr alpha;  // (t - sqrt(D))/8
    SurdExpr beta;   // (t + sqrt(D))/8
};

// Roots of f(x) = 16x^2 - 4tx + H, with discriminant D = t^2 - 4H = C^2 (C-2K)^2.
// The product form is used so the sign of D is decided before any square root.
inline BoundRoots roots_alpha_beta(const NumericalInvariants& inv) {
    const BigInt d = inv.c2 * inv.cm2k_sq;
    if (d < 0)
        throw negative_discriminant("discriminant C^2*(C-2K)^2 = " + to_string(d) +
                                    " is negative");
    BoundRoots roots;
    roots.alpha = SurdExpr(inv.t, -1, d, 8);
    roots.beta = SurdExpr(inv.t, 1, d, 8);
    return roots;
}

// f(delta) = 16 delta^2 - 4 t delta + H; negative exactly on (alpha, beta)
inline BigInt f_delta(const NumericalInvariants& inv, const BigInt& delta) {
    return 16 * delta * delta - 4 * inv.t * delta + inv.hodge;
}

// (C-K)^2 - 4 delta, the discriminant-style quantity from the Bogomolov
// instability threshold
inline BigInt bogomolov_discriminant(const NumericalInvariants& inv,
                                     const BigInt& delta) {
    return inv.c2 - 2 * inv.ck + inv.k2 - 4 * delta;
}

struct RegularityReport {
    NumericalInvariants invariants;
    std::vector<HypothesisCheck> checks;
    CaseLabel case_label = CaseLabel::none;
    std::optional<BigInt> delta_max;
    SurdExpr alpha;
    SurdExpr beta;
    std::vector<std::string> notes;

    bool all_satisfied() const {
        for (const auto& c : checks)
            if (!c.satisfied) return false;
        return true;
    }

    bool operator==(const RegularityReport&) const = default;
};

// Full criterion run.  delta_max is present exactly when all five checks pass:
// for t >= 8 the bound is floor(t/4 - 1); for 0 < t < 8 it is the greatest
// integer strictly below beta.
inline RegularityReport delta_max(const SurfaceModel& surface, const DivisorClass& c) {
    RegularityReport rep;
    rep.invariants = invariants(surface, c);
    rep.checks = check_hypotheses(rep.invariants);
    const NumericalInvariants& inv = rep.invariants;
    if (inv.t >= 8)
        rep.case_label = CaseLabel::case_i;
    else if (inv.t > 0)
        rep.case_label = CaseLabel::case_ii;
    else
        rep.case_label = CaseLabel::none;
    try {
        const BoundRoots roots = roots_alpha_beta(inv);
        rep.alpha = roots.alpha;
        rep.beta = roots.beta;
    } catch (const negative_discriminant& e) {
        rep.notes.push_back(std::string(e.what()) + "; bound roots are undefined");
    }
    if (rep.all_satisfied()) {
        if (rep.case_label == CaseLabel::case_i)
            rep.delta_max = floor_div(inv.t - 4, 4);
        else  // H1b passed, so t > 0 and this is case II
            rep.delta_max = strict_sup_int(rep.beta);
        if (*rep.delta_max == 0)
            rep.notes.push_back(
                "delta_max = 0: the hypotheses hold but admit no nodal degeneration");
    }
    rep.notes.push_back(regularity_caveat);
    return rep;
}

struct DeltaProbe {
    BigInt delta;
    BigInt f_value;
    BigInt bogomolov;
    Rational geometric_genus_value;
    bool genus_negative = false;
    std::optional<bool> within_delta_max;

    bool operator==(const DeltaProbe&) const = default;
};

inline DeltaProbe make_delta_probe(const RegularityReport& rep, const BigInt& delta) {
    if (delta < 0) throw domain_error("node count must be non-negative");
    DeltaProbe probe;
    probe.delta = delta;
    probe.f_value = f_delta(rep.invariants, delta);
    probe.bogomolov = bogomolov_discriminant(rep.invariants, delta);
    const GeometricGenus g = geometric_genus(rep.invariants.pa, delta);
    probe.geometric_genus_value = g.value;
    probe.genus_negative = g.negative;
    if (rep.delta_max) probe.within_delta_max = (delta <= *rep.delta_max);
    return probe;
}

// Degenerate family C numerically proportional to K (C = pK, K^2 = k > 0):
// the Hodge number vanishes, so alpha = 0 and beta = t/4 = p(p-2)k/4.
// sharp_delta is the classical sharp count (p-1)^2 k / 4 for comparison.
struct ProportionalBounds {
    Rational p;
    BigInt k2;
    Rational beta_value;
    Rational sharp_delta;

    bool operator==(const ProportionalBounds&) const = default;
};

inline ProportionalBounds proportional_bounds(const Rational& p, const BigInt& k2) {
    if (p < 2) throw domain_error("proportionality factor must be >= 2");
    if (k2 <= 0) throw domain_error("K^2 must be positive");
    ProportionalBounds out;
    out.p = p;
    out.k2 = k2;
    out.beta_value = p * (p - 2) * Rational(k2) / 4;
    out.sharp_delta = (p - 1) * (p - 1) * Rational(k2) / 4;
    return out;
}

}  // namespace severi
