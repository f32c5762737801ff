#pragma once

// The degree-d-surface-with-a-line family: S smooth of degree d >= 5 in P^3
// containing a line L, Pic generated by the hyperplane class H and L,
// curves C = aH - L.  Builds the rank-2 model, locates the smallest
// admissible a, and evaluates the published closed-form thresholds.

#include <severi/criterion.hpp>
#include <severi/exactnum.hpp>
#include <severi/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace severi {

// gram on (H, L) is [[d, 1], [1, 2-d]], canonical class (d-4)H
inline SurfaceModel build_surface(long d) {
    if (d < 5) throw domain_error("family needs degree d >= 5, got " + std::to_string(d));
    GramMatrix gram{{BigInt(d), BigInt(1)}, {BigInt(1), BigInt(2 - d)}};
    IntersectionLattice lat({"H", "L"}, std::move(gram));
    DivisorClass canonical({BigInt(d - 4), BigInt(0)});
    return SurfaceModel("degree-" + std::to_string(d) + " surface with a line",
                        std::move(lat), std::move(canonical));
}

struct FamilyPoint {
    long d = 0;
    long a = 0;
    BigInt degree;            // ad - 1
    Rational pa_adjunction;   // C(C+K)/2 + 1 from the lattice
    Rational pa_closed_form;  // published closed form (ad(a+d) - 2a - d(4a+1) + 3)/2
    Rational proposition_delta;  // published bound (a^2 d - 2a(d^2-4d+1) + 2d - 15)/4
    RegularityReport report;
    std::vector<std::string> notes;

    bool operator==(const FamilyPoint&) const = default;
};

inline FamilyPoint family_point(long d, long a) {
    if (a < 1) throw domain_error("family needs a >= 1, got " + std::to_string(a));
    const SurfaceModel surface = build_surface(d);
    const DivisorClass c({BigInt(a), BigInt(-1)});
    FamilyPoint fp;
    fp.d = d;
    fp.a = a;
    fp.degree = BigInt(a) * d - 1;
    fp.report = delta_max(surface, c);
    fp.pa_adjunction = fp.report.invariants.pa;
    const BigInt A(a), D(d);
    fp.pa_closed_form =
        make_rational(A * D * (A + D) - 2 * A - D * (4 * A + 1) + 3, 2);
    fp.proposition_delta =
        make_rational(A * A * D - 2 * A * (D * D - 4 * D + 1) + 2 * D - 15, 4);
    if (fp.pa_closed_form != fp.pa_adjunction)
        fp.notes.push_back("published closed-form genus " + to_string(fp.pa_closed_form) +
                           " differs from the adjunction value " +
                           to_string(fp.pa_adjunction) +
                           " (the closed form agrees with adjunction only at d=5)");
    const Rational t_bound = make_rational(fp.report.invariants.t - 4, 4);
    if (fp.proposition_delta != t_bound)
        fp.notes.push_back("published family node bound " + to_string(fp.proposition_delta) +
                           " differs from t/4 - 1 = " + to_string(t_bound) +
                           "; delta_max follows t/4 - 1");
    return fp;
}

// smallest a in [1, a_cap] whose five checks all pass; the scan is exhaustive
// from 1 upward (no monotonicity assumed)
inline std::optional<long> minimal_a(long d, long a_cap) {
    if (a_cap < 1) throw domain_error("a_cap must be >= 1, got " + std::to_string(a_cap));
    const SurfaceModel surface = build_surface(d);
    for (long a = 1; a <= a_cap; ++a) {
        const DivisorClass c({BigInt(a), BigInt(-1)});
        const auto checks = check_hypotheses(surface, c);
        bool all = true;
        for (const auto& ch : checks) all = all && ch.satisfied;
        if (all) return a;
    }
    return std::nullopt;
}

inline std::optional<long> minimal_a(long d) { return minimal_a(d, 10 * d); }

// Closed-form admissibility thresholds for the family, evaluated exactly.
// The exact bound on a from the Hodge condition has its nested radicand
// cleared to one integer radical over the common denominator 2d; the
// rounded bound replaces that radical by (d*sqrt(d) - b)/2 + d - 3 for a
// majorant offset b (9 by default).
struct ThresholdRecord {
    long d = 0;
    BigInt b;
    std::optional<BigInt> small_d_min_a;  // 2d - 6, quoted for 5 <= d <= 7
    SurdExpr hodge_min_a_bound;           // exact lower bound on a (strict)
    BigInt hodge_min_a;                   // smallest integer above it
    BigInt rounded_min_a;                 // ceil(d - 3 + (d*sqrt(d) - b)/2)
    bool b_fits = false;            // 2bd*sqrt(d) <= 6d^2 - d + b^2 - 32
    bool rounded_dominates = false;  // d*sqrt(d) > 2d + b - 6
    std::optional<long> minimal_a_bruteforce;

    bool operator==(const ThresholdRecord&) const = default;
};

inline ThresholdRecord thresholds(long d, BigInt b = 9) {
    if (d < 5) throw domain_error("family needs degree d >= 5, got " + std::to_string(d));
    if (b <= 0) throw domain_error("majorant offset b must be positive");
    ThresholdRecord rec;
    rec.d = d;
    rec.b = b;
    if (d <= 7) rec.small_d_min_a = BigInt(2 * d - 6);
    const BigInt D(d);
    const BigInt radicand =
        D * D * D * D * D - 6 * D * D * D * D + D * D * D + 28 * D * D + 24 * D + 4;
    rec.hodge_min_a_bound = SurdExpr(2 * (D * D - 4 * D + 1), 1, radicand, 2 * D);
    rec.hodge_min_a = surd_floor(rec.hodge_min_a_bound) + 1;
    rec.rounded_min_a = surd_ceil(SurdExpr(2 * D - 6 - b, D, D, 2));
    rec.b_fits = surd_cmp(SurdExpr(6 * D * D - D + b * b - 32, -2 * b * D, D, 1),
                          Rational(0)) != std::strong_ordering::less;
    rec.rounded_dominates = surd_cmp(SurdExpr(6 - 2 * D - b, D, D, 1), Rational(0)) ==
                            std::strong_ordering::greater;
    rec.minimal_a_bruteforce = minimal_a(d);
    return rec;
}

// Comparison against the degree-based genus bound for smooth surfaces
// containing a line (lines counted with s = 1): such a surface carries no
// reduced irreducible curve of geometric genus below the bound, which caps
// the node count from the genus side.
struct GenusBoundComparison {
    long d = 0;
    long a = 0;
    long s = 1;
    Rational genus_lower_bound;  // 2 + (d-6)/2 * deg(C)
    Rational delta_from_genus;   // C^2/2 + C.H - 1
    Rational delta_criterion;    // C^2/4 - (d-4)/2 * C.H - 1, i.e. t/4 - 1
    bool consistent = false;     // delta_criterion <= delta_from_genus
    std::vector<std::string> notes;

    bool operator==(const GenusBoundComparison&) const = default;
};

inline GenusBoundComparison genus_bound_comparison(long d, long a) {
    if (a < 1) throw domain_error("family needs a >= 1, got " + std::to_string(a));
    const SurfaceModel surface = build_surface(d);
    const DivisorClass c({BigInt(a), BigInt(-1)});
    const DivisorClass h({BigInt(1), BigInt(0)});
    const BigInt c2 = pair(surface.lattice, c, c);
    const BigInt ch = pair(surface.lattice, c, h);
    GenusBoundComparison cmp;
    cmp.d = d;
    cmp.a = a;
    cmp.genus_lower_bound = 2 + make_rational(BigInt(d - 6) * ch, 2);
    cmp.delta_from_genus = make_rational(c2, 2) + Rational(ch) - 1;
    cmp.delta_criterion = make_rational(c2, 4) - make_rational(BigInt(d - 4) * ch, 2) - 1;
    cmp.consistent = (cmp.delta_criterion <= cmp.delta_from_genus);
    if (d == 5)
        cmp.notes.push_back(
            "at d = 5 the genus bound slope (d-6)/2 is negative and the bound is "
            "vacuous; comparison kept for completeness");
    return cmp;
}

// row-major grid: d outer, a inner; inverted/empty ranges yield an empty list
inline std::vector<FamilyPoint> scan(long d_lo, long d_hi, long a_lo, long a_hi) {
    std::vector<FamilyPoint> out;
    if (d_lo > d_hi || a_lo > a_hi) return out;
    if (d_lo < 5) throw domain_error("scan needs d >= 5, got " + std::to_string(d_lo));
    if (a_lo < 1) throw domain_error("scan needs a >= 1, got " + std::to_string(a_lo));
    out.reserve(static_cast<std::size_t>(d_hi - d_lo + 1) *
                static_cast<std::size_t>(a_hi - a_lo + 1));
    for (long d = d_lo; d <= d_hi; ++d)
        for (long a = a_lo; a <= a_hi; ++a) out.push_back(family_point(d, a));
    return out;
}

}  // namespace severi
