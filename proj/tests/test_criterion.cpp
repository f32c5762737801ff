#include "oracle_helpers.hpp"

#include <severi/criterion.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace severi;
using testing::Rng;

namespace {

NumericalInvariants make_inv(long c2, long ck, long k2) {
    NumericalInvariants inv;
    inv.c2 = c2;
    inv.ck = ck;
    inv.k2 = k2;
    inv.t = inv.c2 - 2 * inv.ck;
    inv.cm2k_sq = inv.c2 - 4 * inv.ck + 4 * inv.k2;
    inv.hodge = inv.ck * inv.ck - inv.c2 * inv.k2;
    inv.pa = make_rational(inv.c2 + inv.ck + 2, 2);
    return inv;
}

SurfaceModel quartic_surface() {
    return SurfaceModel("blown-up quartic",
                        IntersectionLattice({"H", "E"}, {{BigInt(4), BigInt(0)},
                                                         {BigInt(0), BigInt(-1)}}),
                        DivisorClass({BigInt(0), BigInt(1)}));
}

SurfaceModel quintic_surface() {
    return SurfaceModel("quintic with a line",
                        IntersectionLattice({"H", "L"}, {{BigInt(5), BigInt(1)},
                                                         {BigInt(1), BigInt(-3)}}),
                        DivisorClass({BigInt(1), BigInt(0)}));
}

bool has_note_containing(const std::vector<std::string>& notes, const std::string& part) {
    for (const auto& n : notes)
        if (n.find(part) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("hypothesis checks on the reference data", "[criterion]") {
    const auto checks = check_hypotheses(quartic_surface(), DivisorClass({BigInt(2), BigInt(0)}));
    REQUIRE(checks.size() == 5);
    CHECK(checks[0] == HypothesisCheck{HypothesisId::H1a, "(C-2K)^2 > 0", 12, 0, true});
    CHECK(checks[1] == HypothesisCheck{HypothesisId::H1b, "C(C-2K) > 0", 16, 0, true});
    CHECK(checks[2] == HypothesisCheck{HypothesisId::H2, "K^2 > -4 (case C(C-2K) >= 8)",
                                       -1, -4, true});
    CHECK(checks[3] == HypothesisCheck{HypothesisId::H3, "C.K >= 0", 0, 0, true});
    CHECK(checks[4] == HypothesisCheck{HypothesisId::H4, "H(C,K) < 4(C(C-2K) - 4)", 16,
                                       48, true});

    const auto checks2 =
        check_hypotheses(quintic_surface(), DivisorClass({BigInt(3), BigInt(1)}));
    CHECK(checks2[0].lhs == 4);
    CHECK(checks2[1].lhs == 16);
    CHECK(checks2[2].lhs == 5);
    CHECK(checks2[3].lhs == 16);
    CHECK(checks2[4].lhs == 16);
    CHECK(checks2[4].rhs == 48);
    for (const auto& c : checks2) CHECK(c.satisfied);

    // plane quartic: C.K = -12 sinks H3, everything else passes
    const SurfaceModel plane("plane", IntersectionLattice({"H"}, {{BigInt(1)}}),
                             DivisorClass({BigInt(-3)}));
    const auto checks3 = check_hypotheses(plane, DivisorClass({BigInt(4)}));
    CHECK(checks3[0].satisfied);
    CHECK(checks3[1].satisfied);
    CHECK(checks3[2].satisfied);
    CHECK_FALSE(checks3[3].satisfied);
    CHECK(checks3[3].lhs == -12);
    CHECK(checks3[4].satisfied);
}

TEST_CASE("hypothesis branch below the case threshold", "[criterion]") {
    // t < 8 swaps the K^2 requirement from > -4 to >= 0
    const auto low = check_hypotheses(make_inv(5, 0, 0));
    CHECK(low[2].description == "K^2 >= 0 (case C(C-2K) < 8)");
    CHECK(low[2].rhs == 0);
    CHECK(low[2].satisfied);
    const auto low_neg = check_hypotheses(make_inv(5, 0, -1));
    CHECK_FALSE(low_neg[2].satisfied);
    const auto high_neg = check_hypotheses(make_inv(21, 0, -1));
    CHECK(high_neg[2].satisfied);
}

TEST_CASE("bound roots", "[criterion]") {
    const auto roots = roots_alpha_beta(invariants(quartic_surface(),
                                                   DivisorClass({BigInt(2), BigInt(0)})));
    CHECK(roots.alpha == SurdExpr(16, -1, 192, 8));
    CHECK(roots.beta == SurdExpr(16, 1, 192, 8));

    // C numerically proportional to K: hodge = 0, alpha collapses to 0
    const auto prop = roots_alpha_beta(make_inv(45, 15, 5));
    CHECK(prop.alpha == SurdExpr::from_rational(Rational(0)));
    REQUIRE(prop.beta.is_rational());
    CHECK(prop.beta.rational_value() == Rational(15, 4));

    const auto degenerate = roots_alpha_beta(make_inv(0, 0, 0));
    CHECK(degenerate.alpha == degenerate.beta);
    CHECK(degenerate.alpha == SurdExpr::from_rational(Rational(0)));

    NumericalInvariants bad = make_inv(1, 0, 0);
    bad.cm2k_sq = -1;
    CHECK_THROWS_AS(roots_alpha_beta(bad), negative_discriminant);
}

TEST_CASE("node polynomial values", "[criterion]") {
    const NumericalInvariants inv =
        invariants(quartic_surface(), DivisorClass({BigInt(2), BigInt(0)}));
    CHECK(f_delta(inv, 0) == 16);
    CHECK(f_delta(inv, 1) == -32);
    CHECK(f_delta(inv, 2) == -48);
    CHECK(f_delta(inv, 3) == -32);
    CHECK(f_delta(inv, 4) == 16);

    CHECK(bogomolov_discriminant(inv, 0) == 15);
    CHECK(bogomolov_discriminant(inv, 3) == 3);
    const NumericalInvariants inv2 =
        invariants(quintic_surface(), DivisorClass({BigInt(3), BigInt(1)}));
    CHECK(bogomolov_discriminant(inv2, 0) == 21);
    CHECK(bogomolov_discriminant(inv2, 3) == 9);
}

TEST_CASE("node bound on the reference surfaces", "[criterion]") {
    const RegularityReport rep =
        delta_max(quartic_surface(), DivisorClass({BigInt(2), BigInt(0)}));
    CHECK(rep.all_satisfied());
    CHECK(rep.case_label == CaseLabel::case_i);
    REQUIRE(rep.delta_max.has_value());
    CHECK(*rep.delta_max == 3);
    CHECK(rep.alpha == SurdExpr(16, -1, 192, 8));
    CHECK(rep.beta == SurdExpr(16, 1, 192, 8));
    CHECK(has_note_containing(rep.notes, "cannot certify"));
    CHECK(rep.notes.back() == regularity_caveat);

    const RegularityReport rep2 =
        delta_max(quintic_surface(), DivisorClass({BigInt(3), BigInt(1)}));
    CHECK(rep2.case_label == CaseLabel::case_i);
    REQUIRE(rep2.delta_max.has_value());
    CHECK(*rep2.delta_max == 3);
}

TEST_CASE("node bound in the small-t case", "[criterion]") {
    // t = 5 with zero canonical class: beta = 5/4, one node admissible
    const SurfaceModel k_trivial("rank-one", IntersectionLattice({"e"}, {{BigInt(5)}}),
                                 DivisorClass({BigInt(0)}));
    const RegularityReport rep = delta_max(k_trivial, DivisorClass({BigInt(1)}));
    CHECK(rep.case_label == CaseLabel::case_ii);
    CHECK(rep.all_satisfied());
    REQUIRE(rep.delta_max.has_value());
    CHECK(*rep.delta_max == 1);
    REQUIRE(rep.beta.is_rational());
    CHECK(rep.beta.rational_value() == Rational(5, 4));

    // t = 6 proportional pair: beta = 3/2
    const SurfaceModel two("rank-one", IntersectionLattice({"e"}, {{BigInt(2)}}),
                           DivisorClass({BigInt(1)}));
    const RegularityReport rep2 = delta_max(two, DivisorClass({BigInt(3)}));
    CHECK(rep2.case_label == CaseLabel::case_ii);
    REQUIRE(rep2.delta_max.has_value());
    CHECK(*rep2.delta_max == 1);

    // irrational beta = (5 + sqrt(21))/8
    const SurfaceModel hyper("hyperbolic",
                             IntersectionLattice({"a", "b"}, {{BigInt(1), BigInt(0)},
                                                              {BigInt(0), BigInt(-1)}}),
                             DivisorClass({BigInt(1), BigInt(1)}));
    const RegularityReport rep3 = delta_max(hyper, DivisorClass({BigInt(4), BigInt(3)}));
    CHECK(rep3.case_label == CaseLabel::case_ii);
    CHECK(rep3.invariants.t == 5);
    CHECK(rep3.beta == SurdExpr(5, 1, 21, 8));
    REQUIRE(rep3.delta_max.has_value());
    CHECK(*rep3.delta_max == 1);
}

TEST_CASE("node bound withheld when a hypothesis fails", "[criterion]") {
    const SurfaceModel plane("plane", IntersectionLattice({"H"}, {{BigInt(1)}}),
                             DivisorClass({BigInt(-3)}));
    const RegularityReport rep = delta_max(plane, DivisorClass({BigInt(4)}));
    CHECK_FALSE(rep.all_satisfied());
    CHECK_FALSE(rep.delta_max.has_value());
    CHECK(rep.case_label == CaseLabel::case_i);
    CHECK(rep.notes.back() == regularity_caveat);

    // t <= 0 leaves no case at all
    const RegularityReport rep2 = delta_max(plane, DivisorClass({BigInt(1)}));
    CHECK(rep2.invariants.t == 7);
    const SurfaceModel big_k("big-canonical", IntersectionLattice({"H"}, {{BigInt(1)}}),
                             DivisorClass({BigInt(5)}));
    const RegularityReport rep3 = delta_max(big_k, DivisorClass({BigInt(2)}));
    CHECK(rep3.invariants.t == -16);
    CHECK(rep3.case_label == CaseLabel::none);
    CHECK_FALSE(rep3.delta_max.has_value());
}

TEST_CASE("negative discriminant is reported, not thrown", "[criterion]") {
    // C^2 < 0 with (C-2K)^2 > 0 makes the root discriminant negative
    const SurfaceModel hyper("hyperbolic",
                             IntersectionLattice({"a", "b"}, {{BigInt(1), BigInt(0)},
                                                              {BigInt(0), BigInt(-1)}}),
                             DivisorClass({BigInt(0), BigInt(1)}));
    const RegularityReport rep = delta_max(hyper, DivisorClass({BigInt(1), BigInt(2)}));
    CHECK(rep.invariants.c2 == -3);
    CHECK(rep.invariants.cm2k_sq == 1);
    CHECK(has_note_containing(rep.notes, "bound roots are undefined"));
    CHECK(rep.alpha == SurdExpr());
    CHECK(rep.beta == SurdExpr());
}

TEST_CASE("delta probe", "[criterion]") {
    const RegularityReport rep =
        delta_max(quartic_surface(), DivisorClass({BigInt(2), BigInt(0)}));
    const DeltaProbe at3 = make_delta_probe(rep, 3);
    CHECK(at3.f_value == -32);
    CHECK(at3.bogomolov == 3);
    CHECK(at3.geometric_genus_value == 6);
    CHECK_FALSE(at3.genus_negative);
    REQUIRE(at3.within_delta_max.has_value());
    CHECK(*at3.within_delta_max);

    const DeltaProbe at4 = make_delta_probe(rep, 4);
    CHECK(at4.f_value == 16);
    REQUIRE(at4.within_delta_max.has_value());
    CHECK_FALSE(*at4.within_delta_max);

    const DeltaProbe at12 = make_delta_probe(rep, 12);
    CHECK(at12.geometric_genus_value == -3);
    CHECK(at12.genus_negative);

    CHECK_THROWS_AS(make_delta_probe(rep, BigInt(-1)), domain_error);

    const SurfaceModel plane("plane", IntersectionLattice({"H"}, {{BigInt(1)}}),
                             DivisorClass({BigInt(-3)}));
    const RegularityReport failing = delta_max(plane, DivisorClass({BigInt(4)}));
    CHECK_FALSE(make_delta_probe(failing, 1).within_delta_max.has_value());
}

TEST_CASE("proportional-class comparison bounds", "[criterion]") {
    const ProportionalBounds b = proportional_bounds(Rational(3), 5);
    CHECK(b.beta_value == Rational(15, 4));
    CHECK(b.sharp_delta == 5);

    const ProportionalBounds edge = proportional_bounds(Rational(2), 6);
    CHECK(edge.beta_value == 0);
    CHECK(edge.sharp_delta == Rational(3, 2));

    const ProportionalBounds big = proportional_bounds(Rational(5), 4);
    CHECK(big.beta_value == 15);
    CHECK(big.sharp_delta == 16);

    CHECK_THROWS_AS(proportional_bounds(Rational(3, 2), 5), domain_error);
    CHECK_THROWS_AS(proportional_bounds(Rational(3), 0), domain_error);
    CHECK_THROWS_AS(proportional_bounds(Rational(3), -2), domain_error);
}

TEST_CASE("node polynomial negative exactly between the roots", "[criterion][property]") {
    Rng rng(21);
    int usable = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const NumericalInvariants inv =
            make_inv(testing::rand_in(rng, -12, 30), testing::rand_in(rng, -12, 12),
                     testing::rand_in(rng, -12, 12));
        if (inv.c2 * inv.cm2k_sq < 0) continue;
        ++usable;
        const BoundRoots roots = roots_alpha_beta(inv);
        for (long d = -2; d <= 8; ++d) {
            const BigInt f = f_delta(inv, d);
            const Rational x(d);
            const auto va = surd_cmp(roots.alpha, x);
            const auto vb = surd_cmp(roots.beta, x);
            if (f < 0) {
                CHECK(va == std::strong_ordering::less);
                CHECK(vb == std::strong_ordering::greater);
            } else if (f == 0) {
                CHECK((va == std::strong_ordering::equal ||
                       vb == std::strong_ordering::equal));
            } else {
                CHECK((va == std::strong_ordering::greater ||
                       vb == std::strong_ordering::less));
            }
        }
    }
    CHECK(usable > 100);
}

TEST_CASE("fourth hypothesis pins 1 between the roots", "[criterion][property]") {
    Rng rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const NumericalInvariants inv =
            make_inv(testing::rand_in(rng, 1, 40), testing::rand_in(rng, -10, 10),
                     testing::rand_in(rng, -10, 10));
        if (inv.t <= 0 || inv.c2 * inv.cm2k_sq < 0) continue;
        const auto checks = check_hypotheses(inv);
        const BoundRoots roots = roots_alpha_beta(inv);
        const bool contains_one =
            surd_cmp(roots.alpha, Rational(1)) == std::strong_ordering::less &&
            surd_cmp(roots.beta, Rational(1)) == std::strong_ordering::greater;
        CHECK(checks[4].satisfied == contains_one);
    }
}

TEST_CASE("node bound against brute force on random surfaces", "[criterion][property]") {
    Rng rng(23);
    int passing = 0, case_i_seen = 0, case_ii_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = static_cast<int>(testing::rand_in(rng, 2, 4));
        const auto sample = testing::random_hodge_lattice(rng, n);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        const BigInt m(testing::rand_in(rng, 1, 3));
        const DivisorClass c = m * sample.positive_class;
        // canonical class: zero or proportional keeps the hypotheses reachable,
        // generic mostly exercises the failing paths
        const long k_mode = testing::rand_in(rng, 0, 2);
        DivisorClass kc;
        if (k_mode == 0) {
            kc = DivisorClass(std::vector<BigInt>(n, BigInt(0)));
        } else if (k_mode == 1) {
            kc = sample.positive_class;
        } else {
            std::vector<BigInt> raw;
            for (int i = 0; i < n; ++i) raw.push_back(BigInt(testing::rand_in(rng, -2, 2)));
            kc = DivisorClass(raw);
        }
        const SurfaceModel surface("random", IntersectionLattice(names, sample.gram), kc);
        const RegularityReport rep = delta_max(surface, c);

        CHECK(rep.notes.back() == regularity_caveat);
        CHECK(rep.delta_max.has_value() == rep.all_satisfied());
        CHECK(rep.invariants.hodge >= 0);  // signature (1,n-1) and C^2 > 0

        if ((rep.invariants.t >= 8) != (rep.case_label == CaseLabel::case_i)) CHECK(false);
        if (!rep.delta_max) continue;
        ++passing;
        if (rep.case_label == CaseLabel::case_i)
            ++case_i_seen;
        else
            ++case_ii_seen;

        CHECK(*rep.delta_max >= 1);
        const long window = rep.delta_max->get_si() + 10;
        const auto brute = testing::delta_max_bruteforce(rep, window);
        REQUIRE(brute.has_value());
        CHECK(*brute == *rep.delta_max);

        if (rep.invariants.c2 * rep.invariants.cm2k_sq >= 0) {
            // alpha >= 0 and the case-I bound never exceeds the beta bound
            CHECK(surd_cmp(rep.alpha, Rational(0)) != std::strong_ordering::less);
            CHECK(*rep.delta_max <= strict_sup_int(rep.beta));
        }
        // Bogomolov quantity stays positive up to the bound
        for (BigInt d = 0; d <= *rep.delta_max; d += 1)
            CHECK(bogomolov_discriminant(rep.invariants, d) > 0);
    }
    CHECK(passing > 40);
    CHECK(case_i_seen > 20);
    CHECK(case_ii_seen >= 5);
}

TEST_CASE("small-t node bound is at least one", "[criterion][property]") {
    // in the small-t case the fourth hypothesis forces beta > 1
    Rng rng(24);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 25; ++trial) {
        const NumericalInvariants inv =
            make_inv(testing::rand_in(rng, 1, 20), testing::rand_in(rng, -6, 6),
                     testing::rand_in(rng, 0, 6));
        if (inv.t <= 0 || inv.t >= 8) continue;
        if (inv.c2 * inv.cm2k_sq < 0) continue;
        const auto checks = check_hypotheses(inv);
        bool all = true;
        for (const auto& c : checks) all = all && c.satisfied;
        if (!all) continue;
        ++seen;
        const BoundRoots roots = roots_alpha_beta(inv);
        CHECK(strict_sup_int(roots.beta) >= 1);
    }
    CHECK(seen >= 25);
}
