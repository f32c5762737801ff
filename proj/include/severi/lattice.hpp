#pragma once

// Integer intersection lattices on a fixed basis, divisor classes as
// coordinate vectors, exact signature computation, and the numerical
// invariants attached to a polarized surface model.

#include <severi/exactnum.hpp>

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

namespace severi {

struct dimension_mismatch : error {
    using error::error;
};

using GramMatrix = std::vector<std::vector<BigInt>>;

struct IntersectionLattice {
    std::vector<std::string> basis_names;
    GramMatrix gram;

    IntersectionLattice(std::vector<std::string> names, GramMatrix g)
        : basis_names(std::move(names)), gram(std::move(g)) {
        if (basis_names.empty()) throw domain_error("lattice needs a non-empty basis");
        if (gram.size() != basis_names.size())
            throw dimension_mismatch("gram has " + std::to_string(gram.size()) +
                                     " rows for " + std::to_string(basis_names.size()) +
                                     " basis elements");
        for (const auto& row : gram)
            if (row.size() != basis_names.size())
                throw dimension_mismatch("gram row has " + std::to_string(row.size()) +
                                         " entries, expected " +
                                         std::to_string(basis_names.size()));
    }

    std::size_t rank() const { return basis_names.size(); }

    bool operator==(const IntersectionLattice&) const = default;
};

struct DivisorClass {
    std::vector<BigInt> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<BigInt> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }

    bool operator==(const DivisorClass&) const = default;
};

namespace detail {
inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw dimension_mismatch(std::string(what) + ": " + std::to_string(a) +
                                 " vs " + std::to_string(b));
}
}  // namespace detail

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    detail::require_same_size(a.size(), b.size(), "class sum");
    DivisorClass out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    detail::require_same_size(a.size(), b.size(), "class difference");
    DivisorClass out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

inline DivisorClass operator*(const BigInt& m, const DivisorClass& a) {
    DivisorClass out = a;
    for (auto& c : out.coeffs) c *= m;
    return out;
}

// intersection number a.b through the gram matrix
inline BigInt pair(const IntersectionLattice& lat, const DivisorClass& a,
                   const DivisorClass& b) {
    detail::require_same_size(a.size(), lat.rank(), "left class vs lattice rank");
    detail::require_same_size(b.size(), lat.rank(), "right class vs lattice rank");
    BigInt acc = 0;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        if (a.coeffs[i] == 0) continue;
        BigInt row = 0;
        for (std::size_t j = 0; j < lat.rank(); ++j) row += lat.gram[i][j] * b.coeffs[j];
        acc += a.coeffs[i] * row;
    }
    return acc;
}

struct SurfaceModel {
    std::string name;
    IntersectionLattice lattice;
    DivisorClass canonical;

    SurfaceModel(std::string name_, IntersectionLattice lat, DivisorClass k)
        : name(std::move(name_)), lattice(std::move(lat)), canonical(std::move(k)) {
        detail::require_same_size(canonical.size(), lattice.rank(),
                                  "canonical class vs lattice rank");
    }

    bool operator==(const SurfaceModel&) const = default;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Signature&) const = default;
};

// Exact inertia of a symmetric integer matrix via rational congruence
// diagonalization.  Zero diagonal with a nonzero off-diagonal pivot is
// handled as a hyperbolic pair, which contributes (+1, -1).
// pre: g square and symmetric.
inline Signature signature_of(const GramMatrix& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(g[i][j]);

    auto swap_rows_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        std::swap(a[x], a[y]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][x], a[r][y]);
    };

    Signature sig;
    std::size_t i = 0;
    while (i < n) {
        // case 1: some diagonal entry in the active block is nonzero
        std::size_t d = n;
        for (std::size_t k = i; k < n && d == n; ++k)
            if (a[k][k] != 0) d = k;
        if (d < n) {
            swap_rows_cols(i, d);
            const Rational piv = a[i][i];
            if (piv > 0)
                ++sig.positive;
            else
                ++sig.negative;
            for (std::size_t r = i + 1; r < n; ++r) {
                if (a[r][i] == 0) continue;
                const Rational f = a[r][i] / piv;
                for (std::size_t s = i; s < n; ++s) a[r][s] -= f * a[i][s];
                for (std::size_t s = i; s < n; ++s) a[s][r] = a[r][s];
            }
            ++i;
            continue;
        }
        // case 2: zero diagonal but a nonzero off-diagonal entry exists;
        // a hyperbolic 2x2 block [[0, c], [c, 0]] contributes (+1, -1) and
        // the complement is reduced by the block's Schur complement
        std::size_t hk = n, hl = n;
        for (std::size_t k = i; k < n && hk == n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
                if (a[k][l] != 0) {
                    hk = k;
                    hl = l;
                    break;
                }
        if (hk == n) {
            // case 3: active block is identically zero
            sig.zero += static_cast<int>(n - i);
            break;
        }
        swap_rows_cols(i, hk);  // hl > hk >= i keeps the partner off column i
        swap_rows_cols(i + 1, hl);
        const Rational c = a[i][i + 1];
        ++sig.positive;
        ++sig.negative;
        for (std::size_t r = i + 2; r < n; ++r) {
            const Rational ri = a[r][i];
            const Rational rj = a[r][i + 1];
            if (ri == 0 && rj == 0) continue;
            // upper triangle only: rows i, i+1 stay intact, so s >= r applies
            // the correction once per unordered pair and the mirror fills the rest
            for (std::size_t s = r; s < n; ++s)
                a[r][s] -= (ri * a[i + 1][s] + rj * a[i][s]) / c;
            for (std::size_t s = r + 1; s < n; ++s) a[s][r] = a[r][s];
        }
        i += 2;
    }
    return sig;
}

struct ValidationOutcome {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Structural checks plus (optionally) the hyperbolic signature (1, rank-1)
// required of the intersection form on a smooth projective surface.
inline ValidationOutcome validate_lattice(const IntersectionLattice& lat,
                                          bool require_hodge_signature = true) {
    ValidationOutcome out;
    for (std::size_t i = 0; i < lat.basis_names.size(); ++i) {
        if (lat.basis_names[i].empty())
            out.violations.push_back("basis name " + std::to_string(i) + " is empty");
        for (std::size_t j = i + 1; j < lat.basis_names.size(); ++j)
            if (lat.basis_names[i] == lat.basis_names[j])
                out.violations.push_back("duplicate basis name '" + lat.basis_names[i] +
                                         "'");
    }
    bool symmetric = true;
    for (std::size_t i = 0; i < lat.rank(); ++i)
        for (std::size_t j = i + 1; j < lat.rank(); ++j)
            if (lat.gram[i][j] != lat.gram[j][i]) {
                out.violations.push_back(
                    "gram is not symmetric at (" + std::to_string(i) + "," +
                    std::to_string(j) + "): " + to_string(lat.gram[i][j]) + " vs " +
                    to_string(lat.gram[j][i]));
                symmetric = false;
            }
    if (require_hodge_signature && symmetric) {
        const Signature sig = signature_of(lat.gram);
        const int want_negative = static_cast<int>(lat.rank()) - 1;
        if (sig.positive != 1 || sig.negative != want_negative || sig.zero != 0) {
            std::string got = "signature (" + std::to_string(sig.positive) + "," +
                              std::to_string(sig.negative) + ")";
            if (sig.zero != 0) got += " with " + std::to_string(sig.zero) + " zero direction(s)";
            out.violations.push_back(got + ", expected (1," +
                                     std::to_string(want_negative) + ")");
        }
    }
    return out;
}

// Intersection data of (surface, C) used by the regularity criterion.
//   t        = C(C-2K)
//   cm2k_sq  = (C-2K)^2
//   hodge    = (C.K)^2 - C^2 K^2
//   pa       = C(C+K)/2 + 1
struct NumericalInvariants {
    BigInt c2;
    BigInt ck;
    BigInt k2;
    BigInt t;
    BigInt cm2k_sq;
    BigInt hodge;
    Rational pa;

    bool operator==(const NumericalInvariants&) const = default;
};

inline NumericalInvariants invariants(const SurfaceModel& surface, const DivisorClass& c) {
    const IntersectionLattice& lat = surface.lattice;
    const DivisorClass& k = surface.canonical;
    NumericalInvariants inv;
    inv.c2 = pair(lat, c, c);
    inv.ck = pair(lat, c, k);
    inv.k2 = pair(lat, k, k);
    const DivisorClass cm2k = c - BigInt(2) * k;
    inv.t = pair(lat, c, cm2k);
    inv.cm2k_sq = pair(lat, cm2k, cm2k);
    inv.hodge = inv.ck * inv.ck - inv.c2 * inv.k2;
    inv.pa = make_rational(inv.c2 + inv.ck + 2, 2);
    // bilinearity ties every derived pairing back to c2/ck/k2
    assert(inv.t == inv.c2 - 2 * inv.ck);
    assert(inv.cm2k_sq == inv.c2 - 4 * inv.ck + 4 * inv.k2);
    assert(inv.t * inv.t - 4 * inv.hodge == inv.c2 * inv.cm2k_sq);
    return inv;
}

struct GenusValue {
    Rational value;
    bool integral;  // false flags a non-integral adjunction value
};

inline GenusValue arithmetic_genus(const SurfaceModel& surface, const DivisorClass& c) {
    const BigInt c2 = pair(surface.lattice, c, c);
    const BigInt ck = pair(surface.lattice, c, surface.canonical);
    GenusValue g;
    g.value = make_rational(c2 + ck + 2, 2);
    g.integral = (g.value.get_den() == 1);
    return g;
}

struct GeometricGenus {
    Rational value;
    bool negative;  // true when delta exceeds the arithmetic genus
};

inline GeometricGenus geometric_genus(const Rational& pa, const BigInt& delta) {
    if (delta < 0) throw domain_error("node count must be non-negative");
    GeometricGenus g;
    g.value = pa - Rational(delta);
    g.negative = (g.value < 0);
    return g;
}

}  // namespace severi
