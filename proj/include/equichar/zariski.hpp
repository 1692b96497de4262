#pragma once

#include "equichar/cover.hpp"

#include <map>

namespace equichar {

// Locally free equivariant sheaf data: rank, degree, and the fiber class at
// each branch orbit as exponents l_{Q,i}, meaning the fiber at the chosen
// point decomposes as sum_i chi_Q^{-l_{Q,i}}. Missing orbits default to the
// trivial fiber action (all exponents 0).
struct CoherentSheafData {
    long rank = 1;
    long degree = 0;
    std::map<std::string, std::vector<long>> fibers;

    static CoherentSheafData trivial(long rank = 1, long degree = 0) {
        return {rank, degree, {}};
    }

    // Exponents at a branch orbit, normalized mod e and padded to rank.
    std::vector<long> exponents_at(const BranchOrbit& q) const;
};

// Equivariant divisor: integer coefficient n_Q per orbit. Branch-orbit
// entries split as n = l + m*e with l in [0, e); unramified orbits use the
// e = 1 convention (l = 0, m = n).
struct EquivariantDivisorData {
    std::map<std::string, long> entries;            // branch-orbit label -> n_Q
    std::map<std::string, long> unramified_orbits;  // label -> n_Q
};

// A realizability certificate attached to an engine result. Failing
// certificates mark the input as synthetic data that cannot come from an
// actual curve; they are reports, not errors.
struct Certificate {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct EngineResult {
    VirtualRep value;
    std::vector<Certificate> certificates;

    bool all_ok() const {
        for (const auto& c : certificates) {
            if (!c.ok) return false;
        }
        return true;
    }
};

// n * chi(G,X,E) = (n(1-g_Y)r + deg E)[k[G]]
//                  - sum_P sum_{d=0}^{e_P-1} d [Ind(E(P) tensor chi_P^d)].
EngineResult euler_char_thm11(const TameCover& cover, const CoherentSheafData& sheaf);

// Multiplicity form of the same class, assembled irreducible by irreducible
// from local pairing counts.
EngineResult multiplicities_cor13(const TameCover& cover, const CoherentSheafData& sheaf);

// N_{G,X} with n[N] = sum_P sum_d d [Ind(chi_P^d)].
EngineResult nakajima_module(const TameCover& cover);

// Congruence form: -r[N] + sum_Q sum_i sum_{d=1}^{l_{Q,i}} [Ind(chi_Q^{-d})],
// normalized by adding c[k[G]] with c fixed by the Riemann-Roch dimension.
EngineResult euler_char_cor14(const TameCover& cover, const CoherentSheafData& sheaf);

// [H^0(X, Omega)] = [k] + (g_Y - 1)[k[G]] + [dual N].
EngineResult differentials_cor17(const TameCover& cover);

// Multiplicity of a nontrivial rationally valued irreducible V in H^0(Omega):
// dim V (g_Y - 1) + (1/2) sum_Q (dim V - dim V^{G_Q}).
Rational ksir_multiplicity_cor18(const TameCover& cover, int irreducible);

// Multiplicity of rationally valued irreducible V in N_{G,X} (and its dual).
Rational prop19_multiplicity(const TameCover& cover, int irreducible);

// Multiplicity of rationally valued irreducible V in chi(G,X,O_X(D)).
Rational divisor_euler_multiplicity_cor111(const TameCover& cover,
                                           const EquivariantDivisorData& divisor,
                                           int irreducible);

// The sheaf O_X(D) as thm11 input: rank 1, degree = sum of orbit-expanded
// coefficients, fiber exponent n_Q mod e_Q at each branch orbit.
CoherentSheafData divisor_sheaf(const TameCover& cover, const EquivariantDivisorData& divisor);
long divisor_degree(const TameCover& cover, const EquivariantDivisorData& divisor);

// Both sides of sum_{d=0}^{c-1} d <chi^d, V> = (c/2)(dim V - dim V^C) for a
// primitive character chi of a cyclic group of order c.
struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};
IdentityCheck lemma110(const VirtualRep& v, int primitive_index);

// <chi^d, V> on a cyclic group of prime-power order l^r via fixed-space
// dimensions: (dim V^H - dim V^{H'}) / (l^{r-s-1}(l-1)) with |H| = l^s,
// |H'| = l^{s+1} and d = l^s * m, gcd(m, l) = 1.
Rational lemma112_multiplicity(const VirtualRep& v, long d);

}  // namespace equichar
