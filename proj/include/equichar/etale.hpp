#pragma once

#include "equichar/zariski.hpp"

namespace equichar {

// Constructible F_l-sheaf data for the equivariant Grothendieck-Ogg-Shafarevich
// formula. Branch stalks are semisimple G_Q-classes given as chi_Q-exponent
// multisets ([F_Q] = sum_j chi_Q^{m_j}) plus the wild conductor alpha at the
// representative; orbits not listed default to the trivial stalk action of
// generic dimension with alpha = 0. Free orbits (e = 1) only matter where the
// stalk drops or alpha is nonzero, so just those are listed.
struct EtaleSheafData {
    long l = 2;  // coefficient characteristic, prime, gcd(l, |G| char_p) = 1
    long generic_dim = 1;

    struct BranchStalk {
        std::vector<long> exponents;
        long alpha = 0;
    };
    std::map<std::string, BranchStalk> branch_stalks;

    struct FreeOrbit {
        std::string label;
        long stalk_dim = 0;
        long alpha = 0;
    };
    std::vector<FreeOrbit> free_orbits;

    static EtaleSheafData constant(long l, long dim = 1) {
        EtaleSheafData f;
        f.l = l;
        f.generic_dim = dim;
        return f;
    }
};

// chi_et(G,X,F) = ((2-2g_Y) dim F_eta - alpha(F)/n
//                  + sum_P (e_P/n)(dim F_P - dim F_eta))[F_l[G]]
//                 - sum_P (e_P/n)[Ind(F_P tensor I_P)]
// with I_P the augmentation class [reg] - [triv] of G_P. The point sums
// collapse orbitwise: each branch orbit contributes its Ind term once; free
// orbits only touch the scalar part.
EngineResult etale_euler_char_thm21(const TameCover& cover, const EtaleSheafData& sheaf);

// Total wild conductor alpha(F) = sum_Q (n/e_Q) alpha_Q + sum_free n * alpha,
// which is divisible by n for genuinely equivariant data.
struct ConductorReport {
    long total = 0;
    bool divisible = false;
};
ConductorReport wild_conductor_divisibility_cor24(const TameCover& cover,
                                                 const EtaleSheafData& sheaf);

// Unramified covers: chi_et(G,X,F) = (1/n) chi_et(X,F) [F_l[G]] where
// chi_et(X,F) is the classical Grothendieck-Ogg-Shafarevich total. Errors on a
// ramified cover; divisibility of the total by n is a certificate.
EngineResult etale_unramified_shortcut(const TameCover& cover, const EtaleSheafData& sheaf);

// Partition of the irreducibles under the value-wise Galois twist chi -> chi^(l)
// (zeta -> zeta^l on all values). Orbits parametrize the irreducible
// F_l-representations when gcd(l, |G|) = 1; s = orbit size.
struct FrobeniusOrbitDecomposition {
    std::shared_ptr<const CharacterTable> table;
    long l = 2;
    std::vector<std::vector<int>> orbits;

    int orbit_of(int irreducible) const;
    // Sum of the ordinary irreducibles in the orbit.
    VirtualRep orbit_class(int orbit) const;
};
FrobeniusOrbitDecomposition frobenius_orbits(std::shared_ptr<const CharacterTable> table, long l);

// Corollary 2.3 shape of the same class: scalar [F_l[G]] minus, per
// F_l-irreducible orbit V, (1/s_V) sum_Q m_{Q,F,dual V} [V] with m the
// multiplicity of the trivial G_Q-representation in F_Q tensor I_Q tensor
// Res(dual V). `expanded` is the class back in the ordinary basis.
struct EtaleMultiplicities {
    FrobeniusOrbitDecomposition orbits;
    Rational scalar;
    std::vector<Rational> orbit_mult;  // subtracted coefficient per orbit
    VirtualRep expanded;
};
EtaleMultiplicities multiplicities_cor23(const TameCover& cover, const EtaleSheafData& sheaf);

}  // namespace equichar
