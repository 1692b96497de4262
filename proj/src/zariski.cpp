#include "equichar/zariski.hpp"

#include <sstream>

namespace equichar {

namespace {

// chi_Q^x as an index into the canonical cyclic table of order e, where the
// cotangent character is sigma_Q -> zeta_e^t.
long chi_index(const BranchOrbit& q, long x) {
    return mod_positive(q.t * x, q.e);
}

Certificate integrality_certificate(const std::string& name, const VirtualRep& v,
                                    const std::string& what) {
    if (v.is_integral()) return {name, true, ""};
    return {name, false, "not realizable: " + what + " is non-integral: " + v.str()};
}

void check_sheaf(const TameCover& cover, const CoherentSheafData& sheaf) {
    if (sheaf.rank < 1) throw std::invalid_argument("sheaf rank must be positive");
    for (const auto& [label, exps] : sheaf.fibers) {
        const BranchOrbit* q = cover.branch_by_label(label);
        if (q == nullptr) {
            throw std::invalid_argument("sheaf fiber entry '" + label +
                                        "' does not name a branch orbit of the cover");
        }
        if (static_cast<long>(exps.size()) != sheaf.rank) {
            throw std::invalid_argument("sheaf fiber at '" + label + "' lists " +
                                        std::to_string(exps.size()) + " exponents, expected rank " +
                                        std::to_string(sheaf.rank));
        }
    }
}

// deg(E) = sum_Q (n/e_Q) sum_i l_{Q,i} mod n, the fiber/degree compatibility
// a genuinely equivariant sheaf satisfies.
Certificate degree_congruence_certificate(const TameCover& cover, const CoherentSheafData& sheaf) {
    long n = cover.degree();
    long total = 0;
    for (const auto& q : cover.branches()) {
        for (long l : sheaf.exponents_at(q)) total += (n / q.e) * l;
    }
    if (mod_positive(sheaf.degree - total, n) == 0) return {"degree-congruence", true, ""};
    std::ostringstream msg;
    msg << "not realizable: deg(E) = " << sheaf.degree << " but the fiber exponents force deg(E) = "
        << mod_positive(total, n) << " mod " << n;
    return {"degree-congruence", false, msg.str()};
}

void check_rationally_valued_irreducible(const TameCover& cover, int irreducible,
                                         bool allow_trivial) {
    const auto& table = *cover.table();
    if (irreducible < 0 || irreducible >= table.size()) {
        throw std::invalid_argument("irreducible index out of range");
    }
    if (!allow_trivial && irreducible == table.trivial_index()) {
        throw std::invalid_argument("the trivial representation is excluded here");
    }
    for (const auto& v : table.irreducible(irreducible).values) {
        if (!v.is_rational()) {
            throw std::invalid_argument("irreducible " + table.label(irreducible) +
                                        " is not rationally valued");
        }
    }
}

// dim V^{G_Q} = multiplicity of the trivial character in Res_{G_Q}(V).
Rational fixed_dim(const TameCover& cover, int irreducible, const BranchOrbit& q) {
    VirtualRep res = vr_restrict(VirtualRep::basis(cover.table(), irreducible), cover.subgroup(q));
    return res[0];
}

}  // namespace

std::vector<long> CoherentSheafData::exponents_at(const BranchOrbit& q) const {
    std::vector<long> out;
    auto it = fibers.find(q.label);
    if (it == fibers.end()) {
        out.assign(static_cast<size_t>(rank), 0);
    } else {
        for (long l : it->second) out.push_back(mod_positive(l, q.e));
    }
    return out;
}

EngineResult euler_char_thm11(const TameCover& cover, const CoherentSheafData& sheaf) {
    check_sheaf(cover, sheaf);
    const auto& table = cover.table();
    long n = cover.degree();
    VirtualRep acc = VirtualRep::regular(table).scaled(
        Rational(n * (1 - cover.genus_base()) * sheaf.rank + sheaf.degree));
    for (const auto& q : cover.branches()) {
        auto sub = cover.subgroup(q);
        auto te = CharacterTable::cyclic(q.e);
        std::vector<long> ls = sheaf.exponents_at(q);
        // sum_{d} d * [E(Q) tensor chi_Q^d] on the decomposition group
        std::vector<Rational> inner(static_cast<size_t>(q.e), Rational(0));
        for (long d = 1; d < q.e; ++d) {
            for (long l : ls) inner[static_cast<size_t>(chi_index(q, d - l))] += d;
        }
        VirtualRep local(te, std::move(inner));
        acc = acc - vr_induce(local, sub, table).scaled(Rational(cover.point_count(q)));
    }
    VirtualRep chi = acc.scaled(Rational(1, n));
    EngineResult r{chi, {}};
    r.certificates.push_back(integrality_certificate("euler-characteristic-integral", chi,
                                                     "chi(G,X,E) from the main formula"));
    r.certificates.push_back(degree_congruence_certificate(cover, sheaf));
    return r;
}

EngineResult multiplicities_cor13(const TameCover& cover, const CoherentSheafData& sheaf) {
    check_sheaf(cover, sheaf);
    const auto& table = cover.table();
    long n = cover.degree();
    Rational scalar = Rational(sheaf.degree, n) + Rational((1 - cover.genus_base()) * sheaf.rank);
    std::vector<Rational> coeffs;
    for (int i = 0; i < table->size(); ++i) coeffs.push_back(scalar * table->degree(i));
    for (const auto& q : cover.branches()) {
        auto sub = cover.subgroup(q);
        auto te = CharacterTable::cyclic(q.e);
        // [E(Q)] = sum_i chi_Q^{-l_i}
        VirtualRep fiber(te);
        {
            std::vector<Rational> f(static_cast<size_t>(q.e), Rational(0));
            for (long l : sheaf.exponents_at(q)) f[static_cast<size_t>(chi_index(q, -l))] += 1;
            fiber = VirtualRep(te, std::move(f));
        }
        for (int i = 0; i < table->size(); ++i) {
            VirtualRep res_dual =
                vr_restrict(vr_dual(VirtualRep::basis(table, i)), sub);
            VirtualRep prod = vr_tensor(fiber, res_dual);
            for (long d = 1; d < q.e; ++d) {  // d = e_Q has weight zero
                Rational weight = Rational(1) - Rational(d, q.e);
                coeffs[static_cast<size_t>(i)] -=
                    weight * prod[static_cast<int>(chi_index(q, d))];
            }
        }
    }
    VirtualRep chi(table, std::move(coeffs));
    EngineResult r{chi, {}};
    r.certificates.push_back(integrality_certificate("euler-characteristic-integral", chi,
                                                     "chi(G,X,E) from the multiplicity formula"));
    return r;
}

EngineResult nakajima_module(const TameCover& cover) {
    const auto& table = cover.table();
    VirtualRep acc(table);
    for (const auto& q : cover.branches()) {
        auto sub = cover.subgroup(q);
        auto te = CharacterTable::cyclic(q.e);
        std::vector<Rational> inner(static_cast<size_t>(q.e), Rational(0));
        for (long d = 1; d < q.e; ++d) inner[static_cast<size_t>(chi_index(q, d))] += d;
        acc = acc + vr_induce(VirtualRep(te, std::move(inner)), sub, table)
                        .scaled(Rational(1, q.e));
    }
    EngineResult r{acc, {}};
    r.certificates.push_back(
        integrality_certificate("nakajima-integral", acc, "the Nakajima module class"));
    bool nonneg = true;
    for (const auto& m : acc.mult()) {
        if (m < 0) nonneg = false;
    }
    r.certificates.push_back({"nakajima-nonnegative", nonneg,
                              nonneg ? "" : "not realizable: Nakajima class has negative part: " +
                                                acc.str()});
    return r;
}

EngineResult euler_char_cor14(const TameCover& cover, const CoherentSheafData& sheaf) {
    check_sheaf(cover, sheaf);
    const auto& table = cover.table();
    long n = cover.degree();
    EngineResult nak = nakajima_module(cover);
    VirtualRep partial = nak.value.scaled(Rational(-sheaf.rank));
    for (const auto& q : cover.branches()) {
        auto sub = cover.subgroup(q);
        auto te = CharacterTable::cyclic(q.e);
        std::vector<Rational> inner(static_cast<size_t>(q.e), Rational(0));
        for (long l : sheaf.exponents_at(q)) {
            for (long d = 1; d <= l; ++d) inner[static_cast<size_t>(chi_index(q, -d))] += 1;
        }
        partial = partial + vr_induce(VirtualRep(te, std::move(inner)), sub, table);
    }
    // Normalize: the congruence holds mod Z[k[G]]; the constant is pinned by
    // the Riemann-Roch dimension of chi(G,X,E).
    Rational target = Rational((1 - cover.genus_total()) * sheaf.rank + sheaf.degree);
    Rational c = (target - partial.dim()) / Rational(n);
    VirtualRep chi = partial + VirtualRep::regular(table).scaled(c);
    EngineResult r{chi, {}};
    bool c_ok = is_integer(c);
    r.certificates.push_back({"normalization-integral", c_ok,
                              c_ok ? ""
                                   : "not realizable: congruence normalization constant " +
                                         rational_to_string(c) + " is not an integer"});
    for (auto& cert : nak.certificates) r.certificates.push_back(std::move(cert));
    return r;
}

EngineResult differentials_cor17(const TameCover& cover) {
    const auto& table = cover.table();
    EngineResult nak = nakajima_module(cover);
    VirtualRep h0 = VirtualRep::basis(table, table->trivial_index()) +
                    VirtualRep::regular(table).scaled(Rational(cover.genus_base() - 1)) +
                    vr_dual(nak.value);
    EngineResult r{h0, {}};
    bool genuine = h0.is_nonnegative_integral();
    r.certificates.push_back(
        {"h0-omega-genuine", genuine,
         genuine ? ""
                 : "not realizable: [H0(Omega)] is not a genuine representation: " + h0.str()});
    bool dim_ok = h0.dim() == cover.genus_total();
    r.certificates.push_back({"h0-omega-dimension", dim_ok,
                              dim_ok ? ""
                                     : "dim H0(Omega) = " + rational_to_string(h0.dim()) +
                                           " differs from g_X = " +
                                           std::to_string(cover.genus_total())});
    for (auto& cert : nak.certificates) r.certificates.push_back(std::move(cert));
    return r;
}

Rational ksir_multiplicity_cor18(const TameCover& cover, int irreducible) {
    check_rationally_valued_irreducible(cover, irreducible, /*allow_trivial=*/false);
    const auto& table = *cover.table();
    Rational dim_v = table.degree(irreducible);
    Rational acc = dim_v * Rational(cover.genus_base() - 1);
    for (const auto& q : cover.branches()) {
        acc += (dim_v - fixed_dim(cover, irreducible, q)) / 2;
    }
    return acc;
}

Rational prop19_multiplicity(const TameCover& cover, int irreducible) {
    check_rationally_valued_irreducible(cover, irreducible, /*allow_trivial=*/true);
    Rational dim_v = cover.table()->degree(irreducible);
    Rational acc = 0;
    for (const auto& q : cover.branches()) {
        acc += (dim_v - fixed_dim(cover, irreducible, q)) / 2;
    }
    return acc;
}

long divisor_degree(const TameCover& cover, const EquivariantDivisorData& divisor) {
    long n = cover.degree();
    long deg = 0;
    for (const auto& [label, nq] : divisor.entries) {
        const BranchOrbit* q = cover.branch_by_label(label);
        if (q == nullptr) {
            throw std::invalid_argument("divisor entry '" + label +
                                        "' does not name a branch orbit");
        }
        deg += (n / q->e) * nq;
    }
    for (const auto& [label, nq] : divisor.unramified_orbits) {
        if (cover.branch_by_label(label) != nullptr) {
            throw std::invalid_argument("unramified divisor orbit '" + label +
                                        "' collides with a branch orbit");
        }
        deg += n * nq;
    }
    return deg;
}

CoherentSheafData divisor_sheaf(const TameCover& cover, const EquivariantDivisorData& divisor) {
    CoherentSheafData sheaf;
    sheaf.rank = 1;
    sheaf.degree = divisor_degree(cover, divisor);
    for (const auto& q : cover.branches()) {
        auto it = divisor.entries.find(q.label);
        long nq = it == divisor.entries.end() ? 0 : it->second;
        sheaf.fibers[q.label] = {mod_positive(nq, q.e)};
    }
    return sheaf;
}

Rational divisor_euler_multiplicity_cor111(const TameCover& cover,
                                           const EquivariantDivisorData& divisor,
                                           int irreducible) {
    check_rationally_valued_irreducible(cover, irreducible, /*allow_trivial=*/true);
    divisor_degree(cover, divisor);  // validates the orbit labels
    const auto& table = cover.table();
    Rational dim_v = table->degree(irreducible);
    Rational acc = dim_v * Rational(1 - cover.genus_base());
    for (const auto& q : cover.branches()) {
        auto it = divisor.entries.find(q.label);
        long nq = it == divisor.entries.end() ? 0 : it->second;
        long l = mod_positive(nq, q.e);
        long m = (nq - l) / q.e;
        VirtualRep res = vr_restrict(VirtualRep::basis(table, irreducible), cover.subgroup(q));
        Rational fix = res[0];
        Rational tail = 0;
        for (long d = 1; d <= l; ++d) tail += res[static_cast<int>(chi_index(q, -d))];
        acc += dim_v * Rational(m) - (dim_v - fix) / 2 + tail;
    }
    for (const auto& [label, nq] : divisor.unramified_orbits) {
        (void)label;
        acc += dim_v * Rational(nq);
    }
    return acc;
}

IdentityCheck lemma110(const VirtualRep& v, int primitive_index) {
    long c = v.table()->group()->order();
    if (!v.table()->group()->is_abelian() ||
        v.table()->group()->element_order(c > 1 ? 1 : 0) != c) {
        throw std::invalid_argument("lemma110 expects the canonical cyclic table");
    }
    if (gcd_long(mod_positive(primitive_index, c) == 0 ? c : mod_positive(primitive_index, c),
                 c) != 1) {
        throw std::invalid_argument("lemma110: character index is not primitive");
    }
    if (!v.is_rationally_valued()) {
        throw std::invalid_argument("lemma110 requires a rationally valued class");
    }
    IdentityCheck out;
    out.lhs = 0;
    for (long d = 0; d < c; ++d) {
        out.lhs += Rational(d) * v[static_cast<int>(mod_positive(primitive_index * d, c))];
    }
    out.rhs = Rational(c) * (v.dim() - v[0]) / 2;
    out.equal = out.lhs == out.rhs;
    return out;
}

Rational lemma112_multiplicity(const VirtualRep& v, long d) {
    long c = v.table()->group()->order();
    long l = 0;
    {
        long rest = c;
        for (long p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                l = p;
                break;
            }
        }
        if (l == 0) l = rest;
        long power = c;
        while (power % l == 0) power /= l;
        if (power != 1 || c < 2) {
            throw std::invalid_argument("lemma112 requires a cyclic group of prime power order");
        }
    }
    if (!v.is_rationally_valued()) {
        throw std::invalid_argument("lemma112 requires a rationally valued class");
    }
    d = mod_positive(d, c);
    if (d == 0) throw std::invalid_argument("lemma112: d must be nonzero mod the group order");
    long s = 0, dd = d;
    while (dd % l == 0) {
        dd /= l;
        ++s;
    }
    // dim of the fixed space of the subgroup of order h, via the character.
    ClassFunction chi = v.character();
    auto fixed = [&](long h) {
        Cyclotomic acc;
        for (long k = 0; k < h; ++k) {
            acc = acc + chi.values[static_cast<size_t>((c / h) * k)];
        }
        return (acc * Cyclotomic(Rational(1, h))).to_rational();
    };
    long h = 1;
    for (long i = 0; i < s; ++i) h *= l;
    long denom = (c / (h * l)) * (l - 1);  // l^{r-s-1}(l-1)
    return (fixed(h) - fixed(h * l)) / Rational(denom);
}

}  // namespace equichar
