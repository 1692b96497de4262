#include "equichar/etale.hpp"

#include <set>

namespace equichar {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

long chi_index(const BranchOrbit& q, long x) {
    return mod_positive(q.t * x, q.e);
}

void check_etale(const TameCover& cover, const EtaleSheafData& f) {
    long n = cover.degree();
    if (!is_prime(f.l)) {
        throw std::invalid_argument("coefficient characteristic l = " + std::to_string(f.l) +
                                    " is not prime");
    }
    if (f.l == cover.char_p()) {
        throw std::invalid_argument("coefficient characteristic must differ from char p");
    }
    if (gcd_long(f.l, n) != 1) {
        throw std::invalid_argument("l = " + std::to_string(f.l) +
                                    " must be coprime to the group order " + std::to_string(n));
    }
    if (f.generic_dim < 0) throw std::invalid_argument("generic dimension must be nonnegative");
    for (const auto& [label, stalk] : f.branch_stalks) {
        const BranchOrbit* q = cover.branch_by_label(label);
        if (q == nullptr) {
            throw std::invalid_argument("stalk entry '" + label +
                                        "' does not name a branch orbit of the cover");
        }
        if (stalk.alpha < 0) {
            throw std::invalid_argument("negative wild conductor at '" + label + "'");
        }
        // an F_l-representation of the decomposition group has a Frobenius
        // stable character: the exponent multiset must survive m -> l*m mod e
        std::map<long, long> count, twisted;
        for (long m : stalk.exponents) {
            ++count[mod_positive(m, q->e)];
            ++twisted[mod_positive(f.l * m, q->e)];
        }
        if (count != twisted) {
            throw std::invalid_argument("stalk at '" + label +
                                        "' is not fixed by the Frobenius twist, so it is not an "
                                        "F_l-representation of the decomposition group");
        }
    }
    std::set<std::string> seen;
    for (const auto& fo : f.free_orbits) {
        if (!seen.insert(fo.label).second) {
            throw std::invalid_argument("duplicate free orbit label '" + fo.label + "'");
        }
        if (cover.branch_by_label(fo.label) != nullptr) {
            throw std::invalid_argument("free orbit '" + fo.label +
                                        "' collides with a branch orbit");
        }
        if (fo.stalk_dim < 0) {
            throw std::invalid_argument("negative stalk dimension at '" + fo.label + "'");
        }
        if (fo.alpha < 0) {
            throw std::invalid_argument("negative wild conductor at '" + fo.label + "'");
        }
    }
}

// [F_Q] on the canonical cyclic table of the decomposition group; unlisted
// orbits carry the trivial action of generic dimension.
VirtualRep stalk_class(const EtaleSheafData& f, const BranchOrbit& q) {
    auto te = CharacterTable::cyclic(q.e);
    std::vector<Rational> m(static_cast<size_t>(q.e), Rational(0));
    auto it = f.branch_stalks.find(q.label);
    if (it == f.branch_stalks.end()) {
        m[0] = f.generic_dim;
    } else {
        for (long x : it->second.exponents) m[static_cast<size_t>(chi_index(q, x))] += 1;
    }
    return VirtualRep(te, std::move(m));
}

long stalk_dim(const EtaleSheafData& f, const BranchOrbit& q) {
    auto it = f.branch_stalks.find(q.label);
    return it == f.branch_stalks.end() ? f.generic_dim
                                       : static_cast<long>(it->second.exponents.size());
}

// Coefficient of [F_l[G]] shared by the two formula shapes.
Rational scalar_part(const TameCover& cover, const EtaleSheafData& f, long alpha_total) {
    Rational scalar = Rational((2 - 2 * cover.genus_base()) * f.generic_dim) -
                      Rational(alpha_total, cover.degree());
    for (const auto& q : cover.branches()) scalar += stalk_dim(f, q) - f.generic_dim;
    for (const auto& fo : f.free_orbits) scalar += fo.stalk_dim - f.generic_dim;
    return scalar;
}

Certificate conductor_certificate(const ConductorReport& report) {
    if (report.divisible) return {"wild-conductor-divisible", true, ""};
    return {"wild-conductor-divisible", false,
            "not realizable: total wild conductor " + std::to_string(report.total) +
                " is not divisible by the group order"};
}

}  // namespace

ConductorReport wild_conductor_divisibility_cor24(const TameCover& cover,
                                                  const EtaleSheafData& sheaf) {
    check_etale(cover, sheaf);
    long n = cover.degree();
    ConductorReport report;
    for (const auto& q : cover.branches()) {
        auto it = sheaf.branch_stalks.find(q.label);
        if (it != sheaf.branch_stalks.end()) report.total += (n / q.e) * it->second.alpha;
    }
    for (const auto& fo : sheaf.free_orbits) report.total += n * fo.alpha;
    report.divisible = report.total % n == 0;
    return report;
}

EngineResult etale_euler_char_thm21(const TameCover& cover, const EtaleSheafData& sheaf) {
    check_etale(cover, sheaf);
    const auto& table = cover.table();
    ConductorReport conductor = wild_conductor_divisibility_cor24(cover, sheaf);
    VirtualRep acc =
        VirtualRep::regular(table).scaled(scalar_part(cover, sheaf, conductor.total));
    for (const auto& q : cover.branches()) {
        auto te = CharacterTable::cyclic(q.e);
        VirtualRep aug = VirtualRep::regular(te) - VirtualRep::basis(te, 0);
        acc = acc - vr_induce(vr_tensor(stalk_class(sheaf, q), aug), cover.subgroup(q), table);
    }
    EngineResult r{acc, {}};
    bool integral = acc.is_integral();
    r.certificates.push_back({"euler-characteristic-integral", integral,
                              integral ? ""
                                       : "not realizable: chi_et(G,X,F) is non-integral: " +
                                             acc.str()});
    r.certificates.push_back(conductor_certificate(conductor));
    return r;
}

EngineResult etale_unramified_shortcut(const TameCover& cover, const EtaleSheafData& sheaf) {
    check_etale(cover, sheaf);
    if (!cover.branches().empty()) {
        throw std::invalid_argument("the unramified shortcut needs a cover with no branch orbits");
    }
    long n = cover.degree();
    long total = (2 - 2 * cover.genus_total()) * sheaf.generic_dim;
    for (const auto& fo : sheaf.free_orbits) {
        total -= n * (fo.alpha + (sheaf.generic_dim - fo.stalk_dim));
    }
    EngineResult r{VirtualRep::regular(cover.table()).scaled(Rational(total, n)), {}};
    bool div = total % n == 0;
    r.certificates.push_back({"classical-total-divisible", div,
                              div ? ""
                                  : "not realizable: chi_et(X,F) = " + std::to_string(total) +
                                        " is not divisible by " + std::to_string(n)});
    ConductorReport conductor = wild_conductor_divisibility_cor24(cover, sheaf);
    r.certificates.push_back(conductor_certificate(conductor));
    return r;
}

int FrobeniusOrbitDecomposition::orbit_of(int irreducible) const {
    for (size_t o = 0; o < orbits.size(); ++o) {
        for (int i : orbits[o]) {
            if (i == irreducible) return static_cast<int>(o);
        }
    }
    return -1;
}

VirtualRep FrobeniusOrbitDecomposition::orbit_class(int orbit) const {
    VirtualRep acc(table);
    for (int i : orbits[static_cast<size_t>(orbit)]) {
        acc = acc + VirtualRep::basis(table, i);
    }
    return acc;
}

FrobeniusOrbitDecomposition frobenius_orbits(std::shared_ptr<const CharacterTable> table,
                                             long l) {
    if (gcd_long(l, table->group()->order()) != 1) {
        throw std::invalid_argument("l must be coprime to the group order");
    }
    FrobeniusOrbitDecomposition out;
    out.table = table;
    out.l = l;
    std::vector<bool> seen(static_cast<size_t>(table->size()), false);
    for (int i = 0; i < table->size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> orbit;
        int cur = i;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            orbit.push_back(cur);
            ClassFunction twisted = table->irreducible(cur);
            for (auto& v : twisted.values) v = v.galois(l);
            cur = table->find(twisted);
            if (cur < 0) throw std::logic_error("galois twist left the character table");
        }
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

EtaleMultiplicities multiplicities_cor23(const TameCover& cover, const EtaleSheafData& sheaf) {
    check_etale(cover, sheaf);
    const auto& table = cover.table();
    EtaleMultiplicities out{frobenius_orbits(table, sheaf.l),
                            scalar_part(cover, sheaf, wild_conductor_divisibility_cor24(cover, sheaf).total),
                            {},
                            VirtualRep(table)};
    VirtualRep acc = VirtualRep::regular(table).scaled(out.scalar);
    for (size_t o = 0; o < out.orbits.orbits.size(); ++o) {
        VirtualRep cls = out.orbits.orbit_class(static_cast<int>(o));
        VirtualRep dual = vr_dual(cls);
        Rational m_sum = 0;
        for (const auto& q : cover.branches()) {
            auto te = CharacterTable::cyclic(q.e);
            VirtualRep aug = VirtualRep::regular(te) - VirtualRep::basis(te, 0);
            VirtualRep prod = vr_tensor(vr_tensor(stalk_class(sheaf, q), aug),
                                        vr_restrict(dual, cover.subgroup(q)));
            m_sum += prod[0];
        }
        Rational coeff = m_sum / Rational(static_cast<long>(out.orbits.orbits[o].size()));
        out.orbit_mult.push_back(coeff);
        acc = acc - cls.scaled(coeff);
    }
    out.expanded = acc;
    return out;
}

}  // namespace equichar
