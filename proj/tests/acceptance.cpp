// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fail.

#include "equichar/etale.hpp"
#include "equichar/io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace equichar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail << what;
        }
    }
};

TameCover hyperelliptic() {
    CoverDescription d;
    d.g_Y = 0;
    for (int i = 0; i < 6; ++i) d.branches.push_back({"P" + std::to_string(i), 1, 1});
    return cover_validate(table_builtin("C2").table, d);
}

std::vector<GroupWithTable> builtin_pool() {
    std::vector<GroupWithTable> pool;
    for (const char* name : {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
                             "C12", "C2xC2", "C2xC4", "C3xC3", "S3", "D4", "D5", "D6", "A4",
                             "Q8"}) {
        pool.push_back(table_builtin(name));
    }
    return pool;
}

TameCover random_cover(std::mt19937& rng, const std::vector<GroupWithTable>& pool) {
    std::uniform_int_distribution<size_t> pick_group(0, pool.size() - 1);
    std::uniform_int_distribution<long> pick_gy(0, 3);
    std::uniform_int_distribution<int> pick_orbits(1, 8);
    for (;;) {
        const GroupWithTable& gt = pool[pick_group(rng)];
        int n = gt.group->order();
        CoverDescription d;
        d.g_Y = pick_gy(rng);
        int orbits = pick_orbits(rng);
        std::uniform_int_distribution<int> pick_gen(1, n - 1);
        for (int i = 0; i < orbits; ++i) {
            int g = pick_gen(rng);
            int e = gt.group->element_order(g);
            std::vector<long> units;
            for (long t = 1; t < e; ++t) {
                if (gcd_long(t, e) == 1) units.push_back(t);
            }
            long t = units[std::uniform_int_distribution<size_t>(0, units.size() - 1)(rng)];
            d.branches.push_back({"Q" + std::to_string(i), g, t});
        }
        try {
            return cover_validate(gt.table, d);
        } catch (const CoverValidationError&) {
            // parity or negative genus; resample
        }
    }
}

// Random sheaf whose degree satisfies the fiber congruence, so every
// integrality certificate passes by construction.
CoherentSheafData random_sheaf(std::mt19937& rng, const TameCover& cover) {
    CoherentSheafData s;
    s.rank = std::uniform_int_distribution<long>(1, 3)(rng);
    long n = cover.degree();
    long total = 0;
    for (const auto& q : cover.branches()) {
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) continue;  // default fiber
        std::vector<long> exps;
        for (long i = 0; i < s.rank; ++i) {
            long l = std::uniform_int_distribution<long>(0, q.e - 1)(rng);
            exps.push_back(l);
            total += (n / q.e) * l;
        }
        s.fibers[q.label] = exps;
    }
    for (const auto& q : cover.branches()) {
        if (s.fibers.count(q.label)) continue;
        // unlisted fibers are all-zero and contribute nothing
        (void)q;
    }
    s.degree = total + n * std::uniform_int_distribution<long>(-2, 2)(rng);
    return s;
}

EtaleSheafData random_etale(std::mt19937& rng, const TameCover& cover) {
    EtaleSheafData f;
    long n = cover.degree();
    for (long l : {2, 3, 5, 7, 11, 13}) {
        if (gcd_long(l, n) == 1 && l != cover.char_p()) {
            f.l = l;
            break;
        }
    }
    f.generic_dim = std::uniform_int_distribution<long>(0, 3)(rng);
    for (const auto& q : cover.branches()) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
        EtaleSheafData::BranchStalk stalk;
        int seeds = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < seeds; ++i) {
            // close a random exponent under the Frobenius twist mod e
            long m = std::uniform_int_distribution<long>(0, q.e - 1)(rng);
            long cur = m;
            do {
                stalk.exponents.push_back(cur);
                cur = mod_positive(cur * f.l, q.e);
            } while (cur != m);
        }
        stalk.alpha = q.e * std::uniform_int_distribution<long>(0, 2)(rng);
        f.branch_stalks[q.label] = std::move(stalk);
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        f.free_orbits.push_back({"free", std::uniform_int_distribution<long>(0, 3)(rng),
                                 std::uniform_int_distribution<long>(0, 2)(rng)});
    }
    return f;
}

std::vector<int> rational_irreducibles(const CharacterTable& table, bool include_trivial) {
    std::vector<int> out;
    for (int i = 0; i < table.size(); ++i) {
        if (!include_trivial && i == table.trivial_index()) continue;
        bool rational = true;
        for (const auto& v : table.irreducible(i).values) {
            if (!v.is_rational()) rational = false;
        }
        if (rational) out.push_back(i);
    }
    return out;
}

bool criterion1(std::string& detail) {
    auto start = Clock::now();
    Checker c;
    TameCover cover = hyperelliptic();
    auto table = cover.table();
    VirtualRep sgn = VirtualRep::basis(table, 1);
    c.require(differentials_cor17(cover).value == sgn.scaled(2), "H0(Omega) != 2[sgn]");
    c.require(euler_char_thm11(cover, CoherentSheafData::trivial()).value ==
                  VirtualRep::basis(table, 0) - sgn.scaled(2),
              "chi(O_X) != [triv] - 2[sgn]");
    double t = seconds_since(start);
    c.require(t < 1.0, "took too long");
    std::ostringstream msg;
    msg << "hyperelliptic fixture, " << t << "s";
    detail = c.ok ? msg.str() : c.detail.str();
    return c.ok;
}

bool criterion2(std::string& detail) {
    Checker c;
    TameCover cover = kummer_cover(3, {1, 1, 1});
    auto table = cover.table();
    // chi1 sends the chosen generator sigma to zeta_3
    c.require(table->irreducible(1).at_element(1) == Cyclotomic::root_of_unity(3, 1),
              "character convention drifted");
    c.require(differentials_cor17(cover).value == VirtualRep::basis(table, 1),
              "H0(Omega) != [chi]");
    c.require(nakajima_module(cover).value ==
                  VirtualRep::basis(table, 1) + VirtualRep::basis(table, 2).scaled(2),
              "N != [chi] + 2[chi^2]");
    detail = c.ok ? "degree-3 genus-1 fixture" : c.detail.str();
    return c.ok;
}

bool criterion3and4(std::string& detail3, std::string& detail4, bool& ok4) {
    auto start = Clock::now();
    Checker c3;
    Checker c4;
    std::mt19937 rng(20260823);
    auto pool = builtin_pool();
    int covers = 0;
    for (; covers < 220; ++covers) {
        TameCover cover = random_cover(rng, pool);
        auto table = cover.table();
        CoherentSheafData sheaf = random_sheaf(rng, cover);

        EngineResult a = euler_char_thm11(cover, sheaf);
        EngineResult b = multiplicities_cor13(cover, sheaf);
        EngineResult c = euler_char_cor14(cover, sheaf);
        c3.require(a.value == b.value && a.value == c.value, "thm11/cor13/cor14 disagree");
        c4.require(a.value.dim() ==
                       Rational((1 - cover.genus_total()) * sheaf.rank + sheaf.degree),
                   "coherent dimension oracle failed");

        EngineResult omega = differentials_cor17(cover);
        EngineResult nak = nakajima_module(cover);
        for (int i : rational_irreducibles(*table, false)) {
            c3.require(omega.value[i] == ksir_multiplicity_cor18(cover, i),
                       "cor17 vs cor18 disagree");
        }
        for (int i : rational_irreducibles(*table, true)) {
            c3.require(nak.value[i] == prop19_multiplicity(cover, i),
                       "prop19 vs direct pairing disagree");
        }

        EquivariantDivisorData dv;
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (const auto& q : cover.branches()) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) dv.entries[q.label] = coeff(rng);
        }
        dv.unramified_orbits["free"] = coeff(rng);
        EngineResult chi_d = euler_char_thm11(cover, divisor_sheaf(cover, dv));
        for (int i : rational_irreducibles(*table, true)) {
            c3.require(chi_d.value[i] == divisor_euler_multiplicity_cor111(cover, dv, i),
                       "cor111 vs thm11 disagree");
        }

        EtaleSheafData f = random_etale(rng, cover);
        EngineResult et = etale_euler_char_thm21(cover, f);
        Rational classical = Rational((2 - 2 * cover.genus_total()) * f.generic_dim);
        long n = cover.degree();
        for (const auto& q : cover.branches()) {
            auto it = f.branch_stalks.find(q.label);
            long alpha = it == f.branch_stalks.end() ? 0 : it->second.alpha;
            long dim = it == f.branch_stalks.end()
                           ? f.generic_dim
                           : static_cast<long>(it->second.exponents.size());
            classical -= (n / q.e) * (alpha + (f.generic_dim - dim));
        }
        for (const auto& fo : f.free_orbits) {
            classical -= n * (fo.alpha + (f.generic_dim - fo.stalk_dim));
        }
        c4.require(et.value.dim() == classical, "etale dimension oracle failed");
    }
    double t = seconds_since(start);
    c3.require(t < 60.0, "took too long");
    std::ostringstream msg;
    msg << covers << " randomized covers, " << t << "s";
    detail3 = c3.ok ? msg.str() : c3.detail.str();
    detail4 = c4.ok ? msg.str() : c4.detail.str();
    ok4 = c4.ok;
    return c3.ok;
}

bool criterion5(std::string& detail) {
    Checker c;
    // geometric sum: m (zeta - 1)^-1 = sum_{d=1}^{m-1} d zeta^d for zeta != 1
    for (long m = 2; m <= 30; ++m) {
        for (long k = 1; k < m; ++k) {
            Cyclotomic z = Cyclotomic::root_of_unity(m, k);
            Cyclotomic lhs = Cyclotomic(Rational(m)) / (z - Cyclotomic(1));
            Cyclotomic rhs;
            for (long d = 1; d < m; ++d) {
                rhs = rhs + Cyclotomic(Rational(d)) * Cyclotomic::root_of_unity(m, d * k);
            }
            c.require(lhs == rhs, "geometric sum identity failed");
        }
    }
    // weighted pairing sum on permutation modules of cyclic groups
    for (long order = 2; order <= 24; ++order) {
        auto table = CharacterTable::cyclic(static_cast<int>(order));
        for (long h = 1; h <= order; ++h) {
            if (order % h != 0) continue;
            // Ind from the subgroup of order h of the trivial character
            std::vector<Rational> mult(static_cast<size_t>(order), Rational(0));
            for (long j = 0; j < order; ++j) {
                if (j % h == 0) mult[static_cast<size_t>(j)] = 1;
            }
            VirtualRep v(table, mult);
            for (long k = 1; k < order; ++k) {
                if (gcd_long(k, order) != 1) continue;
                IdentityCheck id = lemma110(v, static_cast<int>(k));
                c.require(id.equal, "weighted pairing sum failed");
            }
        }
    }
    // fixed-space pairing formula against the direct multiplicity
    std::mt19937 rng(99);
    for (long l : {2L, 3L, 5L}) {
        for (long cpow = l; cpow <= 27; cpow *= l) {
            auto table = CharacterTable::cyclic(static_cast<int>(cpow));
            // rationally valued: multiplicity depends only on gcd(index, c)
            std::vector<Rational> mult;
            std::map<long, Rational> by_gcd;
            for (long j = 0; j < cpow; ++j) {
                long g = gcd_long(j == 0 ? cpow : j, cpow);
                if (!by_gcd.count(g)) {
                    by_gcd[g] = std::uniform_int_distribution<long>(-4, 4)(rng);
                }
                mult.push_back(by_gcd[g]);
            }
            VirtualRep v(table, mult);
            for (long d = 1; d < cpow; ++d) {
                c.require(lemma112_multiplicity(v, d) == v[static_cast<int>(d)],
                          "fixed-space pairing formula failed");
            }
        }
    }
    detail = c.ok ? "cyclotomic + cyclic pairing identity suites" : c.detail.str();
    return c.ok;
}

bool criterion6(std::string& detail) {
    Checker c;
    TameCover ram = hyperelliptic();
    EtaleSheafData f3 = EtaleSheafData::constant(3);
    EngineResult a = etale_euler_char_thm21(ram, f3);
    c.require(a.value == VirtualRep::basis(ram.table(), 0).scaled(2) -
                             VirtualRep::basis(ram.table(), 1).scaled(4),
              "ramified constant sheaf value wrong");
    c.require(multiplicities_cor23(ram, f3).expanded == a.value, "cor23 drifted (ramified)");

    CoverDescription d;
    d.g_Y = 2;
    TameCover unram = cover_validate(table_builtin("C2").table, d);
    EngineResult b = etale_euler_char_thm21(unram, f3);
    c.require(b.value == VirtualRep::regular(unram.table()).scaled(-2),
              "unramified constant sheaf value wrong");
    c.require(multiplicities_cor23(unram, f3).expanded == b.value, "cor23 drifted (unramified)");
    detail = c.ok ? "constant-sheaf fixtures" : c.detail.str();
    return c.ok;
}

bool criterion7(std::string& detail) {
    Checker c;
    std::mt19937 rng(7);
    auto pool = builtin_pool();
    for (int iter = 0; iter < 25; ++iter) {
        TameCover cover = random_cover(rng, pool);
        EtaleSheafData f = random_etale(rng, cover);  // orbit-consistent alphas
        c.require(wild_conductor_divisibility_cor24(cover, f).divisible,
                  "divisibility failed on consistent data");
    }
    TameCover hy = hyperelliptic();
    EtaleSheafData bad = EtaleSheafData::constant(3);
    bad.branch_stalks["P0"] = {{0}, 1};
    c.require(!wild_conductor_divisibility_cor24(hy, bad).divisible,
              "alpha=1 counter-fixture not flagged");

    CoverDescription d;
    d.g_Y = 0;
    for (int i = 0; i < 4; ++i) d.branches.push_back({"P" + std::to_string(i), 1, 1});
    TameCover c3bad = cover_validate(table_builtin("C3").table, d);
    c.require(!c3bad.warnings().empty(), "character congruence not flagged");
    c.require(!nakajima_module(c3bad).all_ok(), "non-integral Nakajima class not flagged");
    detail = c.ok ? "conductor + congruence certificates" : c.detail.str();
    return c.ok;
}

bool criterion8(std::string& detail) {
    auto start = Clock::now();
    Checker c;
    std::mt19937 rng(4242);
    long cases = 0;
    auto pool = builtin_pool();
    std::uniform_int_distribution<long> coeff(-3, 3);

    for (int iter = 0; iter < 400; ++iter) {
        const GroupWithTable& gt = pool[iter % pool.size()];
        int n = gt.group->order();
        auto sub = cyclic_subgroup(gt.group, std::uniform_int_distribution<int>(0, n - 1)(rng));
        auto tsub = CharacterTable::cyclic(sub.order);
        std::vector<Rational> xm, ym;
        for (int i = 0; i < tsub->size(); ++i) xm.emplace_back(coeff(rng));
        for (int i = 0; i < gt.table->size(); ++i) ym.emplace_back(coeff(rng));
        VirtualRep x(tsub, xm);
        VirtualRep y(gt.table, ym);
        c.require(vr_pair(vr_induce(x, sub, gt.table), y) == vr_pair(x, vr_restrict(y, sub)),
                  "reciprocity failed");
        ++cases;

        // inducing a genuine character stays genuine
        std::vector<Rational> gm;
        for (int i = 0; i < tsub->size(); ++i) {
            gm.emplace_back(std::uniform_int_distribution<long>(0, 2)(rng));
        }
        c.require(vr_induce(VirtualRep(tsub, gm), sub, gt.table).is_nonnegative_integral(),
                  "induced character has a negative multiplicity");
        ++cases;
    }

    // tampered table must be rejected
    {
        auto s3 = table_builtin("S3");
        std::vector<std::string> labels{"a", "b", "c"};
        std::vector<ClassFunction> rows;
        for (int i = 0; i < 3; ++i) rows.push_back(s3.table->irreducible(i));
        rows[2].values[2] = Cyclotomic(1);
        bool rejected = false;
        try {
            CharacterTable broken(s3.group, labels, rows);
        } catch (const TableValidationError&) {
            rejected = true;
        }
        c.require(rejected, "tampered table accepted");
        ++cases;
    }

    // generator convention: replacing sigma_Q by sigma_Q^u with t -> t*u is
    // the same branch datum, so every engine result is unchanged
    for (int iter = 0; iter < 150; ++iter) {
        TameCover cover = random_cover(rng, pool);
        CoverDescription alt;
        alt.g_Y = cover.genus_base();
        for (const auto& q : cover.branches()) {
            long u = 0;
            do {
                u = std::uniform_int_distribution<long>(1, q.e - 1)(rng);
            } while (gcd_long(u, q.e) != 1);
            alt.branches.push_back({q.label, cover.table()->group()->power(q.generator, u),
                                    mod_positive(q.t * u, q.e)});
        }
        TameCover cover2 = cover_validate(cover.table(), alt);
        CoherentSheafData sheaf = random_sheaf(rng, cover);
        c.require(euler_char_thm11(cover, sheaf).value == euler_char_thm11(cover2, sheaf).value,
                  "generator convention not metamorphic (thm11)");
        c.require(nakajima_module(cover).value == nakajima_module(cover2).value,
                  "generator convention not metamorphic (nakajima)");
        cases += 2;
    }

    double t = seconds_since(start);
    c.require(cases >= 1000, "not enough randomized cases");
    c.require(t < 30.0, "took too long");
    std::ostringstream msg;
    msg << cases << " randomized cases, " << t << "s";
    detail = c.ok ? msg.str() : c.detail.str();
    return c.ok;
}

}  // namespace

int main() {
    bool all_ok = true;
    auto report = [&](int number, const std::string& name, bool ok, const std::string& detail) {
        std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL")
                  << " — " << detail << "\n";
        all_ok = all_ok && ok;
    };

    std::string detail;
    report(1, "hyperelliptic fixture", criterion1(detail), detail);
    report(2, "degree-3 fixture", criterion2(detail), detail);
    std::string detail3, detail4;
    bool ok4 = false;
    bool ok3 = criterion3and4(detail3, detail4, ok4);
    report(3, "cross-formula suite", ok3, detail3);
    report(4, "dimension oracles", ok4, detail4);
    report(5, "lemma identity suites", criterion5(detail), detail);
    report(6, "etale fixtures", criterion6(detail), detail);
    report(7, "divisibility certificates", criterion7(detail), detail);
    report(8, "representation-theory properties", criterion8(detail), detail);

    return all_ok ? 0 : 1;
}
