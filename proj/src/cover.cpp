#include "equichar/cover.hpp"

#include <set>
#include <sstream>

namespace equichar {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

std::string cover_error_name(CoverError e) {
    switch (e) {
        case CoverError::CharacteristicDividesOrder: return "characteristic-divides-order";
        case CoverError::BadCharacteristic: return "bad-characteristic";
        case CoverError::GeneratorOutOfRange: return "generator-out-of-range";
        case CoverError::RamificationIndexOne: return "ramification-index-one";
        case CoverError::ExponentNotCoprime: return "exponent-not-coprime";
        case CoverError::DuplicateLabel: return "duplicate-label";
        case CoverError::HurwitzParity: return "hurwitz-parity";
        case CoverError::HurwitzNegative: return "hurwitz-negative";
    }
    return "unknown";
}

const BranchOrbit* TameCover::branch_by_label(const std::string& label) const {
    for (const auto& b : branches_) {
        if (b.label == label) return &b;
    }
    return nullptr;
}

CyclicSubgroup TameCover::subgroup(const BranchOrbit& q) const {
    return cyclic_subgroup(group(), q.generator);
}

TameCover cover_validate(std::shared_ptr<const CharacterTable> table,
                         const CoverDescription& raw) {
    const FiniteGroup& g = *table->group();
    long n = g.order();

    if (raw.char_p != 0 && !is_prime(raw.char_p)) {
        throw CoverValidationError(CoverError::BadCharacteristic,
                                   "characteristic must be 0 or a prime, got " +
                                       std::to_string(raw.char_p));
    }
    if (raw.char_p != 0 && n % raw.char_p == 0) {
        throw CoverValidationError(CoverError::CharacteristicDividesOrder,
                                   "characteristic " + std::to_string(raw.char_p) +
                                       " divides the group order " + std::to_string(n));
    }
    if (raw.g_Y < 0) {
        throw CoverValidationError(CoverError::HurwitzNegative, "base genus must be nonnegative");
    }

    TameCover cover;
    cover.table_ = std::move(table);
    cover.char_p_ = raw.char_p;
    cover.g_Y_ = raw.g_Y;

    std::set<std::string> labels;
    for (const auto& rb : raw.branches) {
        if (!labels.insert(rb.label).second) {
            throw CoverValidationError(CoverError::DuplicateLabel,
                                       "duplicate branch label '" + rb.label + "'");
        }
        if (rb.generator < 0 || rb.generator >= n) {
            throw CoverValidationError(CoverError::GeneratorOutOfRange,
                                       "branch '" + rb.label + "': generator " +
                                           std::to_string(rb.generator) + " out of range");
        }
        int e = g.element_order(rb.generator);
        if (e < 2) {
            throw CoverValidationError(CoverError::RamificationIndexOne,
                                       "branch '" + rb.label +
                                           "': generator is the identity (e = 1); branch orbits "
                                           "must be ramified");
        }
        if (gcd_long(mod_positive(rb.t, e), e) != 1) {
            throw CoverValidationError(CoverError::ExponentNotCoprime,
                                       "branch '" + rb.label + "': cotangent exponent " +
                                           std::to_string(rb.t) + " is not coprime to e = " +
                                           std::to_string(e));
        }
        cover.branches_.push_back({rb.label, rb.generator, e, mod_positive(rb.t, e)});
    }

    // Hurwitz: 2g_X - 2 = n(2g_Y - 2) + sum over orbits (n/e)(e-1).
    long ram = 0;
    for (const auto& b : cover.branches_) ram += (n / b.e) * (b.e - 1);
    long rhs = n * (2 * raw.g_Y - 2) + ram;
    if ((rhs + 2) % 2 != 0) {
        throw CoverValidationError(CoverError::HurwitzParity,
                                   "Hurwitz count 2g_X - 2 = " + std::to_string(rhs) +
                                       " is odd; no integer genus exists");
    }
    long gx2 = rhs + 2;
    if (gx2 < 0) {
        throw CoverValidationError(CoverError::HurwitzNegative,
                                   "Hurwitz count gives negative genus 2g_X = " +
                                       std::to_string(gx2));
    }
    cover.g_X_ = gx2 / 2;

    // Totally ramified congruence: when every e_Q = n, write the first
    // orbit's cotangent character as chi_Q^{a_Q} for each orbit Q and require
    // sum a_Q = 0 mod n. Failure flags the data as not realizable.
    if (!cover.branches_.empty()) {
        bool all_total = true;
        for (const auto& b : cover.branches_) {
            if (b.e != n) {
                all_total = false;
                break;
            }
        }
        if (all_total) {
            const BranchOrbit& first = cover.branches_.front();
            long sum = 0;
            for (const auto& b : cover.branches_) {
                // chi_b(first.generator) = zeta_n^{t_b * w} with
                // first.generator = b.generator^w; solve chi_first = chi_b^a.
                long w = -1;
                int x = 0;
                for (long p = 0; p < n; ++p) {
                    if (x == first.generator) {
                        w = p;
                        break;
                    }
                    x = g.mul(x, b.generator);
                }
                long value_exp = mod_positive(b.t * w, n);  // chi_b at first.generator
                long a = mod_positive(first.t * mod_inverse(value_exp, n), n);
                sum += a;
            }
            if (sum % n != 0) {
                std::ostringstream msg;
                msg << "not realizable: totally ramified character congruence fails (sum of "
                       "exponents "
                    << sum << " != 0 mod " << n << ")";
                cover.warnings_.push_back(msg.str());
            }
        }
    }
    return cover;
}

CoverDescription kummer_cover_description(long m, const std::vector<long>& exponents) {
    if (m < 2) throw std::invalid_argument("kummer_cover: m must be at least 2");
    long total = 0;
    for (long b : exponents) total += b;
    if (mod_positive(total, m) != 0) {
        throw std::invalid_argument("kummer_cover: exponents sum to " + std::to_string(total) +
                                    ", which is not 0 mod " + std::to_string(m) +
                                    "; such data cannot pass the realizability certificates");
    }
    CoverDescription desc;
    desc.char_p = 0;
    desc.g_Y = 0;
    int idx = 0;
    for (long b : exponents) {
        long bm = mod_positive(b, m);
        if (bm == 0) {
            throw std::invalid_argument("kummer_cover: exponent " + std::to_string(b) +
                                        " is 0 mod m (unramified, degenerate)");
        }
        long d = gcd_long(bm, m);
        long e = m / d;
        long bp = (bm / d) % e;
        CoverDescription::RawBranch rb;
        rb.label = "P" + std::to_string(idx++);
        rb.generator = static_cast<int>(d);  // sigma^d in C_m with sigma = element 1
        rb.t = mod_inverse(bp, e);
        desc.branches.push_back(rb);
    }
    return desc;
}

TameCover kummer_cover(long m, const std::vector<long>& exponents) {
    auto builtin = table_builtin("C" + std::to_string(m));
    return cover_validate(builtin.table, kummer_cover_description(m, exponents));
}

}  // namespace equichar
