#pragma once

#include "equichar/ktheory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equichar {

enum class CoverError {
    CharacteristicDividesOrder,
    BadCharacteristic,
    GeneratorOutOfRange,
    RamificationIndexOne,
    ExponentNotCoprime,
    DuplicateLabel,
    HurwitzParity,
    HurwitzNegative,
};

std::string cover_error_name(CoverError e);

class CoverValidationError : public std::runtime_error {
public:
    CoverValidationError(CoverError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    CoverError code() const { return code_; }

private:
    CoverError code_;
};

// One branch orbit: a chosen point over the orbit with its decomposition
// group <generator>, ramification index e = ord(generator) and cotangent
// character sigma -> zeta_e^t.
struct BranchOrbit {
    std::string label;
    int generator = 0;
    int e = 1;      // derived: element order of generator, >= 2
    long t = 1;     // gcd(t, e) = 1
};

// Raw description of a tame cover, before validation.
struct CoverDescription {
    long char_p = 0;  // characteristic of the base field, 0 or a prime
    long g_Y = 0;
    struct RawBranch {
        std::string label;
        int generator = 0;
        long t = 1;
    };
    std::vector<RawBranch> branches;
};

// Validated tame G-cover: group with character table, base genus, branch
// orbits and the Hurwitz-derived genus of the total space.
class TameCover {
public:
    const std::shared_ptr<const CharacterTable>& table() const { return table_; }
    const std::shared_ptr<const FiniteGroup>& group() const { return table_->group(); }
    int degree() const { return group()->order(); }
    long char_p() const { return char_p_; }
    long genus_base() const { return g_Y_; }
    long genus_total() const { return g_X_; }
    const std::vector<BranchOrbit>& branches() const { return branches_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    const BranchOrbit* branch_by_label(const std::string& label) const;
    // Number of points of X in the orbit over Q: n / e_Q.
    long point_count(const BranchOrbit& q) const { return degree() / q.e; }

    CyclicSubgroup subgroup(const BranchOrbit& q) const;

    friend TameCover cover_validate(std::shared_ptr<const CharacterTable> table,
                                    const CoverDescription& raw);

private:
    std::shared_ptr<const CharacterTable> table_;
    long char_p_ = 0;
    long g_Y_ = 0;
    long g_X_ = 0;
    std::vector<BranchOrbit> branches_;
    std::vector<std::string> warnings_;
};

// Validates the description: characteristic coprime to |G|, generator orders,
// exponent coprimality, Hurwitz integrality. When every branch orbit is
// totally ramified the total-ramification character congruence is checked as
// well; failure is a "not realizable" warning, not an error.
TameCover cover_validate(std::shared_ptr<const CharacterTable> table,
                         const CoverDescription& raw);

// Synthetic C_m Kummer-style cover over genus 0 with one branch orbit per
// exponent b (taken mod m, b != 0): e = m/gcd(b,m), generator sigma^gcd(b,m)
// and t the inverse of b/gcd(b,m) mod e. Requires sum(b) = 0 mod m so that the
// emitted data passes all realizability certificates.
TameCover kummer_cover(long m, const std::vector<long>& exponents);
CoverDescription kummer_cover_description(long m, const std::vector<long>& exponents);

}  // namespace equichar
