#pragma once

#include "equichar/chartab.hpp"

#include <memory>
#include <vector>

namespace equichar {

// Element of K0(G,k) tensor Q: a rational multiplicity per irreducible of a
// fixed character table. Integral coefficient vectors are classes in K0
// proper; the is_integral predicate separates the two.
class VirtualRep {
public:
    explicit VirtualRep(std::shared_ptr<const CharacterTable> table);
    VirtualRep(std::shared_ptr<const CharacterTable> table, std::vector<Rational> mult);

    static VirtualRep basis(std::shared_ptr<const CharacterTable> table, int irreducible);
    static VirtualRep regular(std::shared_ptr<const CharacterTable> table);
    // Decomposes a class function over the table; throws if any coefficient
    // comes out irrational (the input was not a virtual character of G).
    static VirtualRep decompose(std::shared_ptr<const CharacterTable> table,
                                const ClassFunction& cf);

    const std::shared_ptr<const CharacterTable>& table() const { return table_; }
    const std::vector<Rational>& mult() const { return mult_; }
    const Rational& operator[](int i) const { return mult_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_nonnegative_integral() const;
    Rational dim() const;  // sum of mult_i * degree_i
    bool is_rationally_valued() const;

    ClassFunction character() const;

    VirtualRep operator+(const VirtualRep& other) const;
    VirtualRep operator-(const VirtualRep& other) const;
    VirtualRep scaled(const Rational& c) const;
    bool operator==(const VirtualRep& other) const;

    std::string str() const;  // "label:mult" pairs in table order

private:
    std::shared_ptr<const CharacterTable> table_;
    std::vector<Rational> mult_;
};

VirtualRep vr_tensor(const VirtualRep& a, const VirtualRep& b);
VirtualRep vr_dual(const VirtualRep& a);
Rational vr_pair(const VirtualRep& a, const VirtualRep& b);

// Linear extension of character induction from a cyclic subgroup. v lives on
// the canonical cyclic table of sub.order; the result is decomposed over
// target (the table of sub.parent).
VirtualRep vr_induce(const VirtualRep& v, const CyclicSubgroup& sub,
                     std::shared_ptr<const CharacterTable> target);
VirtualRep vr_restrict(const VirtualRep& v, const CyclicSubgroup& sub);

}  // namespace equichar
