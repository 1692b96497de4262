#pragma once

#include "equichar/cyclotomic.hpp"
#include "equichar/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace equichar {

class TableValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A class function on a finite group: one exact cyclotomic value per
// conjugacy class, indexed in the group's class order.
struct ClassFunction {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_class(int c) const { return values[static_cast<size_t>(c)]; }
    const Cyclotomic& at_element(int g) const { return values[static_cast<size_t>(group->class_of(g))]; }
};

// <a, b> = (1/|G|) sum over classes |class| * a(g) * b(g^-1).
Cyclotomic pairing(const ClassFunction& a, const ClassFunction& b);

ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_dual(const ClassFunction& a);
ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(const ClassFunction& a, const Rational& c);

// Values of a at powers of the subgroup generator, indexed by power.
ClassFunction cf_restrict(const ClassFunction& a, const CyclicSubgroup& sub);

// Induced class function from a cyclic subgroup, by the brute-force formula
// ind(a)(g) = (1/|H|) sum over tau in G with tau^-1 g tau in H of a(tau^-1 g tau).
ClassFunction cf_induce(const ClassFunction& a, const CyclicSubgroup& sub);

// Validated table of irreducible characters. Construction checks row
// orthogonality, the degree equation and the class count.
class CharacterTable {
public:
    CharacterTable(std::shared_ptr<const FiniteGroup> group,
                   std::vector<std::string> labels,
                   std::vector<ClassFunction> irreducibles);

    // All |G| degree-one characters of an abelian group. For a cyclic group
    // with generator g (the least-index element of maximal order), character j
    // sends g to zeta_n^j.
    static std::shared_ptr<const CharacterTable> abelian(std::shared_ptr<const FiniteGroup> group);

    // Canonical cyclic group Z_e together with its character table; element i
    // is g^i and character j sends g^i to zeta_e^{ij}. Cached by order.
    static std::shared_ptr<const CharacterTable> cyclic(int e);

    const std::shared_ptr<const FiniteGroup>& group() const { return group_; }
    int size() const { return static_cast<int>(irreducibles_.size()); }
    const ClassFunction& irreducible(int i) const { return irreducibles_[static_cast<size_t>(i)]; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int index_of_label(const std::string& label) const;  // -1 if absent
    Rational degree(int i) const;
    int trivial_index() const { return trivial_; }

    // Index of the irreducible with the given class-function values, -1 if none.
    int find(const ClassFunction& cf) const;

private:
    void validate() const;

    std::shared_ptr<const FiniteGroup> group_;
    std::vector<std::string> labels_;
    std::vector<ClassFunction> irreducibles_;
    int trivial_ = -1;
};

// Group and validated character table for a named builtin:
// Cn, Dn (order 2n), S3, S4, A4, Q8, and products of cyclic groups like C2xC2.
struct GroupWithTable {
    std::shared_ptr<const FiniteGroup> group;
    std::shared_ptr<const CharacterTable> table;
};
GroupWithTable table_builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace equichar
