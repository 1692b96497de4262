#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichar {

class GroupValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite group given by its multiplication table. Element 0 is the identity;
// mul[g][h] = g*h. Inverses and conjugacy classes are derived at construction,
// and the group axioms are checked exhaustively.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<int>> mul);

    static std::shared_ptr<const FiniteGroup> cyclic(int n);
    static std::shared_ptr<const FiniteGroup> dihedral(int n);  // order 2n
    static std::shared_ptr<const FiniteGroup> product(const FiniteGroup& a, const FiniteGroup& b);
    static std::shared_ptr<const FiniteGroup> from_table(std::string name,
                                                         std::vector<std::vector<int>> mul);

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int mul(int g, int h) const { return mul_[g][h]; }
    int inverse(int g) const { return inv_[g]; }
    int power(int g, long k) const;
    int element_order(int g) const { return elt_order_[g]; }
    bool is_abelian() const;

    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(int g) const { return class_of_[g]; }
    // Classes are ordered by their minimal element, which is the representative.
    int class_rep(int c) const { return classes_[c].front(); }
    int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
    const std::vector<int>& class_elements(int c) const { return classes_[c]; }
    // Index of the class containing the inverses of class c.
    int inverse_class(int c) const { return class_of_[inv_[classes_[c].front()]]; }

    const std::vector<std::vector<int>>& table() const { return mul_; }

private:
    void validate() const;
    void derive();

    std::string name_;
    int n_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> elt_order_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
};

// The cyclic subgroup <g> of a parent group, with a fixed generator. Element
// index i of as_group() corresponds to g^i in the parent.
struct CyclicSubgroup {
    std::shared_ptr<const FiniteGroup> parent;
    int generator = 0;
    int order = 1;
    std::vector<int> elements;     // g^0, g^1, ..., g^{order-1}
    std::vector<int> power_of;     // parent element -> power, or -1 if outside

    bool contains(int g) const { return power_of[g] >= 0; }
};

CyclicSubgroup cyclic_subgroup(std::shared_ptr<const FiniteGroup> group, int g);

}  // namespace equichar
