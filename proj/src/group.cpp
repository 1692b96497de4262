#include "equichar/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace equichar {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> mul)
    : name_(std::move(name)), n_(static_cast<int>(mul.size())), mul_(std::move(mul)) {
    validate();
    derive();
}

void FiniteGroup::validate() const {
    if (n_ <= 0) throw GroupValidationError("group order must be positive");
    for (int g = 0; g < n_; ++g) {
        if (static_cast<int>(mul_[g].size()) != n_) {
            throw GroupValidationError("multiplication table row " + std::to_string(g) +
                                       " has wrong length");
        }
        for (int h = 0; h < n_; ++h) {
            int p = mul_[g][h];
            if (p < 0 || p >= n_) {
                throw GroupValidationError("table entry out of range at (" + std::to_string(g) +
                                           "," + std::to_string(h) + ")");
            }
        }
    }
    for (int g = 0; g < n_; ++g) {
        if (mul_[0][g] != g || mul_[g][0] != g) {
            throw GroupValidationError("element 0 is not a two-sided identity (witness " +
                                       std::to_string(g) + ")");
        }
    }
    for (int g = 0; g < n_; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n_; ++h) {
            if (mul_[g][h] == 0 && mul_[h][g] == 0) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) {
            throw GroupValidationError("element " + std::to_string(g) + " has no inverse");
        }
    }
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            for (int c = 0; c < n_; ++c) {
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
                    std::ostringstream msg;
                    msg << "multiplication is not associative: witness triple (" << a << "," << b
                        << "," << c << ")";
                    throw GroupValidationError(msg.str());
                }
            }
        }
    }
}

void FiniteGroup::derive() {
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (mul_[g][h] == 0) {
                inv_[g] = h;
                break;
            }
        }
    }
    elt_order_.assign(n_, 0);
    for (int g = 0; g < n_; ++g) {
        int x = g, ord = 1;
        while (x != 0) {
            x = mul_[x][g];
            ++ord;
        }
        elt_order_[g] = ord;
    }
    // Conjugacy classes: orbit of the conjugation action, classes ordered by
    // minimal element.
    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        int c = static_cast<int>(classes_.size());
        std::vector<int> members;
        for (int t = 0; t < n_; ++t) {
            int conj = mul_[mul_[t][g]][inv_[t]];
            if (class_of_[conj] < 0) {
                class_of_[conj] = c;
                members.push_back(conj);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
    }
}

int FiniteGroup::power(int g, long k) const {
    int e = elt_order_[g];
    long r = ((k % e) + e) % e;
    int x = 0;
    for (long i = 0; i < r; ++i) x = mul_[x][g];
    return x;
}

bool FiniteGroup::is_abelian() const {
    return class_count() == n_;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
    if (n < 1) throw GroupValidationError("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) mul[g][h] = (g + h) % n;
    }
    return std::make_shared<FiniteGroup>("C" + std::to_string(n), std::move(mul));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::dihedral(int n) {
    if (n < 1) throw GroupValidationError("dihedral parameter must be positive");
    // Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s*r^i, with
    // r^i * r^j = r^{i+j} and s*r^i * s*r^j = r^{j-i}.
    int order = 2 * n;
    auto enc = [n](bool refl, int i) { return (refl ? n : 0) + ((i % n + n) % n); };
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        bool ra = a >= n;
        int ia = ra ? a - n : a;
        for (int b = 0; b < order; ++b) {
            bool rb = b >= n;
            int ib = rb ? b - n : b;
            // (s^ea r^ia)(s^eb r^ib) = s^(ea+eb) r^(ib +/- ia)
            mul[a][b] = enc(ra != rb, rb ? ib - ia : ib + ia);
        }
    }
    return std::make_shared<FiniteGroup>("D" + std::to_string(n), std::move(mul));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::product(const FiniteGroup& a,
                                                        const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    auto enc = [nb](int x, int y) { return x * nb + y; };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x1 = 0; x1 < na; ++x1) {
        for (int y1 = 0; y1 < nb; ++y1) {
            for (int x2 = 0; x2 < na; ++x2) {
                for (int y2 = 0; y2 < nb; ++y2) {
                    mul[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    return std::make_shared<FiniteGroup>(a.name() + "x" + b.name(), std::move(mul));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::string name,
                                                           std::vector<std::vector<int>> mul) {
    return std::make_shared<FiniteGroup>(std::move(name), std::move(mul));
}

CyclicSubgroup cyclic_subgroup(std::shared_ptr<const FiniteGroup> group, int g) {
    if (g < 0 || g >= group->order()) {
        throw std::out_of_range("cyclic_subgroup: element index out of range");
    }
    CyclicSubgroup sub;
    sub.parent = group;
    sub.generator = g;
    sub.order = group->element_order(g);
    sub.power_of.assign(group->order(), -1);
    int x = 0;
    for (int i = 0; i < sub.order; ++i) {
        sub.elements.push_back(x);
        sub.power_of[x] = i;
        x = group->mul(x, g);
    }
    return sub;
}

}  // namespace equichar
