#include "equichar/ktheory.hpp"

#include <sstream>

namespace equichar {

namespace {

void require_same_table(const VirtualRep& a, const VirtualRep& b) {
    if (a.table().get() != b.table().get()) {
        throw std::invalid_argument("virtual representations use different character tables");
    }
}

}  // namespace

VirtualRep::VirtualRep(std::shared_ptr<const CharacterTable> table)
    : table_(std::move(table)), mult_(static_cast<size_t>(table_->size()), Rational(0)) {}

VirtualRep::VirtualRep(std::shared_ptr<const CharacterTable> table, std::vector<Rational> mult)
    : table_(std::move(table)), mult_(std::move(mult)) {
    if (static_cast<int>(mult_.size()) != table_->size()) {
        throw std::invalid_argument("multiplicity vector length does not match table");
    }
}

VirtualRep VirtualRep::basis(std::shared_ptr<const CharacterTable> table, int irreducible) {
    VirtualRep v(std::move(table));
    v.mult_.at(static_cast<size_t>(irreducible)) = 1;
    return v;
}

VirtualRep VirtualRep::regular(std::shared_ptr<const CharacterTable> table) {
    VirtualRep v(table);
    for (int i = 0; i < table->size(); ++i) v.mult_[static_cast<size_t>(i)] = table->degree(i);
    return v;
}

VirtualRep VirtualRep::decompose(std::shared_ptr<const CharacterTable> table,
                                 const ClassFunction& cf) {
    VirtualRep v(table);
    for (int i = 0; i < table->size(); ++i) {
        Cyclotomic c = pairing(cf, table->irreducible(i));
        if (!c.is_rational()) {
            throw std::domain_error("decomposition coefficient for " + table->label(i) +
                                    " is not rational: " + c.str());
        }
        v.mult_[static_cast<size_t>(i)] = c.to_rational();
    }
    return v;
}

bool VirtualRep::is_zero() const {
    for (const auto& m : mult_) {
        if (m != 0) return false;
    }
    return true;
}

bool VirtualRep::is_integral() const {
    for (const auto& m : mult_) {
        if (!is_integer(m)) return false;
    }
    return true;
}

bool VirtualRep::is_nonnegative_integral() const {
    for (const auto& m : mult_) {
        if (!is_integer(m) || m < 0) return false;
    }
    return true;
}

Rational VirtualRep::dim() const {
    Rational d = 0;
    for (int i = 0; i < table_->size(); ++i) d += mult_[static_cast<size_t>(i)] * table_->degree(i);
    return d;
}

ClassFunction VirtualRep::character() const {
    ClassFunction cf{table_->group(),
                     std::vector<Cyclotomic>(static_cast<size_t>(table_->group()->class_count()))};
    for (int i = 0; i < table_->size(); ++i) {
        if (mult_[static_cast<size_t>(i)] == 0) continue;
        Cyclotomic c(mult_[static_cast<size_t>(i)]);
        const ClassFunction& chi = table_->irreducible(i);
        for (size_t j = 0; j < cf.values.size(); ++j) cf.values[j] = cf.values[j] + c * chi.values[j];
    }
    return cf;
}

bool VirtualRep::is_rationally_valued() const {
    for (const auto& v : character().values) {
        if (!v.is_rational()) return false;
    }
    return true;
}

VirtualRep VirtualRep::operator+(const VirtualRep& other) const {
    require_same_table(*this, other);
    VirtualRep v(table_);
    for (size_t i = 0; i < mult_.size(); ++i) v.mult_[i] = mult_[i] + other.mult_[i];
    return v;
}

VirtualRep VirtualRep::operator-(const VirtualRep& other) const {
    require_same_table(*this, other);
    VirtualRep v(table_);
    for (size_t i = 0; i < mult_.size(); ++i) v.mult_[i] = mult_[i] - other.mult_[i];
    return v;
}

VirtualRep VirtualRep::scaled(const Rational& c) const {
    VirtualRep v(table_);
    for (size_t i = 0; i < mult_.size(); ++i) v.mult_[i] = mult_[i] * c;
    return v;
}

bool VirtualRep::operator==(const VirtualRep& other) const {
    return table_.get() == other.table_.get() && mult_ == other.mult_;
}

std::string VirtualRep::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < table_->size(); ++i) {
        const Rational& m = mult_[static_cast<size_t>(i)];
        if (m == 0) continue;
        Rational mag = m < 0 ? Rational(-m) : m;
        if (first) {
            if (m < 0) out << "-";
            first = false;
        } else {
            out << (m < 0 ? " - " : " + ");
        }
        if (mag != 1) out << rational_to_string(mag) << "*";
        out << table_->label(i);
    }
    if (first) return "0";
    return out.str();
}

VirtualRep vr_tensor(const VirtualRep& a, const VirtualRep& b) {
    require_same_table(a, b);
    return VirtualRep::decompose(a.table(), cf_tensor(a.character(), b.character()));
}

VirtualRep vr_dual(const VirtualRep& a) {
    return VirtualRep::decompose(a.table(), cf_dual(a.character()));
}

Rational vr_pair(const VirtualRep& a, const VirtualRep& b) {
    require_same_table(a, b);
    Rational r = 0;
    // <x, y> is bilinear and the irreducibles are orthonormal.
    for (size_t i = 0; i < a.mult().size(); ++i) r += a.mult()[i] * b.mult()[i];
    return r;
}

VirtualRep vr_induce(const VirtualRep& v, const CyclicSubgroup& sub,
                     std::shared_ptr<const CharacterTable> target) {
    if (target->group().get() != sub.parent.get()) {
        throw std::invalid_argument("vr_induce: target table does not match subgroup parent");
    }
    if (v.table()->group()->order() != sub.order) {
        throw std::invalid_argument("vr_induce: representation does not match subgroup order");
    }
    return VirtualRep::decompose(std::move(target), cf_induce(v.character(), sub));
}

VirtualRep vr_restrict(const VirtualRep& v, const CyclicSubgroup& sub) {
    if (v.table()->group().get() != sub.parent.get()) {
        throw std::invalid_argument("vr_restrict: subgroup belongs to a different group");
    }
    return VirtualRep::decompose(CharacterTable::cyclic(sub.order),
                                 cf_restrict(v.character(), sub));
}

}  // namespace equichar
