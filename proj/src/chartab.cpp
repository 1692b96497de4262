#include "equichar/chartab.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace equichar {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group.get() != b.group.get()) {
        throw std::invalid_argument("class functions live on different groups");
    }
}

}  // namespace

Cyclotomic pairing(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    const FiniteGroup& g = *a.group;
    Cyclotomic acc;
    for (int c = 0; c < g.class_count(); ++c) {
        acc = acc + Cyclotomic(Rational(g.class_size(c))) * a.at_class(c) *
                        b.at_class(g.inverse_class(c));
    }
    return acc * Cyclotomic(Rational(1, g.order()));
}

ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

ClassFunction cf_dual(const ClassFunction& a) {
    const FiniteGroup& g = *a.group;
    ClassFunction r{a.group, std::vector<Cyclotomic>(a.values.size())};
    for (int c = 0; c < g.class_count(); ++c) {
        r.values[static_cast<size_t>(c)] = a.at_class(g.inverse_class(c));
    }
    return r;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
    return r;
}

ClassFunction cf_scale(const ClassFunction& a, const Rational& c) {
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (const auto& v : a.values) r.values.push_back(v * Cyclotomic(c));
    return r;
}

ClassFunction cf_restrict(const ClassFunction& a, const CyclicSubgroup& sub) {
    if (a.group.get() != sub.parent.get()) {
        throw std::invalid_argument("cf_restrict: subgroup belongs to a different group");
    }
    ClassFunction r{CharacterTable::cyclic(sub.order)->group(), {}};
    r.values.reserve(static_cast<size_t>(sub.order));
    for (int i = 0; i < sub.order; ++i) r.values.push_back(a.at_element(sub.elements[i]));
    return r;
}

ClassFunction cf_induce(const ClassFunction& a, const CyclicSubgroup& sub) {
    if (a.group->order() != sub.order) {
        throw std::invalid_argument("cf_induce: class function does not match subgroup order");
    }
    const FiniteGroup& g = *sub.parent;
    ClassFunction r{sub.parent, std::vector<Cyclotomic>(static_cast<size_t>(g.class_count()))};
    Cyclotomic inv_h = Cyclotomic(Rational(1, sub.order));
    for (int c = 0; c < g.class_count(); ++c) {
        int rep = g.class_rep(c);
        Cyclotomic acc;
        for (int tau = 0; tau < g.order(); ++tau) {
            int conj = g.mul(g.mul(g.inverse(tau), rep), tau);
            if (sub.contains(conj)) acc = acc + a.values[static_cast<size_t>(sub.power_of[conj])];
        }
        r.values[static_cast<size_t>(c)] = acc * inv_h;
    }
    return r;
}

CharacterTable::CharacterTable(std::shared_ptr<const FiniteGroup> group,
                               std::vector<std::string> labels,
                               std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), labels_(std::move(labels)), irreducibles_(std::move(irreducibles)) {
    validate();
    for (int i = 0; i < size(); ++i) {
        bool trivial = true;
        for (const auto& v : irreducibles_[static_cast<size_t>(i)].values) {
            if (v != Cyclotomic(1)) {
                trivial = false;
                break;
            }
        }
        if (trivial) {
            trivial_ = i;
            break;
        }
    }
    if (trivial_ < 0) throw TableValidationError("table has no trivial character");
}

void CharacterTable::validate() const {
    int classes = group_->class_count();
    if (static_cast<int>(irreducibles_.size()) != classes) {
        throw TableValidationError("table has " + std::to_string(irreducibles_.size()) +
                                   " irreducibles but the group has " + std::to_string(classes) +
                                   " conjugacy classes");
    }
    if (labels_.size() != irreducibles_.size()) {
        throw TableValidationError("label count does not match irreducible count");
    }
    Rational degree_sum = 0;
    for (int i = 0; i < size(); ++i) {
        const ClassFunction& chi = irreducibles_[static_cast<size_t>(i)];
        if (chi.group.get() != group_.get()) {
            throw TableValidationError("irreducible " + labels_[static_cast<size_t>(i)] +
                                       " lives on a different group");
        }
        if (static_cast<int>(chi.values.size()) != classes) {
            throw TableValidationError("irreducible " + labels_[static_cast<size_t>(i)] +
                                       " has wrong value count");
        }
        Cyclotomic deg = chi.at_element(0);
        if (!deg.is_rational() || !is_integer(deg.to_rational()) || deg.to_rational() <= 0) {
            throw TableValidationError("irreducible " + labels_[static_cast<size_t>(i)] +
                                       " has non-positive-integer degree " + deg.str());
        }
        degree_sum += deg.to_rational() * deg.to_rational();
    }
    if (degree_sum != group_->order()) {
        throw TableValidationError("sum of squared degrees is " + rational_to_string(degree_sum) +
                                   ", expected group order " + std::to_string(group_->order()));
    }
    for (int i = 0; i < size(); ++i) {
        for (int j = i; j < size(); ++j) {
            Cyclotomic p = pairing(irreducibles_[static_cast<size_t>(i)],
                                   irreducibles_[static_cast<size_t>(j)]);
            Cyclotomic expected(i == j ? 1 : 0);
            if (p != expected) {
                std::ostringstream msg;
                msg << "orthogonality fails for (" << labels_[static_cast<size_t>(i)] << ", "
                    << labels_[static_cast<size_t>(j)] << "): <.,.> = " << p.str() << ", expected "
                    << expected.str();
                throw TableValidationError(msg.str());
            }
        }
    }
}

Rational CharacterTable::degree(int i) const {
    return irreducibles_[static_cast<size_t>(i)].at_element(0).to_rational();
}

int CharacterTable::index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[static_cast<size_t>(i)] == label) return i;
    }
    return -1;
}

int CharacterTable::find(const ClassFunction& cf) const {
    for (int i = 0; i < size(); ++i) {
        const auto& vals = irreducibles_[static_cast<size_t>(i)].values;
        if (vals.size() == cf.values.size() &&
            std::equal(cf.values.begin(), cf.values.end(), vals.begin())) {
            return i;
        }
    }
    return -1;
}

std::shared_ptr<const CharacterTable> CharacterTable::abelian(
    std::shared_ptr<const FiniteGroup> group) {
    const FiniteGroup& g = *group;
    int n = g.order();
    if (!g.is_abelian()) {
        throw TableValidationError(
            "group " + g.name() +
            " is not abelian; load its character table from a table file instead");
    }
    // Greedy generating set: repeatedly take the least-index element of
    // maximal order outside the current closure.
    std::vector<int> gens;
    std::vector<char> in_closure(static_cast<size_t>(n), 0);
    in_closure[0] = 1;
    int covered = 1;
    while (covered < n) {
        int best = -1;
        for (int x = 1; x < n; ++x) {
            if (!in_closure[static_cast<size_t>(x)] &&
                (best < 0 || g.element_order(x) > g.element_order(best))) {
                best = x;
            }
        }
        gens.push_back(best);
        // Close under multiplication by best.
        std::vector<int> members;
        for (int x = 0; x < n; ++x) {
            if (in_closure[static_cast<size_t>(x)]) members.push_back(x);
        }
        for (int x : members) {
            int y = x;
            for (int k = 1; k < g.element_order(best); ++k) {
                y = g.mul(y, best);
                if (!in_closure[static_cast<size_t>(y)]) {
                    in_closure[static_cast<size_t>(y)] = 1;
                    ++covered;
                }
            }
        }
    }
    // Exponent vector of each element over the generators (breadth-first).
    size_t k = gens.size();
    std::vector<std::vector<int>> expo(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    expo[0].assign(k, 0);
    seen[0] = 1;
    std::vector<int> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (size_t gi = 0; gi < k; ++gi) {
            int y = g.mul(x, gens[gi]);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                expo[static_cast<size_t>(y)] = expo[static_cast<size_t>(x)];
                expo[static_cast<size_t>(y)][gi] =
                    (expo[static_cast<size_t>(y)][gi] + 1) % g.element_order(gens[gi]);
                queue.push_back(y);
            }
        }
    }
    long exponent = 1;
    for (int x = 0; x < n; ++x) exponent = lcm_long(exponent, g.element_order(x));
    // Enumerate value tuples on the generators; keep those that define a
    // homomorphism into the roots of unity.
    std::vector<long> radix(k);
    for (size_t gi = 0; gi < k; ++gi) radix[gi] = g.element_order(gens[gi]);
    std::vector<long> tuple(k, 0);
    std::vector<ClassFunction> chars;
    std::vector<std::string> labels;
    std::vector<long> t(static_cast<size_t>(n));
    while (true) {
        for (int x = 0; x < n; ++x) {
            long acc = 0;
            for (size_t gi = 0; gi < k; ++gi) {
                acc += tuple[gi] * expo[static_cast<size_t>(x)][gi] * (exponent / radix[gi]);
            }
            t[static_cast<size_t>(x)] = mod_positive(acc, exponent);
        }
        bool hom = true;
        for (int x = 0; x < n && hom; ++x) {
            for (int y = 0; y < n; ++y) {
                if ((t[static_cast<size_t>(x)] + t[static_cast<size_t>(y)]) % exponent !=
                    t[static_cast<size_t>(g.mul(x, y))]) {
                    hom = false;
                    break;
                }
            }
        }
        if (hom) {
            ClassFunction cf{group, {}};
            cf.values.reserve(static_cast<size_t>(n));
            for (int c = 0; c < g.class_count(); ++c) {
                cf.values.push_back(
                    Cyclotomic::root_of_unity(exponent, t[static_cast<size_t>(g.class_rep(c))]));
            }
            labels.push_back("chi" + std::to_string(chars.size()));
            chars.push_back(std::move(cf));
        }
        size_t gi = 0;
        while (gi < k && ++tuple[gi] == radix[gi]) {
            tuple[gi] = 0;
            ++gi;
        }
        if (gi == k) break;
    }
    if (static_cast<int>(chars.size()) != n) {
        throw std::logic_error("abelian character enumeration produced " +
                               std::to_string(chars.size()) + " characters, expected " +
                               std::to_string(n));
    }
    return std::make_shared<CharacterTable>(group, std::move(labels), std::move(chars));
}

std::shared_ptr<const CharacterTable> CharacterTable::cyclic(int e) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    auto group = FiniteGroup::cyclic(e);
    std::vector<ClassFunction> chars;
    std::vector<std::string> labels;
    for (int j = 0; j < e; ++j) {
        ClassFunction cf{group, {}};
        for (int i = 0; i < e; ++i) cf.values.push_back(Cyclotomic::root_of_unity(e, i * j));
        labels.push_back("chi" + std::to_string(j));
        chars.push_back(std::move(cf));
    }
    auto table = std::make_shared<CharacterTable>(group, std::move(labels), std::move(chars));
    cache.emplace(e, table);
    return table;
}

namespace {

// ---- builtin non-abelian groups and tables ----

std::vector<std::vector<int>> perm_group_table(const std::vector<std::vector<int>>& perms) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    size_t n = perms.size();
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            std::vector<int> comp(perms[a].size());
            for (size_t x = 0; x < comp.size(); ++x) {
                comp[x] = perms[a][static_cast<size_t>(perms[b][x])];
            }
            mul[a][b] = index.at(comp);
        }
    }
    return mul;
}

int perm_sign(const std::vector<int>& p) {
    int sign = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int perm_fixed(const std::vector<int>& p) {
    int f = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == static_cast<int>(i)) ++f;
    }
    return f;
}

std::vector<std::vector<int>> all_perms(int n, bool even_only) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (!even_only || perm_sign(p) == 1) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::shared_ptr<const CharacterTable> make_table(
    std::shared_ptr<const FiniteGroup> group, std::vector<std::string> labels,
    const std::vector<std::vector<Cyclotomic>>& per_element_values) {
    std::vector<ClassFunction> chars;
    for (const auto& vals : per_element_values) {
        ClassFunction cf{group, {}};
        for (int c = 0; c < group->class_count(); ++c) {
            cf.values.push_back(vals[static_cast<size_t>(group->class_rep(c))]);
        }
        chars.push_back(std::move(cf));
    }
    return std::make_shared<CharacterTable>(group, std::move(labels), std::move(chars));
}

GroupWithTable builtin_symmetric(int n, bool even_only, const std::string& name) {
    auto perms = all_perms(n, even_only);
    auto group = FiniteGroup::from_table(name, perm_group_table(perms));
    int order = group->order();
    std::vector<std::vector<Cyclotomic>> vals;
    std::vector<std::string> labels;
    auto column = [&](auto&& f) {
        std::vector<Cyclotomic> v;
        for (int g = 0; g < order; ++g) v.push_back(f(perms[static_cast<size_t>(g)]));
        return v;
    };
    if (!even_only && n == 4) {
        labels = {"triv", "sgn", "deg2", "std", "stdsgn"};
        vals.push_back(column([](const std::vector<int>&) { return Cyclotomic(1); }));
        vals.push_back(column([](const std::vector<int>& p) { return Cyclotomic(perm_sign(p)); }));
        vals.push_back(column([](const std::vector<int>& p) {
            // lift of the standard character of S3 through S4 -> S3
            int f = perm_fixed(p);
            int s = perm_sign(p);
            if (f == 4) return Cyclotomic(2);
            if (f == 0 && s == 1) return Cyclotomic(2);   // (2,2) type
            if (f == 1) return Cyclotomic(-1);            // 3-cycles
            return Cyclotomic(0);                         // transpositions, 4-cycles
        }));
        vals.push_back(column([](const std::vector<int>& p) { return Cyclotomic(perm_fixed(p) - 1); }));
        vals.push_back(column([](const std::vector<int>& p) {
            return Cyclotomic((perm_fixed(p) - 1) * perm_sign(p));
        }));
    } else if (even_only && n == 4) {
        // A4: the Klein subgroup V is the kernel of the two cubic characters.
        // Map A4 -> Z/3 by the action on the three partitions of {0,1,2,3}
        // into pairs, labelling a partition by the partner of 0 minus one.
        auto quotient_class = [](const std::vector<int>& p) -> int {
            int a = p[0], b = p[1];  // image pair of {0,1}
            int partner;
            if (a == 0) {
                partner = b;
            } else if (b == 0) {
                partner = a;
            } else {
                partner = (p[2] == 0) ? p[3] : p[2];
            }
            return partner - 1;
        };
        labels = {"triv", "omega", "omega2", "std"};
        vals.push_back(column([](const std::vector<int>&) { return Cyclotomic(1); }));
        vals.push_back(column([&](const std::vector<int>& p) {
            return Cyclotomic::root_of_unity(3, quotient_class(p));
        }));
        vals.push_back(column([&](const std::vector<int>& p) {
            return Cyclotomic::root_of_unity(3, 2 * quotient_class(p));
        }));
        vals.push_back(column([](const std::vector<int>& p) { return Cyclotomic(perm_fixed(p) - 1); }));
    } else {
        throw std::invalid_argument("unsupported symmetric/alternating builtin");
    }
    return {group, make_table(group, std::move(labels), vals)};
}

GroupWithTable builtin_dihedral(int n, const std::string& name) {
    auto group = FiniteGroup::dihedral(n);
    if (name != group->name()) {
        group = FiniteGroup::from_table(name, group->table());
    }
    int order = 2 * n;
    std::vector<std::vector<Cyclotomic>> vals;
    std::vector<std::string> labels;
    auto rot_index = [n](int g) { return g < n ? g : g - n; };
    auto is_refl = [n](int g) { return g >= n; };
    auto linear = [&](int u, int v) {
        std::vector<Cyclotomic> col;
        for (int g = 0; g < order; ++g) {
            int sign = 1;
            if (u < 0 && rot_index(g) % 2 == 1) sign = -sign;
            if (v < 0 && is_refl(g)) sign = -sign;
            col.push_back(Cyclotomic(sign));
        }
        return col;
    };
    labels.push_back("triv");
    vals.push_back(linear(1, 1));
    labels.push_back("sgn");
    vals.push_back(linear(1, -1));
    if (n % 2 == 0) {
        labels.push_back("lin1");
        vals.push_back(linear(-1, 1));
        labels.push_back("lin2");
        vals.push_back(linear(-1, -1));
    }
    int two_dim = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int j = 1; j <= two_dim; ++j) {
        std::vector<Cyclotomic> col;
        for (int g = 0; g < order; ++g) {
            if (is_refl(g)) {
                col.push_back(Cyclotomic(0));
            } else {
                col.push_back(Cyclotomic::root_of_unity(n, j * rot_index(g)) +
                              Cyclotomic::root_of_unity(n, -j * rot_index(g)));
            }
        }
        labels.push_back(two_dim == 1 ? std::string("std") : "rho" + std::to_string(j));
        vals.push_back(std::move(col));
    }
    return {group, make_table(group, std::move(labels), vals)};
}

GroupWithTable builtin_quaternion() {
    // Elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k.
    auto unit = [](int g) { return g / 2; };  // 0:1, 1:i, 2:j, 3:k
    auto sign = [](int g) { return g % 2 == 0 ? 1 : -1; };
    auto encode = [](int u, int s) { return 2 * u + (s == 1 ? 0 : 1); };
    // unit multiplication: (result unit, extra sign)
    static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int usgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int u = umul[unit(a)][unit(b)];
            int s = sign(a) * sign(b) * usgn[unit(a)][unit(b)];
            mul[a][b] = encode(u, s);
        }
    }
    auto group = FiniteGroup::from_table("Q8", std::move(mul));
    std::vector<std::vector<Cyclotomic>> vals;
    auto linear = [&](bool i_pos, bool j_pos) {
        std::vector<Cyclotomic> col;
        for (int g = 0; g < 8; ++g) {
            int u = unit(g);
            int v = 1;
            if (u == 1) v = i_pos ? 1 : -1;
            if (u == 2) v = j_pos ? 1 : -1;
            if (u == 3) v = (i_pos ? 1 : -1) * (j_pos ? 1 : -1);
            col.push_back(Cyclotomic(v));
        }
        return col;
    };
    vals.push_back(linear(true, true));
    vals.push_back(linear(true, false));
    vals.push_back(linear(false, true));
    vals.push_back(linear(false, false));
    std::vector<Cyclotomic> two;
    for (int g = 0; g < 8; ++g) {
        two.push_back(unit(g) == 0 ? Cyclotomic(2 * sign(g)) : Cyclotomic(0));
    }
    vals.push_back(std::move(two));
    return {group, make_table(group, {"triv", "chi_i", "chi_j", "chi_k", "deg2"}, vals)};
}

}  // namespace

GroupWithTable table_builtin(const std::string& name) {
    if (name == "S3") return builtin_dihedral(3, "S3");
    if (name == "S4") return builtin_symmetric(4, false, "S4");
    if (name == "A4") return builtin_symmetric(4, true, "A4");
    if (name == "Q8") return builtin_quaternion();
    if (name.size() >= 2 && name[0] == 'D') {
        int n = std::stoi(name.substr(1));
        if (n < 3) throw std::invalid_argument("dihedral builtin needs parameter >= 3");
        return builtin_dihedral(n, name);
    }
    // Cn and products of cyclic groups, e.g. C6 or C2xC2xC3.
    std::shared_ptr<const FiniteGroup> group;
    size_t pos = 0;
    while (pos < name.size()) {
        size_t next = name.find('x', pos);
        std::string part = name.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.size() < 2 || part[0] != 'C') {
            throw std::invalid_argument("unknown builtin group '" + name + "'");
        }
        int n = std::stoi(part.substr(1));
        auto factor = FiniteGroup::cyclic(n);
        group = group ? FiniteGroup::product(*group, *factor) : factor;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (!group) throw std::invalid_argument("unknown builtin group '" + name + "'");
    return {group, CharacterTable::abelian(group)};
}

std::vector<std::string> builtin_names() {
    return {"Cn", "CnxCm...", "Dn (order 2n)", "S3", "S4", "A4", "Q8"};
}

}  // namespace equichar
