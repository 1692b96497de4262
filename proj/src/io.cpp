#include "equichar/io.hpp"

#include <fstream>

namespace equichar {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw IoError(std::string(what) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

long need_int(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_number_integer()) {
        throw IoError(std::string(what) + ": field \"" + key + "\" must be an integer");
    }
    return v.get<long>();
}

std::string need_str(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_string()) {
        throw IoError(std::string(what) + ": field \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& err) {
        throw IoError(path + ": " + err.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& value) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << value.dump(2) << "\n";
}

std::shared_ptr<const FiniteGroup> group_from_json(const Json& j) {
    std::string name = need_str(j, "name", "group file");
    long order = need_int(j, "order", "group file");
    const Json& mul = need(j, "mul", "group file");
    if (!mul.is_array() || static_cast<long>(mul.size()) != order) {
        throw IoError("group file: \"mul\" must be an order x order array");
    }
    std::vector<std::vector<int>> table;
    for (const Json& row : mul) {
        if (!row.is_array() || static_cast<long>(row.size()) != order) {
            throw IoError("group file: \"mul\" must be an order x order array");
        }
        std::vector<int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= order) {
                throw IoError("group file: multiplication entries must be indices in [0, order)");
            }
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    try {
        return FiniteGroup::from_table(std::move(name), std::move(table));
    } catch (const GroupValidationError& err) {
        throw IoError(std::string("group file: ") + err.what());
    }
}

Json group_to_json(const FiniteGroup& g) {
    return Json{{"name", g.name()}, {"order", g.order()}, {"mul", g.table()}};
}

std::shared_ptr<const CharacterTable> table_from_json(const Json& j,
                                                      std::shared_ptr<const FiniteGroup> group) {
    const Json& sizes = need(j, "class_sizes", "table file");
    const Json& orders = need(j, "class_rep_orders", "table file");
    int classes = group->class_count();
    if (!sizes.is_array() || static_cast<int>(sizes.size()) != classes ||
        !orders.is_array() || static_cast<int>(orders.size()) != classes) {
        throw IoError("table file: class data does not match the group (" +
                      std::to_string(classes) + " classes)");
    }
    for (int c = 0; c < classes; ++c) {
        if (sizes[static_cast<size_t>(c)].get<long>() != group->class_size(c)) {
            throw IoError("table file: class size mismatch at class " + std::to_string(c));
        }
        if (orders[static_cast<size_t>(c)].get<long>() !=
            group->element_order(group->class_rep(c))) {
            throw IoError("table file: representative order mismatch at class " +
                          std::to_string(c));
        }
    }
    const Json& irr = need(j, "irreducibles", "table file");
    if (!irr.is_array()) throw IoError("table file: \"irreducibles\" must be an array");
    std::vector<std::string> labels;
    std::vector<ClassFunction> rows;
    for (const Json& row : irr) {
        labels.push_back(need_str(row, "label", "table file"));
        const Json& values = need(row, "values", "table file");
        if (!values.is_array() || static_cast<int>(values.size()) != classes) {
            throw IoError("table file: irreducible \"" + labels.back() + "\" needs " +
                          std::to_string(classes) + " values");
        }
        ClassFunction cf{group, {}};
        for (const Json& v : values) {
            if (!v.is_string()) {
                throw IoError("table file: character values are cyclotomic literals");
            }
            try {
                cf.values.push_back(Cyclotomic::parse(v.get<std::string>()));
            } catch (const std::exception& err) {
                throw IoError("table file: bad value for \"" + labels.back() + "\": " +
                              err.what());
            }
        }
        rows.push_back(std::move(cf));
    }
    try {
        return std::make_shared<const CharacterTable>(group, std::move(labels), std::move(rows));
    } catch (const TableValidationError& err) {
        throw IoError(std::string("table file: ") + err.what());
    }
}

Json table_to_json(const CharacterTable& t) {
    const FiniteGroup& g = *t.group();
    Json sizes = Json::array();
    Json orders = Json::array();
    for (int c = 0; c < g.class_count(); ++c) {
        sizes.push_back(g.class_size(c));
        orders.push_back(g.element_order(g.class_rep(c)));
    }
    Json irr = Json::array();
    for (int i = 0; i < t.size(); ++i) {
        Json values = Json::array();
        for (const Cyclotomic& v : t.irreducible(i).values) values.push_back(v.str());
        irr.push_back(Json{{"label", t.label(i)}, {"values", values}});
    }
    return Json{{"group", g.name()},
                {"class_sizes", sizes},
                {"class_rep_orders", orders},
                {"irreducibles", irr}};
}

std::string cover_group_ref(const Json& j) { return need_str(j, "group", "cover file"); }

CoverDescription cover_from_json(const Json& j) {
    CoverDescription desc;
    desc.char_p = need_int(j, "char_p", "cover file");
    desc.g_Y = need_int(j, "g_Y", "cover file");
    const Json& branches = need(j, "branches", "cover file");
    if (!branches.is_array()) throw IoError("cover file: \"branches\" must be an array");
    for (const Json& b : branches) {
        CoverDescription::RawBranch rb;
        rb.label = need_str(b, "label", "cover file branch");
        rb.generator = static_cast<int>(need_int(b, "generator", "cover file branch"));
        rb.t = need_int(b, "t", "cover file branch");
        desc.branches.push_back(std::move(rb));
    }
    return desc;
}

Json cover_to_json(const std::string& group_ref, const CoverDescription& desc) {
    Json branches = Json::array();
    for (const auto& b : desc.branches) {
        branches.push_back(Json{{"label", b.label}, {"generator", b.generator}, {"t", b.t}});
    }
    return Json{{"group", group_ref},
                {"char_p", desc.char_p},
                {"g_Y", desc.g_Y},
                {"branches", branches}};
}

CoherentSheafData sheaf_from_json(const Json& j) {
    CoherentSheafData s;
    s.rank = need_int(j, "rank", "sheaf file");
    s.degree = need_int(j, "degree", "sheaf file");
    if (j.contains("fibers")) {
        const Json& fibers = j.at("fibers");
        if (!fibers.is_object()) throw IoError("sheaf file: \"fibers\" must be an object");
        for (const auto& [label, exps] : fibers.items()) {
            if (!exps.is_array()) {
                throw IoError("sheaf file: fiber at \"" + label + "\" must be an exponent array");
            }
            s.fibers[label] = exps.get<std::vector<long>>();
        }
    }
    return s;
}

Json sheaf_to_json(const CoherentSheafData& s) {
    Json fibers = Json::object();
    for (const auto& [label, exps] : s.fibers) fibers[label] = exps;
    return Json{{"rank", s.rank}, {"degree", s.degree}, {"fibers", fibers}};
}

EquivariantDivisorData divisor_from_json(const Json& j) {
    EquivariantDivisorData d;
    auto read_map = [&](const char* key, std::map<std::string, long>& out) {
        if (!j.contains(key)) return;
        const Json& m = j.at(key);
        if (!m.is_object()) {
            throw IoError(std::string("divisor file: \"") + key + "\" must be an object");
        }
        for (const auto& [label, n] : m.items()) {
            if (!n.is_number_integer()) {
                throw IoError("divisor file: coefficient at \"" + label + "\" must be an integer");
            }
            out[label] = n.get<long>();
        }
    };
    read_map("entries", d.entries);
    read_map("unramified_orbits", d.unramified_orbits);
    return d;
}

Json divisor_to_json(const EquivariantDivisorData& d) {
    return Json{{"entries", d.entries}, {"unramified_orbits", d.unramified_orbits}};
}

EtaleSheafData etale_from_json(const Json& j) {
    EtaleSheafData f;
    f.l = need_int(j, "l", "etale sheaf file");
    f.generic_dim = need_int(j, "generic_dim", "etale sheaf file");
    if (j.contains("branch_stalks")) {
        const Json& stalks = j.at("branch_stalks");
        if (!stalks.is_object()) {
            throw IoError("etale sheaf file: \"branch_stalks\" must be an object");
        }
        for (const auto& [label, entry] : stalks.items()) {
            EtaleSheafData::BranchStalk stalk;
            const Json& exps = need(entry, "exponents", "etale sheaf stalk");
            if (!exps.is_array()) {
                throw IoError("etale sheaf file: exponents at \"" + label + "\" must be an array");
            }
            stalk.exponents = exps.get<std::vector<long>>();
            stalk.alpha = need_int(entry, "alpha", "etale sheaf stalk");
            f.branch_stalks[label] = std::move(stalk);
        }
    }
    if (j.contains("free_orbits")) {
        const Json& frees = j.at("free_orbits");
        if (!frees.is_array()) {
            throw IoError("etale sheaf file: \"free_orbits\" must be an array");
        }
        for (const Json& entry : frees) {
            EtaleSheafData::FreeOrbit fo;
            fo.label = need_str(entry, "label", "etale sheaf free orbit");
            fo.stalk_dim = need_int(entry, "stalk_dim", "etale sheaf free orbit");
            fo.alpha = need_int(entry, "alpha", "etale sheaf free orbit");
            f.free_orbits.push_back(std::move(fo));
        }
    }
    return f;
}

Json etale_to_json(const EtaleSheafData& f) {
    Json stalks = Json::object();
    for (const auto& [label, stalk] : f.branch_stalks) {
        stalks[label] = Json{{"exponents", stalk.exponents}, {"alpha", stalk.alpha}};
    }
    Json frees = Json::array();
    for (const auto& fo : f.free_orbits) {
        frees.push_back(
            Json{{"label", fo.label}, {"stalk_dim", fo.stalk_dim}, {"alpha", fo.alpha}});
    }
    return Json{{"l", f.l},
                {"generic_dim", f.generic_dim},
                {"branch_stalks", stalks},
                {"free_orbits", frees}};
}

VirtualRep vr_from_json(const Json& j, std::shared_ptr<const CharacterTable> table) {
    const Json& mult = need(j, "mult", "virtual representation");
    if (!mult.is_object()) {
        throw IoError("virtual representation: \"mult\" must be an object");
    }
    std::vector<Rational> m(static_cast<size_t>(table->size()), Rational(0));
    for (const auto& [label, value] : mult.items()) {
        int i = table->index_of_label(label);
        if (i < 0) {
            throw IoError("virtual representation: unknown irreducible \"" + label + "\"");
        }
        if (!value.is_string()) {
            throw IoError("virtual representation: multiplicities are rational literals");
        }
        try {
            m[static_cast<size_t>(i)] = parse_rational(value.get<std::string>());
        } catch (const std::exception& err) {
            throw IoError("virtual representation: bad multiplicity for \"" + label + "\": " +
                          err.what());
        }
    }
    return VirtualRep(std::move(table), std::move(m));
}

Json vr_to_json(const VirtualRep& v) {
    Json mult = Json::object();
    for (int i = 0; i < v.table()->size(); ++i) {
        if (v[i] != 0) mult[v.table()->label(i)] = rational_to_string(v[i]);
    }
    return Json{{"table", v.table()->group()->name()}, {"mult", mult}};
}

GroupWithTable resolve_group(const std::string& group_ref, const std::string& group_file,
                             const std::string& table_file) {
    std::shared_ptr<const FiniteGroup> group;
    if (!group_file.empty()) {
        group = group_from_json(load_json_file(group_file));
    }
    if (!table_file.empty()) {
        Json tj = load_json_file(table_file);
        if (!group) {
            // the table file names a builtin group
            group = table_builtin(need_str(tj, "group", "table file")).group;
        }
        return {group, table_from_json(tj, group)};
    }
    if (group) {
        if (!group->is_abelian()) {
            throw IoError("group \"" + group->name() +
                          "\" is not abelian; provide its character table file");
        }
        return {group, CharacterTable::abelian(group)};
    }
    try {
        return table_builtin(group_ref);
    } catch (const std::exception& err) {
        throw IoError("cannot resolve group \"" + group_ref + "\": " + err.what());
    }
}

}  // namespace equichar
