#pragma once

#include "equichar/etale.hpp"

#include <json.hpp>

namespace equichar {

using Json = nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& value);

// Group file: { "name": str, "order": n, "mul": [[...]] }, 0-based indices.
std::shared_ptr<const FiniteGroup> group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

// Character table file: { "group": str, "class_sizes": [...],
// "class_rep_orders": [...], "irreducibles": [{ "label", "values" }] } with
// values as cyclotomic literals in the group's class order. The class data is
// cross-checked against the group before the table itself is validated.
std::shared_ptr<const CharacterTable> table_from_json(const Json& j,
                                                      std::shared_ptr<const FiniteGroup> group);
Json table_to_json(const CharacterTable& t);

// Cover file: { "group": str-ref, "char_p", "g_Y", "branches": [...] }. The
// group reference resolves to a builtin name unless explicit group/table files
// override it (CLI flags).
std::string cover_group_ref(const Json& j);
CoverDescription cover_from_json(const Json& j);
Json cover_to_json(const std::string& group_ref, const CoverDescription& desc);

// Sheaf file: { "rank", "degree", "fibers": { label: [l...] } }.
CoherentSheafData sheaf_from_json(const Json& j);
Json sheaf_to_json(const CoherentSheafData& s);

// Divisor file: { "entries": { label: n }, "unramified_orbits": { label: n } }.
EquivariantDivisorData divisor_from_json(const Json& j);
Json divisor_to_json(const EquivariantDivisorData& d);

// Etale sheaf file: { "l", "generic_dim", "branch_stalks": { label:
// { "exponents", "alpha" } }, "free_orbits": [{ "label", "stalk_dim",
// "alpha" }] }.
EtaleSheafData etale_from_json(const Json& j);
Json etale_to_json(const EtaleSheafData& f);

// Virtual representation: { "table": str, "mult": { label: rational-literal } }.
// Loading requires the matching table; absent labels mean multiplicity 0.
VirtualRep vr_from_json(const Json& j, std::shared_ptr<const CharacterTable> table);
Json vr_to_json(const VirtualRep& v);

// Resolves a cover file against an optional explicit group/table pair:
// group-file alone gets the abelian table, a table file needs the group it
// describes (builtin groups may omit the group file).
GroupWithTable resolve_group(const std::string& group_ref, const std::string& group_file,
                             const std::string& table_file);

}  // namespace equichar
