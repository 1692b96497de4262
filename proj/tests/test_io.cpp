#include "equichar/io.hpp"

#include <doctest.h>

using namespace equichar;

TEST_CASE("group file round trip") {
    auto s3 = table_builtin("S3");
    Json j = group_to_json(*s3.group);
    auto back = group_from_json(j);
    CHECK(back->order() == 6);
    CHECK(back->table() == s3.group->table());

    Json broken = j;
    broken["mul"][0][0] = 7;
    CHECK_THROWS_AS(group_from_json(broken), IoError);
    broken = j;
    broken["mul"][0][1] = 0;  // identity row must be the identity permutation
    CHECK_THROWS_AS(group_from_json(broken), IoError);
    broken = j;
    broken.erase("order");
    CHECK_THROWS_AS(group_from_json(broken), IoError);
}

TEST_CASE("character table file round trip") {
    auto s3 = table_builtin("S3");
    Json j = table_to_json(*s3.table);
    auto back = table_from_json(j, s3.group);
    CHECK(back->size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(back->label(i) == s3.table->label(i));
        CHECK(back->irreducible(i).values == s3.table->irreducible(i).values);
    }

    Json broken = j;
    broken["irreducibles"][2]["values"][1] = "1";  // breaks orthogonality
    CHECK_THROWS_AS(table_from_json(broken, s3.group), IoError);
    broken = j;
    broken["class_sizes"][1] = 5;
    CHECK_THROWS_AS(table_from_json(broken, s3.group), IoError);
    broken = j;
    broken["irreducibles"][0]["values"][0] = "z(";
    CHECK_THROWS_AS(table_from_json(broken, s3.group), IoError);
}

TEST_CASE("cover, sheaf and divisor files") {
    Json cj = {{"group", "C2"},
               {"char_p", 0},
               {"g_Y", 0},
               {"branches", Json::array()}};
    for (int i = 0; i < 6; ++i) {
        cj["branches"].push_back({{"label", "P" + std::to_string(i)}, {"generator", 1}, {"t", 1}});
    }
    CHECK(cover_group_ref(cj) == "C2");
    CoverDescription desc = cover_from_json(cj);
    CHECK(desc.branches.size() == 6);
    TameCover cover = cover_validate(resolve_group("C2", "", "").table, desc);
    CHECK(cover.genus_total() == 2);
    CHECK(cover_to_json("C2", cover_from_json(cj)) == cj);

    Json sj = {{"rank", 2}, {"degree", 4}, {"fibers", {{"P0", {1, 0}}}}};
    CoherentSheafData sheaf = sheaf_from_json(sj);
    CHECK(sheaf.rank == 2);
    CHECK(sheaf.fibers.at("P0") == std::vector<long>{1, 0});
    CHECK(sheaf_from_json(sheaf_to_json(sheaf)).fibers == sheaf.fibers);

    Json dj = {{"entries", {{"P0", 3}}}, {"unramified_orbits", {{"F0", -1}}}};
    EquivariantDivisorData div = divisor_from_json(dj);
    CHECK(div.entries.at("P0") == 3);
    CHECK(div.unramified_orbits.at("F0") == -1);
    CHECK(divisor_to_json(div) == dj);

    CHECK_THROWS_AS(sheaf_from_json(Json{{"degree", 0}}), IoError);
    CHECK_THROWS_AS(cover_from_json(Json{{"group", "C2"}}), IoError);
}

TEST_CASE("etale sheaf file") {
    Json j = {{"l", 3},
              {"generic_dim", 1},
              {"branch_stalks", {{"P0", {{"exponents", {0}}, {"alpha", 2}}}}},
              {"free_orbits", {{{"label", "F0"}, {"stalk_dim", 0}, {"alpha", 1}}}}};
    EtaleSheafData f = etale_from_json(j);
    CHECK(f.l == 3);
    CHECK(f.branch_stalks.at("P0").alpha == 2);
    REQUIRE(f.free_orbits.size() == 1);
    CHECK(f.free_orbits[0].stalk_dim == 0);
    CHECK(etale_to_json(f) == j);
    CHECK_THROWS_AS(etale_from_json(Json{{"l", 3}}), IoError);
}

TEST_CASE("virtual representation round trip") {
    auto s3 = table_builtin("S3");
    VirtualRep v(s3.table, {Rational(1), Rational(-3, 2), Rational(0)});
    Json j = vr_to_json(v);
    CHECK(j["mult"].size() == 2);  // zero entries omitted
    CHECK(vr_from_json(j, s3.table) == v);

    Json bad = j;
    bad["mult"]["nope"] = "1";
    CHECK_THROWS_AS(vr_from_json(bad, s3.table), IoError);
}

TEST_CASE("group resolution precedence") {
    GroupWithTable builtin = resolve_group("S3", "", "");
    CHECK(builtin.table->size() == 3);
    CHECK_THROWS_AS(resolve_group("nosuch", "", ""), IoError);

    // custom abelian group file without a table: characters are derived
    auto c6 = table_builtin("C6");
    std::string gpath = "/tmp/equichar_group.json";
    save_json_file(gpath, group_to_json(*c6.group));
    GroupWithTable from_file = resolve_group("ignored", gpath, "");
    CHECK(from_file.table->size() == 6);

    // non-abelian group file alone is rejected, with a table file it works
    std::string spath = "/tmp/equichar_s3_group.json";
    std::string tpath = "/tmp/equichar_s3_table.json";
    auto s3 = table_builtin("S3");
    save_json_file(spath, group_to_json(*s3.group));
    save_json_file(tpath, table_to_json(*s3.table));
    CHECK_THROWS_AS(resolve_group("ignored", spath, ""), IoError);
    GroupWithTable full = resolve_group("ignored", spath, tpath);
    CHECK(full.table->size() == 3);

    // a table file alone resolves its builtin group reference
    GroupWithTable table_only = resolve_group("ignored", "", tpath);
    CHECK(table_only.table->size() == 3);

    CHECK_THROWS_AS(load_json_file("/tmp/equichar_missing.json"), IoError);
}
