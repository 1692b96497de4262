#include "equichar/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace equichar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotRealizable = 2;
constexpr int kExitDisagreement = 3;

struct CommonOpts {
    std::string group_file;
    std::string table_file;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--group", opts.group_file, "group file overriding the cover's group name");
    cmd->add_option("--table", opts.table_file, "character table file");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opts.out, "also write the JSON report to this file");
}

// Accumulates the run report in both shapes at once; text lines go to stdout
// unless --format json is chosen.
struct Report {
    Json json = Json::object();
    std::vector<std::string> text;
    bool realizable = true;
    bool engines_agree = true;

    void line(const std::string& s) { text.push_back(s); }

    void cover_summary(const TameCover& cover) {
        json["cover"] = {{"group", cover.table()->group()->name()},
                         {"degree", cover.degree()},
                         {"g_Y", cover.genus_base()},
                         {"g_X", cover.genus_total()},
                         {"warnings", cover.warnings()}};
        line("cover: group " + cover.table()->group()->name() + ", degree " +
             std::to_string(cover.degree()) + ", g_Y = " + std::to_string(cover.genus_base()) +
             ", g_X = " + std::to_string(cover.genus_total()));
        for (const auto& w : cover.warnings()) {
            realizable = false;
            line("warning: " + w);
        }
    }

    void engine(const std::string& name, const EngineResult& r, const std::string& describe) {
        Json certs = Json::array();
        for (const auto& c : r.certificates) {
            certs.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            if (!c.ok) realizable = false;
        }
        json["results"][name] = {{"value", vr_to_json(r.value)}, {"certificates", certs}};
        line(name + ": " + describe + " = " + r.value.str());
        for (const auto& c : r.certificates) {
            if (!c.ok) line("  certificate " + c.name + " failed: " + c.detail);
        }
    }

    void multiplicities(const std::string& name, const std::string& describe,
                        const std::map<std::string, Rational>& mult) {
        Json m = Json::object();
        std::string row;
        for (const auto& [label, value] : mult) {
            m[label] = rational_to_string(value);
            if (!row.empty()) row += ", ";
            row += label + ": " + rational_to_string(value);
        }
        json["results"][name] = {{"multiplicities", m}};
        line(name + ": " + describe + " " + (row.empty() ? "(none admissible)" : row));
    }

    void cross_check(const std::string& left, const std::string& right, bool equal) {
        if (!json.contains("cross_checks")) json["cross_checks"] = Json::array();
        json["cross_checks"].push_back(Json{{"left", left}, {"right", right}, {"equal", equal}});
        if (!equal) engines_agree = false;
        line("cross-check " + left + " == " + right + ": " + (equal ? "ok" : "DISAGREE"));
    }

    int exit_code() const {
        if (!engines_agree) return kExitDisagreement;
        if (!realizable) return kExitNotRealizable;
        return kExitOk;
    }
};

int finish(Report& report, const CommonOpts& opts) {
    int code = report.exit_code();
    report.json["exit"] = code;
    report.json["realizable"] = report.realizable;
    if (!opts.out.empty()) save_json_file(opts.out, report.json);
    if (opts.format == "json") {
        std::cout << report.json.dump(2) << "\n";
    } else {
        for (const auto& l : report.text) std::cout << l << "\n";
        if (code == kExitNotRealizable) std::cout << "input data is not realizable\n";
    }
    return code;
}

TameCover load_cover(const std::string& cover_file, const CommonOpts& opts, Report& report) {
    Json cj = load_json_file(cover_file);
    GroupWithTable gt = resolve_group(cover_group_ref(cj), opts.group_file, opts.table_file);
    TameCover cover = cover_validate(gt.table, cover_from_json(cj));
    report.json["inputs"]["cover"] = cj;
    report.cover_summary(cover);
    return cover;
}

bool engine_enabled(const std::string& selection, const std::string& name) {
    return selection == "all" || selection == name;
}

int run_validate(const std::string& cover_file, const CommonOpts& opts) {
    Report report;
    report.json["command"] = "validate";
    load_cover(cover_file, opts, report);
    report.line("valid");
    // warnings flag the data but the description itself is well formed
    report.realizable = true;
    return finish(report, opts);
}

// Rationally valued irreducibles, optionally without the trivial one.
std::vector<int> rational_irreducibles(const CharacterTable& table, bool include_trivial) {
    std::vector<int> out;
    for (int i = 0; i < table.size(); ++i) {
        if (!include_trivial && i == table.trivial_index()) continue;
        bool rational = true;
        for (const auto& v : table.irreducible(i).values) {
            if (!v.is_rational()) rational = false;
        }
        if (rational) out.push_back(i);
    }
    return out;
}

int run_zariski(const std::string& cover_file, const std::string& sheaf_file,
                const std::string& divisor_file, bool differentials,
                const std::string& engine, const CommonOpts& opts) {
    Report report;
    report.json["command"] = "zariski";
    report.json["engine"] = engine;
    TameCover cover = load_cover(cover_file, opts, report);
    const auto& table = cover.table();

    if (differentials) {
        EngineResult omega = differentials_cor17(cover);
        if (engine_enabled(engine, "cor17")) report.engine("cor17", omega, "H0(Omega)");
        std::map<std::string, Rational> ksir;
        for (int i : rational_irreducibles(*table, false)) {
            ksir[table->label(i)] = ksir_multiplicity_cor18(cover, i);
        }
        if (engine_enabled(engine, "cor18")) {
            report.multiplicities("cor18", "H0(Omega) multiplicities:", ksir);
        }
        if (engine_enabled(engine, "prop19")) {
            std::map<std::string, Rational> nak;
            for (int i : rational_irreducibles(*table, true)) {
                nak[table->label(i)] = prop19_multiplicity(cover, i);
            }
            report.multiplicities("prop19", "Nakajima multiplicities:", nak);
        }
        if (engine == "all") {
            for (const auto& [label, value] : ksir) {
                report.cross_check("cor17[" + label + "]", "cor18[" + label + "]",
                                   omega.value[table->index_of_label(label)] == value);
            }
            EngineResult nak = nakajima_module(cover);
            for (int i : rational_irreducibles(*table, true)) {
                report.cross_check("nakajima[" + table->label(i) + "]",
                                   "prop19[" + table->label(i) + "]",
                                   nak.value[i] == prop19_multiplicity(cover, i));
            }
        }
        return finish(report, opts);
    }

    if (!divisor_file.empty()) {
        EquivariantDivisorData divisor = divisor_from_json(load_json_file(divisor_file));
        report.json["inputs"]["divisor"] = divisor_to_json(divisor);
        CoherentSheafData od = divisor_sheaf(cover, divisor);
        report.line("divisor degree " + std::to_string(od.degree));
        EngineResult chi = euler_char_thm11(cover, od);
        if (engine_enabled(engine, "thm11")) report.engine("thm11", chi, "chi(G,X,O(D))");
        std::map<std::string, Rational> mult;
        for (int i : rational_irreducibles(*table, true)) {
            mult[table->label(i)] = divisor_euler_multiplicity_cor111(cover, divisor, i);
        }
        if (engine_enabled(engine, "cor111")) {
            report.multiplicities("cor111", "chi(G,X,O(D)) multiplicities:", mult);
        }
        if (engine == "all") {
            for (const auto& [label, value] : mult) {
                report.cross_check("thm11[" + label + "]", "cor111[" + label + "]",
                                   chi.value[table->index_of_label(label)] == value);
            }
        }
        return finish(report, opts);
    }

    CoherentSheafData sheaf = CoherentSheafData::trivial();
    if (!sheaf_file.empty()) sheaf = sheaf_from_json(load_json_file(sheaf_file));
    report.json["inputs"]["sheaf"] = sheaf_to_json(sheaf);
    std::map<std::string, EngineResult> results;
    if (engine_enabled(engine, "thm11")) {
        results.emplace("thm11", euler_char_thm11(cover, sheaf));
    }
    if (engine_enabled(engine, "cor13")) {
        results.emplace("cor13", multiplicities_cor13(cover, sheaf));
    }
    if (engine_enabled(engine, "cor14")) {
        results.emplace("cor14", euler_char_cor14(cover, sheaf));
    }
    for (const auto& [name, r] : results) report.engine(name, r, "chi(G,X,E)");
    for (auto a = results.begin(); a != results.end(); ++a) {
        for (auto b = std::next(a); b != results.end(); ++b) {
            report.cross_check(a->first, b->first, a->second.value == b->second.value);
        }
    }
    return finish(report, opts);
}

int run_etale(const std::string& cover_file, const std::string& sheaf_file,
              const std::string& engine, const CommonOpts& opts) {
    Report report;
    report.json["command"] = "etale";
    report.json["engine"] = engine;
    TameCover cover = load_cover(cover_file, opts, report);
    EtaleSheafData sheaf = etale_from_json(load_json_file(sheaf_file));
    report.json["inputs"]["etale_sheaf"] = etale_to_json(sheaf);

    if (engine_enabled(engine, "cor24")) {
        ConductorReport conductor = wild_conductor_divisibility_cor24(cover, sheaf);
        report.json["results"]["cor24"] = {{"total", conductor.total},
                                           {"divisible", conductor.divisible}};
        report.line("cor24: total wild conductor " + std::to_string(conductor.total) +
                    (conductor.divisible ? " (divisible)" : " (NOT divisible)"));
        if (!conductor.divisible) report.realizable = false;
    }
    EngineResult chi{VirtualRep(cover.table()), {}};
    if (engine_enabled(engine, "thm21")) {
        chi = etale_euler_char_thm21(cover, sheaf);
        report.engine("thm21", chi, "chi_et(G,X,F)");
    }
    if (engine_enabled(engine, "cor23")) {
        EtaleMultiplicities mults = multiplicities_cor23(cover, sheaf);
        Json orbits = Json::array();
        std::string row;
        for (size_t o = 0; o < mults.orbits.orbits.size(); ++o) {
            Json labels = Json::array();
            std::string name;
            for (int i : mults.orbits.orbits[o]) {
                labels.push_back(cover.table()->label(i));
                name += (name.empty() ? "" : "+") + cover.table()->label(i);
            }
            orbits.push_back(Json{{"irreducibles", labels},
                                  {"s", mults.orbits.orbits[o].size()},
                                  {"subtracted", rational_to_string(mults.orbit_mult[o])}});
            if (!row.empty()) row += ", ";
            row += "{" + name + "}: " + rational_to_string(mults.orbit_mult[o]);
        }
        report.json["results"]["cor23"] = {{"scalar", rational_to_string(mults.scalar)},
                                           {"orbits", orbits},
                                           {"expanded", vr_to_json(mults.expanded)}};
        report.line("cor23: scalar " + rational_to_string(mults.scalar) +
                    ", subtracted per orbit " + row);
        report.line("cor23 expanded: " + mults.expanded.str());
        if (engine == "all") {
            report.cross_check("thm21", "cor23", chi.value == mults.expanded);
        }
    }
    if (engine == "all" && cover.branches().empty()) {
        EngineResult shortcut = etale_unramified_shortcut(cover, sheaf);
        report.engine("shortcut", shortcut, "chi_et(G,X,F)");
        report.cross_check("thm21", "shortcut", chi.value == shortcut.value);
    }
    return finish(report, opts);
}

int run_kummer(long m, const std::vector<long>& exponents, const CommonOpts& opts) {
    CoverDescription desc = kummer_cover_description(m, exponents);
    std::string group_ref = "C" + std::to_string(m);
    // the emitted description must survive validation and carry no warnings
    TameCover cover = cover_validate(table_builtin(group_ref).table, desc);
    if (!cover.warnings().empty()) {
        throw std::invalid_argument("generated cover is not realizable: " + cover.warnings()[0]);
    }
    Json cj = cover_to_json(group_ref, desc);
    if (!opts.out.empty()) {
        save_json_file(opts.out, cj);
        std::cout << "wrote " << opts.out << " (group " << group_ref << ", "
                  << desc.branches.size() << " branch orbits, g_X = " << cover.genus_total()
                  << ")\n";
    } else {
        std::cout << cj.dump(2) << "\n";
    }
    return kExitOk;
}

int run_tables(const std::string& name, const CommonOpts& opts) {
    GroupWithTable gt = resolve_group(name, opts.group_file, opts.table_file);
    if (!opts.out.empty()) save_json_file(opts.out, table_to_json(*gt.table));
    if (opts.format == "json") {
        std::cout << table_to_json(*gt.table).dump(2) << "\n";
        return kExitOk;
    }
    const FiniteGroup& g = *gt.group;
    std::cout << "group " << g.name() << " (order " << g.order() << ", " << g.class_count()
              << " classes)\n";
    std::cout << "class sizes:";
    for (int c = 0; c < g.class_count(); ++c) std::cout << " " << g.class_size(c);
    std::cout << "\nrep orders: ";
    for (int c = 0; c < g.class_count(); ++c) {
        std::cout << " " << g.element_order(g.class_rep(c));
    }
    std::cout << "\n";
    for (int i = 0; i < gt.table->size(); ++i) {
        std::cout << gt.table->label(i) << ":";
        for (const auto& v : gt.table->irreducible(i).values) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant Euler characteristics of tame covers of curves"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string cover_file, sheaf_file, divisor_file, engine_z = "all", engine_e = "all";
    bool differentials = false;
    long kummer_m = 0;
    std::vector<long> kummer_exponents;
    std::string table_name;

    CLI::App* validate = app.add_subcommand("validate", "validate a cover description");
    validate->add_option("cover", cover_file, "cover file")->required();
    add_common(validate, opts);

    CLI::App* zariski = app.add_subcommand("zariski", "coherent Euler characteristic engines");
    zariski->add_option("cover", cover_file, "cover file")->required();
    zariski->add_option("--sheaf", sheaf_file, "locally free sheaf file");
    zariski->add_option("--divisor", divisor_file, "equivariant divisor file");
    zariski->add_flag("--differentials", differentials, "compute H0 of the differentials");
    zariski->add_option("--engine", engine_z, "engine selection")
        ->check(CLI::IsMember({"all", "thm11", "cor13", "cor14", "cor17", "cor18", "prop19",
                               "cor111"}));
    add_common(zariski, opts);

    CLI::App* etale = app.add_subcommand("etale", "etale Euler characteristic engines");
    etale->add_option("cover", cover_file, "cover file")->required();
    etale->add_option("--sheaf", sheaf_file, "etale sheaf file")->required();
    etale->add_option("--engine", engine_e, "engine selection")
        ->check(CLI::IsMember({"all", "thm21", "cor23", "cor24"}));
    add_common(etale, opts);

    CLI::App* kummer = app.add_subcommand("kummer", "emit a superelliptic cover description");
    kummer->add_option("m", kummer_m, "cyclic degree")->required();
    kummer->add_option("exponents", kummer_exponents, "branch exponents")->required();
    add_common(kummer, opts);

    CLI::App* tables = app.add_subcommand("tables", "print a character table");
    tables->add_option("name", table_name, "builtin group name")->required();
    add_common(tables, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(cover_file, opts);
        if (zariski->parsed()) {
            int modes = (!sheaf_file.empty() ? 1 : 0) + (!divisor_file.empty() ? 1 : 0) +
                        (differentials ? 1 : 0);
            if (modes > 1) {
                std::cerr << "error: choose one of --sheaf, --divisor, --differentials\n";
                return kExitInput;
            }
            return run_zariski(cover_file, sheaf_file, divisor_file, differentials, engine_z,
                               opts);
        }
        if (etale->parsed()) return run_etale(cover_file, sheaf_file, engine_e, opts);
        if (kummer->parsed()) return run_kummer(kummer_m, kummer_exponents, opts);
        if (tables->parsed()) return run_tables(table_name, opts);
    } catch (const CoverValidationError& err) {
        std::cerr << "error [" << cover_error_name(err.code()) << "]: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
