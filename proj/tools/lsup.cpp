#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsup/classify.hpp"
#include "lsup/error.hpp"
#include "lsup/fixtures.hpp"
#include "lsup/frattini.hpp"
#include "lsup/invariants.hpp"
#include "lsup/io.hpp"
#include "lsup/module.hpp"
#include "lsup/rootsys.hpp"
#include "lsup/structure.hpp"

using namespace lsup;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalidInput = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dims(const std::vector<Subspace>& terms) {
    std::string s;
    for (const auto& t : terms) s += (s.empty() ? "" : " ") + std::to_string(t.dim());
    return s;
}

Json dims_json(const std::vector<Subspace>& terms) {
    Json a = Json::array();
    for (const auto& t : terms) a.push_back(t.dim());
    return a;
}

std::string set_string(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + "}";
}

std::vector<Verdict> all_verdicts(const LieAlgebra& l, DecisionMode mode) {
    return {decide_MD_MN(l, mode), decide_MU(l, mode), decide_MO(l), decide_MA(l, mode)};
}

int cmd_analyze(const std::string& path, const std::string& mode_name, const std::string& format) {
    LieAlgebra l;
    try {
        l = load_algebra(path);
    } catch (const Error& e) {
        std::cerr << "lsup: " << path << ": " << e.what() << "\n";
        return kInvalidInput;
    }
    const DecisionMode mode = mode_name == "base" ? DecisionMode::Base : DecisionMode::Closure;
    const StructuralFlags flags = structural_flags(l);
    const SeriesReport sr = series(l);
    const std::size_t rdim = radical(l).dim();
    const std::size_t ndim = nilradical(l).dim();
    const std::size_t adim = asoc(l).dim();
    std::optional<FrattiniReport> phi;
    try {
        phi = frattini_ideal(l);
    } catch (const NotSolvable&) {
    } catch (const Unsupported&) {
    }
    const std::vector<Verdict> verdicts = all_verdicts(l, mode);

    if (format == "json") {
        Json out = Json::object();
        out["file"] = path;
        out["field"] = field_to_json(l.field());
        out["dim"] = l.dim();
        Json f = Json::object();
        f["solvable"] = flags.solvable;
        f["nilpotent"] = flags.nilpotent;
        f["completely_solvable"] = flags.completely_solvable;
        f["metabelian"] = flags.metabelian;
        f["supersolvable"] = flags.supersolvable_basefield;
        f["semisimple"] = flags.semisimple;
        out["flags"] = f;
        out["derived_series"] = dims_json(sr.derived);
        out["lower_central_series"] = dims_json(sr.lower_central);
        out["radical_dim"] = rdim;
        out["nilradical_dim"] = ndim;
        out["asoc_dim"] = adim;
        out["phi_dim"] = phi ? Json(phi->phi.dim()) : Json();
        Json v = Json::object();
        for (const auto& x : verdicts) v[x.cls] = verdict_to_json(x);
        out["verdicts"] = v;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "file: " << path << "\n";
    std::cout << "field: " << l.field().to_string() << "\n";
    std::cout << "dim: " << l.dim() << "\n";
    std::cout << "solvable: " << yes_no(flags.solvable) << "\n";
    std::cout << "nilpotent: " << yes_no(flags.nilpotent) << "\n";
    std::cout << "completely solvable: " << yes_no(flags.completely_solvable) << "\n";
    std::cout << "metabelian: " << yes_no(flags.metabelian) << "\n";
    std::cout << "supersolvable (base field): " << yes_no(flags.supersolvable_basefield) << "\n";
    std::cout << "semisimple: " << yes_no(flags.semisimple) << "\n";
    std::cout << "derived series dims: " << dims(sr.derived) << "\n";
    std::cout << "lower central series dims: " << dims(sr.lower_central) << "\n";
    std::cout << "radical dim: " << rdim << "\n";
    std::cout << "nilradical dim: " << ndim << "\n";
    std::cout << "asoc dim: " << adim << "\n";
    if (phi) {
        std::cout << "phi dim: " << phi->phi.dim() << " (" << to_string(phi->method) << ")\n";
    } else {
        std::cout << "phi dim: n/a (not solvable, not semisimple)\n";
    }
    for (const auto& v : verdicts) {
        std::cout << "verdict " << v.cls << ": " << to_string(v.value) << " [" << to_string(v.mode) << "]";
        if (!v.rule.empty()) std::cout << " by " << v.rule;
        std::cout << "\n";
        if (v.witness) {
            const auto basis = v.witness_basis.empty() ? v.witness->basis_vectors() : v.witness_basis;
            for (const auto& x : basis) std::cout << "  witness " << to_string(x) << "\n";
        }
    }
    return kOk;
}

std::string row_name(const Table1Row& r) {
    return r.family + (r.n ? " n=" + std::to_string(r.n) : "");
}

int cmd_table1(std::size_t max_n, const std::string& format) {
    std::vector<Table1Row> rows;
    try {
        rows = table1(max_n);
    } catch (const Error& e) {
        std::cerr << "lsup: " << e.what() << "\n";
        return kInvalidInput;
    }
    const std::vector<std::string> head = {"row",      "L",         "dim L",     "table dim L", "rank",
                                           "M",        "dim M",     "alpha",     "M (gamma)",   "dim M (gamma)",
                                           "gamma",    "table gamma", "M+alpha<L", "M+gamma<L",  "gamma check",
                                           "M check",  "status",    "alpha note"};
    auto cells = [](const Table1Row& r) {
        auto pf = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
        return std::vector<std::string>{
            row_name(r),
            r.algebra,
            std::to_string(r.L_dim),
            std::to_string(r.table_L_dim),
            std::to_string(r.rank),
            r.M_label,
            std::to_string(r.M_dim),
            std::to_string(r.alpha),
            r.M_nil_label,
            std::to_string(r.M_nil_dim),
            std::to_string(r.gamma),
            std::to_string(r.table_gamma),
            pf(r.alpha_ineq),
            pf(r.gamma_ineq),
            pf(r.gamma_match && r.dims_match),
            r.M_dim_regular ? pf(r.M_match) + " (" + std::to_string(*r.M_dim_regular) + ")" : std::string("n/a"),
            pf(r.pass()),
            r.alpha_note};
    };
    auto csv_cell = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    if (format == "csv") {
        for (std::size_t k = 0; k < head.size(); ++k) std::cout << (k ? "," : "") << csv_cell(head[k]);
        std::cout << "\n";
        for (const auto& r : rows) {
            const auto c = cells(r);
            for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << csv_cell(c[k]);
            std::cout << "\n";
        }
    } else {
        std::cout << "|";
        for (const auto& h : head) std::cout << " " << h << " |";
        std::cout << "\n|";
        for (std::size_t k = 0; k < head.size(); ++k) std::cout << "---|";
        std::cout << "\n";
        for (const auto& r : rows) {
            std::cout << "|";
            for (const auto& c : cells(r)) std::cout << " " << c << " |";
            std::cout << "\n";
        }
    }
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.pass() ? 0 : 1;
    std::cerr << "table1: " << rows.size() << " rows, " << rows.size() - failed << " PASS, " << failed << " FAIL\n";
    for (const auto& r : rows) {
        if (r.pass()) continue;
        std::cerr << "  FAIL " << row_name(r) << " (" << r.algebra << "):";
        if (!r.dims_match) std::cerr << " dim L " << r.L_dim << " vs " << r.table_L_dim << ";";
        if (!r.gamma_match) std::cerr << " gamma " << r.gamma << " vs " << r.table_gamma << ";";
        if (!r.alpha_ineq) std::cerr << " M+alpha >= L;";
        if (!r.gamma_ineq) std::cerr << " M+gamma >= L;";
        if (!r.M_match) std::cerr << " regular M dim differs;";
        std::cerr << "\n";
    }
    return failed ? kCheckFailed : kOk;
}

std::optional<std::vector<std::size_t>> parse_index_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 1) return std::nullopt;
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return out;
}

int cmd_parabolic(const std::string& type, std::size_t rank, const std::string& sigma1) {
    RootSystem rs;
    try {
        rs = build_root_system(parse_root_type(type), rank);
    } catch (const Error& e) {
        std::cerr << "lsup: " << e.what() << "\n";
        return kInvalidInput;
    }
    auto report = [&](const std::vector<std::size_t>& s) {
        const ParabolicDatum pd = parabolic(rs, s);
        const bool ab = nilradical_abelian(pd);
        std::cout << "sigma1 " << set_string(s) << ": dim P " << pd.dim_P << ", levi " << pd.dim_levi << ", nilradical "
                  << pd.dim_nilradical << ", abelian nilradical: " << yes_no(ab) << "\n";
        return ab;
    };
    std::cout << rs.name() << " (dim " << rs.lie_dim() << ")\n";
    if (!sigma1.empty()) {
        const auto s = parse_index_list(sigma1);
        if (!s) {
            std::cerr << "lsup: invalid --sigma1 list '" << sigma1 << "'\n";
            return kInvalidInput;
        }
        try {
            report(*s);
        } catch (const Error& e) {
            std::cerr << "lsup: " << e.what() << "\n";
            return kInvalidInput;
        }
        return kOk;
    }
    std::vector<std::size_t> found;
    for (std::size_t i = 1; i <= rank; ++i)
        if (report({i})) found.push_back(i);
    const auto expected = expected_abelian_parabolics(rs.type, rank);
    std::cout << "abelian at " << set_string(found) << ", expected " << set_string(expected) << ": "
              << (found == expected ? "MATCH" : "MISMATCH") << "\n";
    return found == expected ? kOk : kCheckFailed;
}

int cmd_chevalley(const std::string& type, std::size_t rank, const std::string& out_path) {
    RootSystem rs;
    try {
        rs = build_root_system(parse_root_type(type), rank);
    } catch (const Error& e) {
        std::cerr << "lsup: " << e.what() << "\n";
        return kInvalidInput;
    }
    if (rs.type == RootType::D && rank == 3) std::cerr << "lsup: warning: D3 is A3 with a different numbering\n";
    const LieAlgebra l = chevalley_constants(rs);
    const std::string text = algebra_to_json(l).dump(1) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "lsup: cannot write " << out_path << "\n";
        return kInvalidInput;
    }
    out << text;
    std::cerr << "wrote " << rs.name() << " (dim " << l.dim() << ") to " << out_path << "\n";
    return kOk;
}

int cmd_fixtures(const std::string& dir, const std::string& format, bool timings) {
    std::vector<Fixture> fixtures;
    try {
        fixtures = load_fixtures(dir);
    } catch (const Error& e) {
        std::cerr << "lsup: " << e.what() << "\n";
        return kInvalidInput;
    }
    bool ok = true;
    const std::vector<PropertyResult> results = run_invariants(fixtures);
    Json jl = Json::array();
    for (const auto& f : fixtures) {
        const bool expected_fail = f.expects_load_error();
        const bool good = f.algebra ? !expected_fail : expected_fail;
        ok = ok && good;
        if (format == "json") {
            Json e = Json::object();
            e["fixture"] = f.name;
            e["loaded"] = f.algebra.has_value();
            e["expected_load_error"] = expected_fail;
            e["error"] = f.load_error.empty() ? Json() : Json(f.load_error);
            jl.push_back(e);
            continue;
        }
        std::cout << "load " << f.name << ": ";
        if (f.algebra) {
            std::cout << (expected_fail ? "loaded, but a load error was expected" : "ok") << "\n";
        } else {
            std::cout << (expected_fail ? "rejected as expected: " : "FAILED: ") << f.load_error << "\n";
        }
    }
    double total = 0;
    Json jp = Json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        total += r.seconds;
        if (format == "json") {
            Json e = Json::object();
            e["module"] = r.module;
            e["property"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            if (timings) e["seconds"] = r.seconds;
            jp.push_back(e);
            continue;
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.module << ": " << r.name << " (" << r.detail << ")";
        if (timings) std::cout << " " << r.seconds << "s";
        std::cout << "\n";
    }
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    if (format == "json") {
        Json out = Json::object();
        out["loads"] = jl;
        out["properties"] = jp;
        out["pass"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "properties: " << results.size() << ", failed: " << failed << "\n";
    }
    if (timings) std::cerr << "total " << total << "s\n";
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie algebra toolkit for maximal-subalgebra supplements"};
    app.require_subcommand(1);

    std::string file;
    std::string mode = "closure";
    std::string aformat = "text";
    auto* analyze = app.add_subcommand("analyze", "Structural report and class verdicts for a structure-constant file");
    analyze->add_option("file", file, "structure-constant JSON file")->required();
    analyze->add_option("--mode", mode, "decider semantics")->check(CLI::IsMember({"base", "closure"}));
    analyze->add_option("--format", aformat, "output format")->check(CLI::IsMember({"text", "json"}));

    std::size_t max_n = 4;
    std::string tformat = "md";
    auto* t1 = app.add_subcommand("table1", "Regenerate and check Table 1");
    t1->add_option("--max-n", max_n, "largest family parameter")->required();
    t1->add_option("--format", tformat, "output format")->check(CLI::IsMember({"csv", "md"}));

    std::string type;
    std::size_t rank = 0;
    std::string sigma1;
    auto* par = app.add_subcommand("parabolic", "Abelian nilradicals of standard parabolics");
    par->add_option("--type", type, "root system type A..G")->required();
    par->add_option("--rank", rank, "rank")->required();
    par->add_option("--sigma1", sigma1, "comma-separated 1-based simple roots; default scans all singletons");

    std::string out_path;
    auto* chev = app.add_subcommand("chevalley", "Write Chevalley-basis structure constants");
    chev->add_option("--type", type, "root system type A..G")->required();
    chev->add_option("--rank", rank, "rank")->required();
    chev->add_option("-o,--output", out_path, "output file ('-' for stdout)")->required();

    std::string dir = default_fixture_dir();
    std::string fformat = "text";
    bool timings = false;
    auto* fx = app.add_subcommand("fixtures", "Run every invariant over the fixture corpus");
    fx->add_option("--dir", dir, "fixture directory");
    fx->add_option("--format", fformat, "output format")->check(CLI::IsMember({"text", "json"}));
    fx->add_flag("--timings", timings, "report per-property run time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalidInput;
    }
    try {
        if (*analyze) return cmd_analyze(file, mode, aformat);
        if (*t1) return cmd_table1(max_n, tformat);
        if (*par) return cmd_parabolic(type, rank, sigma1);
        if (*chev) return cmd_chevalley(type, rank, out_path);
        if (*fx) return cmd_fixtures(dir, fformat, timings);
    } catch (const Error& e) {
        std::cerr << "lsup: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kInvalidInput;
}
