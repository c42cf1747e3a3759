#include "hcn/cusps.hpp"
#include "hcn/fixtures.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/intersect.hpp"
#include "hcn/kernels.hpp"
#include "hcn/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using hcn::ExactRational;
using hcn::i64;
using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for problems with the arguments rather than with the computation.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long to_ll(const hcn::BigInt& v) { return v.convert_to<long long>(); }

json rational_json(const ExactRational& r) { return {{"num", to_ll(r.numerator())}, {"den", to_ll(r.denominator())}}; }

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_level(i64 level) {
    if (!hcn::is_genus_zero(level)) throw UsageError("level not genus zero: " + std::to_string(level));
}

int cmd_class_number(i64 level, i64 disc, const std::string& format) {
    require_level(level);
    const ExactRational v = hcn::hurwitz_level(level, disc);
    if (format == "json") {
        json j = envelope("class-number");
        j["level"] = level;
        j["disc"] = disc;
        j.update(rational_json(v));
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "disc,value_num,value_den\n" << disc << ',' << v.numerator() << ',' << v.denominator() << '\n';
    } else {
        std::cout << v << '\n';
    }
    return 0;
}

int cmd_table(i64 level, i64 max_disc, const std::string& format) {
    require_level(level);
    if (max_disc < 0) throw UsageError("--max-disc must be non-negative");
    std::vector<std::pair<i64, ExactRational>> rows;
    for (i64 D = 0; D <= max_disc; ++D)
        if (D % 4 == 0 || D % 4 == 3) rows.emplace_back(D, hcn::hurwitz_level(level, D));
    if (format == "json") {
        json j = envelope("table");
        j["level"] = level;
        j["rows"] = json::array();
        for (const auto& [D, v] : rows) {
            json row = {{"disc", D}};
            row.update(rational_json(v));
            j["rows"].push_back(row);
        }
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "disc,value_num,value_den\n";
        for (const auto& [D, v] : rows) std::cout << D << ',' << v.numerator() << ',' << v.denominator() << '\n';
    } else {
        std::cout << "D\tH" << (level == 1 ? "" : "^" + std::to_string(level)) << "(D)\n";
        for (const auto& [D, v] : rows) std::cout << D << '\t' << v << '\n';
    }
    return std::cout ? 0 : kExitFailure;
}

int cmd_sum_table(i64 level, i64 max_n, const std::string& format) {
    if (level != 0) require_level(level);
    if (max_n < 1) throw UsageError("--max-n must be positive");
    const auto rows = hcn::s_table(level, max_n);
    if (format == "json") {
        json j = envelope("sum-table");
        j["level"] = level;
        j["rows"] = json::array();
        for (const auto& [N, v] : rows) {
            json row = {{"n", N}};
            row.update(rational_json(v));
            j["rows"].push_back(row);
        }
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "n,value_num,value_den\n";
        for (const auto& [N, v] : rows) std::cout << N << ',' << v.numerator() << ',' << v.denominator() << '\n';
    } else {
        std::cout << "N\tS" << (level <= 1 ? "" : "^" + std::to_string(level)) << "(N)\n";
        for (const auto& [N, v] : rows) std::cout << N << '\t' << v << '\n';
    }
    return 0;
}

std::string join_labels(const std::vector<hcn::CuspClass>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : " ") + c.label();
    return out.empty() ? "-" : out;
}

int cmd_cusps(i64 level, bool classify, const std::string& format) {
    require_level(level);
    const auto cs = hcn::cusps(level);
    const auto part = hcn::classify_cusps(level);
    auto group_of = [&](const hcn::CuspClass& c) -> std::string {
        for (const auto& x : part.both)
            if (x == c) return "gamma0-and-g0";
        for (const auto& x : part.gamma0_only)
            if (x == c) return "gamma0-only";
        return "neither";
    };
    if (format == "json") {
        json j = envelope("cusps");
        j["level"] = level;
        j["cusps"] = json::array();
        for (const auto& c : cs) {
            json row = {{"label", c.label()}, {"n", c.n}, {"l", c.l}, {"m", c.m_over_M}};
            if (classify) row["normalizer"] = group_of(c);
            j["cusps"].push_back(row);
        }
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "label,n,l,m" << (classify ? ",normalizer" : "") << '\n';
        for (const auto& c : cs) {
            std::cout << c.label() << ',' << c.n << ',' << c.l << ',' << c.m_over_M;
            if (classify) std::cout << ',' << group_of(c);
            std::cout << '\n';
        }
    } else {
        std::cout << cs.size() << " cusps: " << join_labels(cs) << '\n';
        for (const auto& c : cs)
            std::cout << "  " << c.label() << "\tn=" << c.n << "\tm/M=" << c.m_over_M << '/' << level << '\n';
        if (classify) {
            std::cout << "normalizing Gamma0 and G0: " << join_labels(part.both) << '\n';
            std::cout << "normalizing Gamma0 only:   " << join_labels(part.gamma0_only) << '\n';
            std::cout << "not normalizing Gamma0:    " << join_labels(part.neither) << '\n';
        }
    }
    return 0;
}

int cmd_involution(i64 level, i64 m, const std::string& format) {
    require_level(level);
    if (m < 0 || m >= level) throw UsageError("--m must satisfy 0 <= m < level");
    const auto W = hcn::gen_atkin_lehner(level, m);
    const i64 Mp = hcn::involution_subgroup_level(level, m);
    const bool g0 = hcn::normalizes_gamma0(level, m);
    const bool G0 = hcn::normalizes_g0(level, m);
    const bool sub = hcn::normalizes_gamma0_Mprime(level, Mp, m);
    if (format == "json") {
        json j = envelope("involution");
        j["level"] = level;
        j["m"] = m;
        j["scale"] = W.scale;
        j["matrix"] = {{W.mat.p, W.mat.q}, {W.mat.r, W.mat.s}};
        j["subgroup_level"] = Mp;
        j["normalizes_gamma0"] = g0;
        j["normalizes_g0"] = G0;
        j["normalizes_gamma0_subgroup"] = sub;
        emit_json(j);
    } else {
        std::cout << "level " << level << "  m " << m << '\n';
        std::cout << "D = " << W.scale << '\n';
        std::cout << "matrix " << W.mat << '\n';
        std::cout << "normalizes Gamma0(" << level << "): " << yes_no(g0) << '\n';
        std::cout << "normalizes G0(" << level << "): " << yes_no(G0) << '\n';
        std::cout << "normalizes Gamma0^(" << Mp << ")(" << level << "): " << yes_no(sub) << '\n';
    }
    return 0;
}

int cmd_intersect(i64 level, i64 n1, i64 n2, const std::string& format) {
    require_level(level);
    if (n1 < 1 || n2 < 1) throw UsageError("--n1 and --n2 must be positive");
    const i64 global = hcn::global_intersection(n1, n2);
    const i64 cusp = hcn::total_cusp_multiplicity(level, n1, n2);
    const ExactRational affine = hcn::affine_intersection(level, n1, n2);
    const auto rep = hcn::verify_identity(level, n1, n2);
    if (format == "json") {
        json j = envelope("intersect");
        j["level"] = level;
        j["n1"] = n1;
        j["n2"] = n2;
        j["global"] = global;
        j["cusps"] = cusp;
        j["affine"] = rational_json(affine);
        j["class_number_sum"] = rational_json(rep.lhs);
        j["case"] = rep.case_label;
        j["pass"] = rep.pass;
        emit_json(j);
    } else {
        std::cout << "global " << global << '\n';
        std::cout << "cusps " << cusp << '\n';
        std::cout << "affine " << affine << '\n';
        std::cout << "class-number sum " << rep.lhs << '\n';
        std::cout << "case " << rep.case_label << ": " << (rep.pass ? "pass" : "FAIL") << '\n';
    }
    return rep.pass && global == affine.to_int64() + cusp ? 0 : kExitFailure;
}

int cmd_verify(const std::string& suite, i64 level, i64 max_n, const std::string& fixtures, unsigned jobs,
               const std::string& format) {
    if (level != 0) require_level(level);
    if (jobs == 0) jobs = hcn::default_jobs();
    hcn::SuiteReport rep;
    if (suite == "eichler") {
        rep = hcn::run_eichler(hcn::suite_levels(level), max_n, jobs);
    } else if (suite == "general") {
        rep = hcn::run_general(hcn::suite_levels(level), max_n, jobs);
    } else if (suite == "decompose") {
        rep = hcn::run_decompose(hcn::suite_levels(level), max_n, jobs);
    } else if (suite == "conjecture") {
        rep = hcn::run_conjecture(hcn::suite_levels(level), max_n, jobs);
    } else {
        const auto set = hcn::load_fixtures(fixtures.empty() ? hcn::default_fixture_dir() : fixtures);
        rep = suite == "tables" ? hcn::run_tables(set, jobs) : hcn::run_sums(set, jobs);
    }
    if (format == "json") {
        json j = envelope("verify");
        j["suite"] = rep.suite;
        j["proven"] = rep.proven;
        j["passed"] = rep.passed();
        j["failed"] = rep.failed();
        j["cases"] = json::array();
        for (const auto& c : rep.cases) j["cases"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "name,pass,detail\n";
        for (const auto& c : rep.cases) std::cout << '"' << c.name << "\"," << (c.pass ? 1 : 0) << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : rep.cases) std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "  " << c.detail << '\n';
        std::cout << rep.suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
    }
    if (!rep.proven && rep.failed() > 0)
        std::cerr << "warning: " << rep.failed() << " conjecture case(s) disagree; statement is conjectural\n";
    return rep.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-M Hurwitz class numbers, cusps and intersection identities for genus-zero X0(M)"};
    app.require_subcommand(1);

    std::string format = "text";
    i64 level = 0, disc = 0, m = 0, n1 = 0, n2 = 0, max_n = 25, max_disc = 100;
    bool classify = false;
    unsigned jobs = 0;
    std::string fixtures, suite;
    const std::vector<std::string> formats = {"text", "csv", "json"};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* c_class = app.add_subcommand("class-number", "Print H^M(D)");
    c_class->add_option("--level", level, "Level M")->required();
    c_class->add_option("--disc", disc, "Discriminant D >= 0")->required();
    add_format(c_class);

    auto* c_table = app.add_subcommand("table", "Table of H^M(D) for D = 0, 3 mod 4");
    c_table->add_option("--level", level, "Level M")->required();
    c_table->add_option("--max-disc", max_disc, "Largest D");
    add_format(c_table);

    auto* c_cusps = app.add_subcommand("cusps", "Cusp classes of X0(M)");
    c_cusps->add_option("--level", level, "Level M")->required();
    c_cusps->add_flag("--classify", classify, "Group cusps by the normalizers that reach them");
    add_format(c_cusps);

    auto* c_inv = app.add_subcommand("involution", "Generalized Atkin-Lehner involution W_m");
    c_inv->add_option("--level", level, "Level M")->required();
    c_inv->add_option("--m", m, "Index 0 <= m < M")->required();
    add_format(c_inv);

    auto* c_int = app.add_subcommand("intersect", "Intersection numbers of T_N1 and T_N2");
    c_int->add_option("--level", level, "Level M")->required();
    c_int->add_option("--n1", n1, "Degree N1")->required();
    c_int->add_option("--n2", n2, "Degree N2")->required();
    add_format(c_int);

    auto* c_sum = app.add_subcommand("sum-table", "S^M(N) = sum over x^2 <= 4N of H^M(4N - x^2)");
    c_sum->add_option("--level", level, "Level M (0 or 1 for the classical sums)")->required();
    c_sum->add_option("--max-n", max_n, "Largest N");
    add_format(c_sum);

    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"eichler", "general", "tables", "sums", "conjecture", "decompose"}));
    c_verify->add_option("--level", level, "Restrict to one level");
    c_verify->add_option("--max-n", max_n, "Largest N (or N1, N2)");
    c_verify->add_option("--fixtures", fixtures, "Directory with golden table CSVs");
    c_verify->add_option("--jobs", jobs, "Worker threads (default: all processors)");
    add_format(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_class->parsed()) return cmd_class_number(level, disc, format);
        if (c_table->parsed()) return cmd_table(level, max_disc, format);
        if (c_cusps->parsed()) return cmd_cusps(level, classify, format);
        if (c_inv->parsed()) return cmd_involution(level, m, format);
        if (c_int->parsed()) return cmd_intersect(level, n1, n2, format);
        if (c_sum->parsed()) return cmd_sum_table(level, max_n, format);
        if (c_verify->parsed()) return cmd_verify(suite, level, max_n, fixtures, jobs, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
