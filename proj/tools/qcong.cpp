// qcong: expand q-series expressions, extract arithmetic progressions,
// run the identity suite, sweep the congruence families, cross-check
// the combinatorial oracle and print the mod-12 residue tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qcong/claims.hpp"
#include "qcong/dissect.hpp"
#include "qcong/expr.hpp"
#include "qcong/oracle.hpp"
#include "qcong/products.hpp"

using namespace qcong;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct JsonSink {
    std::string path;
    std::string command;
    std::vector<VerificationReport> reports;
    std::vector<std::string> coefficients; // expand/dissect payload

    void write() const {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw error("cannot write JSON report to " + path);
        out << reports_to_json(command, reports, coefficients) << "\n";
    }
};

void print_series(const TruncatedSeries& s, JsonSink& sink) {
    for (std::size_t n = 0; n < s.size(); ++n) {
        std::printf("%6zu  %s\n", n, s[n].get_str().c_str());
        sink.coefficients.push_back(s[n].get_str());
    }
}

void print_report_line(const VerificationReport& r) {
    std::printf("%-34s %-44s %5s  %6ld inst  order %-6ld %7.1f ms",
                r.id.c_str(), r.params.c_str(), r.pass ? "PASS" : "FAIL",
                r.instances_checked, r.order, r.runtime_ms);
    if (!r.note.empty()) std::printf("  [%s]", r.note.c_str());
    if (r.first_violation)
        std::printf("  first violation at n=%ld value=%s",
                    r.first_violation->first, r.first_violation->second.c_str());
    std::printf("\n");
}

std::pair<int, int> parse_range(const std::string& text) {
    auto whole_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    };
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = whole_int(text);
            return {v, v};
        }
        int lo = whole_int(text.substr(0, dots));
        int hi = whole_int(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw domain_error("malformed range '" + text + "', expected LO..HI");
    }
}

int cmd_expand(const std::string& expr_text, std::size_t order,
               std::optional<long> mod, JsonSink& sink) {
    TruncatedSeries s = eval(parse(expr_text), order, expr_text);
    if (mod) s = reduce_mod(s, Coeff(*mod));
    print_series(s, sink);
    sink.write();
    return kExitPass;
}

int cmd_dissect(const std::string& expr_text, long long a, long long b,
                std::size_t order, JsonSink& sink) {
    TruncatedSeries s = eval(parse(expr_text), order, expr_text);
    print_series(extract(s, Progression(a, b)), sink);
    sink.write();
    return kExitPass;
}

int cmd_identities(const std::string& fixture_file, std::size_t order,
                   JsonSink& sink) {
    std::vector<IdentityFixture> fixtures;
    if (fixture_file.empty()) {
        fixtures = builtin_fixtures();
    } else {
        std::ifstream in(fixture_file);
        if (!in) throw error("cannot read fixture file " + fixture_file);
        std::stringstream buf;
        buf << in.rdbuf();
        fixtures = parse_fixtures(buf.str());
    }
    bool all_pass = true;
    for (const auto& f : fixtures) {
        auto rep = check_identity(f, order);
        print_report_line(rep);
        all_pass = all_pass && rep.pass;
        sink.reports.push_back(std::move(rep));
    }
    std::printf("%zu fixtures, %s\n", fixtures.size(),
                all_pass ? "all pass" : "FAILURES present");
    sink.write();
    return all_pass ? kExitPass : kExitVerifyFail;
}

int cmd_theorem(const std::string& which, const SweepRanges& ranges,
                const VerifyOptions& opt, JsonSink& sink) {
    auto reports = verify_theorem_suite(which, ranges, opt);
    if (reports.empty())
        throw rejected_parameters_error(
            "no admissible parameter combinations in the requested ranges");
    bool all_pass = true;
    for (const auto& rep : reports) {
        print_report_line(rep);
        bool exploratory = !rep.id.empty() && rep.id.back() == '?';
        if (!exploratory) all_pass = all_pass && rep.pass;
    }
    std::printf("%zu claim instances, %s\n", reports.size(),
                all_pass ? "all pass" : "FAILURES present");
    sink.reports = std::move(reports);
    sink.write();
    return all_pass ? kExitPass : kExitVerifyFail;
}

int cmd_oracle(long long l1, long long l2, long long n_max, JsonSink& sink) {
    auto rep = oracle_crosscheck(l1, l2, n_max);
    print_report_line(rep);
    bool ok = rep.pass;
    sink.reports.push_back(std::move(rep));
    sink.write();
    return ok ? kExitPass : kExitVerifyFail;
}

std::string set_to_string(const std::set<int>& s) {
    std::string out = "{";
    for (int x : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(x);
    }
    return out + "}";
}

int cmd_residues(JsonSink& sink) {
    static const std::pair<ResidueFamily, const char*> families[] = {
        {ResidueFamily::Pow2TimesSquare, "2^a*n^2"},
        {ResidueFamily::Pow3TimesSquare, "3^b*n^2"},
        {ResidueFamily::Pow2SquarePlusSquare, "2^a*i^2+j^2"},
        {ResidueFamily::Pow3SquarePlusSquare, "3^b*i^2+j^2"},
        {ResidueFamily::Pow2SquarePlusPow3Square, "2^a*i^2+3^b*j^2"},
    };
    static const std::pair<Parity, const char*> parities[] = {
        {Parity::Odd, "odd"}, {Parity::Even, "even"}};

    bool all_pass = true;
    for (auto [ap, aname] : parities) {
        for (auto [bp, bname] : parities) {
            std::printf("-- alpha %s, beta %s (mod 12) --\n", aname, bname);
            for (auto [fam, fname] : families) {
                auto got = residue_table(fam, ap, bp);
                auto want = expected_residue_table(fam, ap, bp);
                bool ok = got == want;
                all_pass = all_pass && ok;
                std::printf("  %-16s computed %-18s expected %-18s %s\n", fname,
                            set_to_string(got).c_str(),
                            set_to_string(want).c_str(), ok ? "PASS" : "FAIL");
            }
        }
    }
    std::printf("20 residue tables, %s\n", all_pass ? "all pass" : "FAILURES");
    sink.reports = check_residue_tables();
    sink.write();
    return all_pass ? kExitPass : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series expansion and congruence verification"};
    app.require_subcommand(1);

    int workers = 0;
    app.add_option("--workers", workers, "worker thread count (0 = default)");

    std::string json_path;

    // expand
    auto* expand = app.add_subcommand("expand", "print series coefficients");
    std::string ex_expr;
    std::size_t ex_order = 32;
    long ex_mod = 0;
    expand->add_option("--expr", ex_expr, "expression text")->required();
    expand->add_option("--order", ex_order, "truncation order");
    expand->add_option("--mod", ex_mod, "reduce coefficients mod m");
    expand->add_option("--json", json_path, "write JSON report to PATH");

    // dissect
    auto* dissect = app.add_subcommand("dissect", "extract a progression");
    std::string di_expr;
    long long di_a = 2, di_b = 0;
    std::size_t di_order = 64;
    dissect->add_option("--expr", di_expr, "expression text")->required();
    dissect->add_option("--mod-a", di_a, "progression modulus a")->required();
    dissect->add_option("--residue", di_b, "progression residue b")->required();
    dissect->add_option("--order", di_order, "truncation order");
    dissect->add_option("--json", json_path, "write JSON report to PATH");

    // identities
    auto* identities =
        app.add_subcommand("identities", "run the identity fixture suite");
    std::string fixture_file;
    std::size_t id_order = 400;
    identities->add_option("--fixture-file", fixture_file, "fixture file path");
    identities->add_option("--order", id_order, "default truncation order");
    identities->add_option("--json", json_path, "write JSON report to PATH");

    // theorem
    auto* theorem =
        app.add_subcommand("theorem", "sweep a congruence theorem family");
    std::string which;
    theorem
        ->add_option("which", which, "thm1|thm2|thm3|thm4|all")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "all"}));
    std::string alpha_range, beta_range, k_range;
    std::size_t th_order = 0;
    long min_instances = 100;
    bool explore = false;
    theorem->add_option("--alpha", alpha_range, "alpha range LO..HI");
    theorem->add_option("--beta", beta_range, "beta range LO..HI");
    theorem->add_option("--k", k_range, "k range LO..HI");
    theorem->add_option("--order", th_order,
                        "truncation order (0 = derive from coverage)");
    theorem->add_option("--min-instances", min_instances,
                        "minimum progression members per claim");
    theorem->add_flag("--explore", explore,
                      "also report parameter combinations outside the "
                      "hypotheses (thm4), without affecting the exit code");
    theorem->add_option("--json", json_path, "write JSON report to PATH");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "series vs combinatorial counts");
    long long or_l1 = 0, or_l2 = 0, or_nmax = 60;
    oracle->add_option("--l1", or_l1, "first biregularity parameter")->required();
    oracle->add_option("--l2", or_l2, "second biregularity parameter")->required();
    oracle->add_option("--n-max", or_nmax, "check counts up to this n");
    oracle->add_option("--json", json_path, "write JSON report to PATH");

    // residues
    auto* residues =
        app.add_subcommand("residues", "mod-12 residue tables vs published sets");
    residues->add_option("--json", json_path, "write JSON report to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    set_worker_threads(workers);

    JsonSink sink;
    sink.path = json_path;
    {
        std::string cmd;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) cmd += ' ';
            cmd += argv[i];
        }
        sink.command = cmd;
    }

    try {
        if (*expand) {
            std::optional<long> mod;
            if (expand->count("--mod")) mod = ex_mod;
            return cmd_expand(ex_expr, ex_order, mod, sink);
        }
        if (*dissect) return cmd_dissect(di_expr, di_a, di_b, di_order, sink);
        if (*identities) return cmd_identities(fixture_file, id_order, sink);
        if (*theorem) {
            SweepRanges ranges;
            if (!alpha_range.empty())
                std::tie(ranges.alpha_lo, ranges.alpha_hi) =
                    parse_range(alpha_range);
            if (!beta_range.empty())
                std::tie(ranges.beta_lo, ranges.beta_hi) = parse_range(beta_range);
            if (!k_range.empty())
                std::tie(ranges.k_lo, ranges.k_hi) = parse_range(k_range);
            VerifyOptions opt;
            opt.order = th_order;
            opt.min_instances = min_instances;
            opt.explore = explore;
            return cmd_theorem(which, ranges, opt, sink);
        }
        if (*oracle) return cmd_oracle(or_l1, or_l2, or_nmax, sink);
        if (*residues) return cmd_residues(sink);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "expression error: %s\n", e.what());
        return kExitUsage;
    } catch (const rejected_parameters_error& e) {
        std::fprintf(stderr, "rejected parameters: %s\n", e.what());
        return kExitUsage;
    } catch (const template_error& e) {
        std::fprintf(stderr, "template error: %s\n", e.what());
        return kExitUsage;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitUsage;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
