// hypertoric: command-line front end.
//
// Exit codes: 0 success, 1 parse or usage error, 2 validation failure
// (datum rejected or a verification check failed), 3 resource budget
// exceeded (including the random-sampling attempt cap).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "hypertoric/random_datum.hpp"
#include "hypertoric/report.hpp"

using namespace hypertoric;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3 };

struct Settings {
    std::string format = "json";
    std::string order = "grevlex";
    std::string u_extra;
    std::size_t budget = Budget{}.max_reductions;
    std::uint64_t seed = 0;
    bool zz = false;
};

void emit(const ordered_json& report, const Settings& s) {
    if (s.format == "text")
        std::cout << render_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

ReportOptions options_for(const Settings& s, const Datum* d) {
    ReportOptions o;
    o.order = *parse_order(s.order);
    o.budget.max_reductions = s.budget;
    o.seed = s.seed;
    o.zz = s.zz;
    if (d != nullptr) o.u_extra = parse_u_list(s.u_extra, d->n());
    return o;
}

/// Runs `body` with the report under construction; budget failures keep what
/// was built so far and add an error block.
template <class Body>
int run_report(const std::string& command, const Settings& s, const Datum& d, Body body) {
    ordered_json report;
    report["input"] = datum_to_json(d);
    ReportOptions opts = options_for(s, &d);
    int code = kOk;
    try {
        code = body(report, opts);
    } catch (const ResourceBudgetExceeded& e) {
        report["error"] = {{"kind", "ResourceBudgetExceeded"}, {"message", e.what()}};
        code = kBudget;
    }
    report["meta"] = meta_block(command, opts);
    emit(report, s);
    if (code == kBudget) std::cerr << "error: resource budget exceeded: " << report["error"]["message"].get<std::string>() << "\n";
    return code;
}

int cmd_validate(const std::string& path, const Settings& s) {
    auto d = read_datum_file(path);
    return run_report("validate", s, d, [&](ordered_json& r, const ReportOptions&) {
        r["smoothness"] = smoothness_block(d);
        return admissible(d) ? kOk : kInvalid;
    });
}

int cmd_analyze(const std::string& path, const Settings& s) {
    auto d = read_datum_file(path);
    return run_report("analyze", s, d, [&](ordered_json& r, const ReportOptions&) {
        r["smoothness"] = smoothness_block(d);
        if (!admissible(d)) return kInvalid;
        r["arrangement"] = arrangement_block(d);
        return kOk;
    });
}

int cmd_present(const std::string& command, const std::string& path, const std::string& which, bool verify,
                const Settings& s) {
    auto d = read_datum_file(path);
    return run_report(command, s, d, [&](ordered_json& r, const ReportOptions& opts) {
        r["smoothness"] = smoothness_block(d);
        if (!admissible(d)) return kInvalid;
        if (which != "ktheory") r["cohomology"] = cohomology_block(d, opts);
        if (which != "cohomology") r["ktheory"] = ktheory_block(d, opts);
        r["ranks"] = ranks_block(d, opts);
        if (!verify) return kOk;
        r["verification"] = verification_block(d, opts);
        return r["verification"]["pass"].get<bool>() ? kOk : kInvalid;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology and K-theory presentations of toric hyperkaehler varieties from arrangement data"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--order", s.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex", "grlex"}));
    app.add_option("--u-extra", s.u_extra, "Extra u-vectors for verification, e.g. \"1,1;2,-1\"");
    app.add_option("--budget", s.budget, "Maximum reductions per Groebner computation");
    app.add_option("--seed", s.seed, "Seed for all sampled data");
    app.add_flag("--zz", s.zz, "Also compute strong Groebner bases over the integers");

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check that a datum is split and smooth");
    validate->add_option("path", path, "Datum file")->required();

    auto* analyze = app.add_subcommand("analyze", "Hyperplanes, minimal empty subsets and vertices");
    analyze->add_option("path", path, "Datum file")->required();

    std::string which = "both";
    bool verify_flag = false;
    auto* present = app.add_subcommand("present", "Ring presentations, reduced Groebner bases and ranks");
    present->add_option("path", path, "Datum file")->required();
    present->add_option("--which", which, "Which presentation")->check(CLI::IsMember({"cohomology", "ktheory", "both"}));
    present->add_flag("--verify", verify_flag, "Run the verification checks");

    auto* verify = app.add_subcommand("verify", "Same as: present --which both --verify");
    verify->add_option("path", path, "Datum file")->required();

    std::string kind;
    std::size_t n = 0;
    auto* example = app.add_subcommand("example", "Print a built-in datum");
    example->add_option("kind", kind, "Example family")->required()->check(CLI::IsMember({"cotangent"}));
    example->add_option("n", n, "Dimension")->required()->check(CLI::PositiveNumber);

    std::size_t rm = 0, rn = 0;
    auto* random = app.add_subcommand("random", "Sample a split smooth datum");
    random->add_option("m", rm, "Number of hyperplanes")->required();
    random->add_option("n", rn, "Dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(path, s);
        if (*analyze) return cmd_analyze(path, s);
        if (*present) return cmd_present("present", path, which, verify_flag, s);
        if (*verify) return cmd_present("verify", path, "both", true, s);
        if (*example) {
            std::cout << emit_datum(cotangent_projective_datum(n));
            return kOk;
        }
        if (*random) {
            if (rn < 1 || rm < rn) {
                std::cerr << "error: random needs m >= n >= 1\n";
                return kUsage;
            }
            auto r = random_datum(rm, rn, s.seed);
            std::cerr << "attempts: " << r.attempts << "\n";
            std::cout << emit_datum(r.datum);
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GiveUp& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const ResourceBudgetExceeded& e) {
        std::cerr << "error: resource budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
