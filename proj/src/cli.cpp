#include "primegalois/cli.hpp"

#include "primegalois/errors.hpp"
#include "primegalois/numtheory.hpp"
#include "primegalois/parse.hpp"
#include "primegalois/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace primegalois {

namespace {

int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 2;
}

int math_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 1;
}

struct ClassifyArgs {
    std::vector<std::string> poly_parts;
    int budget = 100;
    int effort = 20;
    bool assert_irreducible = false;
    bool json = false;
};

struct RealizeArgs {
    int p = 0;
    int n = 0;
    int cyclic_n = 0;
    bool json = false;
};

struct PeriodsArgs {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
};

struct TableArgs {
    int p = 0;
    std::string export_path;
    std::string import_path;
};

int do_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
    std::string text;
    for (size_t i = 0; i < a.poly_parts.size(); ++i) {
        if (i)
            text += " ";
        text += a.poly_parts[i];
    }
    if (a.budget < 1)
        return usage_error(err, "--budget must be positive");
    IntPoly f = parse_poly(text);
    ClassifyOptions opt;
    opt.prime_budget = a.budget;
    opt.effort = a.effort;
    opt.assume_irreducible = a.assert_irreducible;
    ClassificationReport rep = classify(f, opt);
    if (a.json)
        out << report_json(rep).dump(2) << "\n";
    else
        out << report_text(rep) << "\n";
    return 0;
}

int do_realize(const RealizeArgs& a, std::ostream& out, std::ostream& err) {
    if ((a.cyclic_n != 0) == (a.p != 0))
        return usage_error(err, "choose exactly one of --p or --cyclic");
    RealizationResult r;
    if (a.cyclic_n != 0) {
        if (a.n != 0)
            return usage_error(err, "--n only applies with --p");
        r = realize_cyclic_nonreal(a.cyclic_n);
    } else {
        r = (a.n != 0) ? realize_frobenius(a.p, a.n) : realize_full_frobenius(a.p);
    }
    ConsistencyReport cc = realization_consistency_check(r);
    if (a.json)
        out << realization_json(r, cc).dump(2) << "\n";
    else
        out << realization_text(r, cc);
    if (!cc.pass) {
        err << "error: consistency check failed\n";
        return 1;
    }
    return 0;
}

int do_periods(const PeriodsArgs& a, std::ostream& out) {
    std::uint64_t m = primitive_root(a.q);
    CyclotomicElement alpha = gaussian_period(a.q, a.n, m);
    IntPoly mp = minimal_polynomial(alpha, static_cast<int>(a.n), m);
    out << periods_text(a.q, a.n, m, alpha, mp) << "\n";
    return 0;
}

int do_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.export_path.empty() && !a.import_path.empty())
        return usage_error(err, "choose one of --export or --import");
    if (!a.import_path.empty()) {
        std::ifstream in(a.import_path);
        if (!in)
            return math_error(err, "cannot open " + a.import_path);
        std::stringstream buf;
        buf << in.rdbuf();
        GroupTable t = import_table(buf.str());
        out << export_table(t);
        return 0;
    }
    if (a.p == 0)
        return usage_error(err, "--p is required unless --import is given");
    const GroupTable& t = group_table(a.p);
    if (!a.export_path.empty()) {
        std::ofstream o(a.export_path);
        if (!o)
            return math_error(err, "cannot write " + a.export_path);
        o << export_table(t);
        return 0;
    }
    out << export_table(t);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Galois groups of prime-degree polynomials over Q"};
    app.name("primegalois");
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify the Galois group of a polynomial");
    classify_cmd->add_option("poly", ca.poly_parts, "polynomial in one variable")
        ->required()
        ->take_all();
    classify_cmd->add_option("--budget", ca.budget, "usable reduction primes to sample");
    classify_cmd->add_option("--effort", ca.effort, "irreducibility search effort");
    classify_cmd->add_flag("--assert-irreducible", ca.assert_irreducible,
                           "skip the irreducibility certificate");
    classify_cmd->add_flag("--json", ca.json, "JSON report");

    RealizeArgs ra;
    auto* realize_cmd =
        app.add_subcommand("realize", "Construct a polynomial with a prescribed group");
    realize_cmd->add_option("--p", ra.p, "Frobenius kernel degree (prime)");
    realize_cmd->add_option("--n", ra.n, "Frobenius complement order (with --p)");
    realize_cmd->add_option("--cyclic", ra.cyclic_n, "non-real cyclic extension degree");
    realize_cmd->add_flag("--json", ra.json, "JSON report");

    PeriodsArgs pa;
    auto* periods_cmd =
        app.add_subcommand("periods", "Gaussian period and its minimal polynomial");
    periods_cmd->add_option("--q", pa.q, "prime conductor")->required();
    periods_cmd->add_option("--n", pa.n, "subgroup index (divides q-1)")->required();

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Cycle-type table of degree-p candidates");
    table_cmd->add_option("--p", ta.p, "prime degree");
    table_cmd->add_option("--export", ta.export_path, "write the table to a file");
    table_cmd->add_option("--import", ta.import_path, "read a table file and echo it");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed())
            return do_classify(ca, out, err);
        if (realize_cmd->parsed())
            return do_realize(ra, out, err);
        if (periods_cmd->parsed())
            return do_periods(pa, out);
        if (table_cmd->parsed())
            return do_table(ta, out, err);
    } catch (const Error& e) {
        if (e.code() == errc::parse_error || e.code() == errc::non_univariate)
            return usage_error(err, e.what());
        return math_error(err, e.what());
    } catch (const std::exception& e) {
        return math_error(err, e.what());
    }
    return usage_error(err, "no subcommand given");
}

} // namespace primegalois
