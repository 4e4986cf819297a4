// treeprofile: exact k-profiles, subtree counters, tree families, and
// inequality checks for trees given in edge-list format.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "treeprofile/bounds.hpp"
#include "treeprofile/canonical.hpp"
#include "treeprofile/catalog.hpp"
#include "treeprofile/counting.hpp"
#include "treeprofile/enumeration.hpp"
#include "treeprofile/experiments.hpp"
#include "treeprofile/families.hpp"
#include "treeprofile/tree.hpp"

using namespace treeprofile;

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw invalid_input("InvalidInput", "cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

int resolve_threads(int flag_value) {
    // Flag beats environment beats auto.
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TREEPROFILE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void print_report(std::ostream& out, const BoundReport& r) {
    out << r.name << " [" << r.context << "] ";
    if (!r.applicable) {
        out << "not-applicable\n";
        return;
    }
    out << "lhs=" << r.lhs.get_str() << " rhs=" << r.rhs.get_str()
        << (r.holds ? " HOLDS" : " VIOLATED");
    if (!r.rounding.empty()) out << " (" << r.rounding << ")";
    out << '\n';
}

struct ProfileOpts {
    std::string input;
    int k = 5;
    std::string engine = "auto";
    std::string a_str;
    bool exact = false;
    std::string csv_path;
    long long cap = kDefaultEnumerationCap;
    int threads = 0;
};

int cmd_profile(const ProfileOpts& opt) {
    Tree t = read_edge_list_file(opt.input);
    auto cat = TreeCatalog::build(opt.k);
    ProfileResult result;
    if (opt.engine == "brute")
        result = brute_force_profile(t, opt.k, cat, opt.cap);
    else
        result = profile(t, opt.k, cat, opt.cap, resolve_threads(opt.threads));

    std::cout << "n = " << t.n() << "  k = " << opt.k
              << "  Z_" << opt.k << " = " << result.z_k.get_str() << "\n";
    std::cout << std::left << std::setw(6) << "index" << std::setw(28) << "code"
              << std::setw(20) << "count" << "proportion\n";
    for (int j = 1; j <= cat.size(); ++j) {
        std::cout << std::left << std::setw(6) << j
                  << std::setw(28) << cat.entry(j).code
                  << std::setw(20) << result.counts[j - 1].get_str();
        if (opt.exact)
            std::cout << result.exact_proportions[j - 1].get_str();
        else
            std::cout << format_double(result.proportions[j - 1]);
        std::cout << '\n';
    }

    if (!opt.a_str.empty()) {
        mpq_class a = parse_rational(opt.a_str);
        auto part = balance_partition(t, opt.k, a, cat, opt.cap);
        std::cout << "balance partition at a = " << a.get_str()
                  << ": stars = " << part.stars.get_str()
                  << ", unbalanced = " << part.unbalanced.get_str()
                  << ", balanced-nonstar = " << part.balanced_nonstar.get_str() << '\n';
    }

    if (!opt.csv_path.empty()) {
        std::ofstream csv(opt.csv_path);
        if (!csv) throw invalid_input("InvalidInput", "cannot write '" + opt.csv_path + "'");
        csv << "index,code,count,proportion\n";
        for (int j = 1; j <= cat.size(); ++j)
            csv << j << ',' << cat.entry(j).code << ','
                << result.counts[j - 1].get_str() << ','
                << (opt.exact ? result.exact_proportions[j - 1].get_str()
                              : format_double(result.proportions[j - 1]))
                << '\n';
    }
    return 0;
}

int cmd_catalog(int k) {
    auto cat = TreeCatalog::build(k);
    for (int j = 1; j <= cat.size(); ++j) {
        std::cout << j << ' ' << cat.entry(j).code << ' ';
        bool first = true;
        for (auto [u, v] : cat.entry(j).tree.edges()) {
            if (!first) std::cout << ' ';
            std::cout << u << '-' << v;
            first = false;
        }
        if (cat.entry(j).tree.n() == 1) std::cout << "(single vertex)";
        std::cout << '\n';
    }
    return 0;
}

struct FamilyOpts {
    std::string name;
    long long n = -1, k = -1, d = -1, height = -1, seed = -1;
    std::string output;
};

int cmd_family(const FamilyOpts& opt) {
    FamilySpec spec;
    spec.name = opt.name;
    if (opt.n >= 0) spec.params["n"] = opt.n;
    if (opt.k >= 0) spec.params["k"] = opt.k;
    if (opt.d >= 0) spec.params["d"] = opt.d;
    if (opt.height >= 0) spec.params["height"] = opt.height;
    if (opt.seed >= 0) spec.params["seed"] = opt.seed;
    Tree t = make_family(spec);

    std::ostringstream header;
    header << "# family " << spec.name;
    for (const auto& [key, val] : spec.params) header << ' ' << key << '=' << val;
    header << '\n';

    if (opt.output.empty()) {
        std::cout << header.str();
        write_edge_list(std::cout, t);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw invalid_input("InvalidInput", "cannot write '" + opt.output + "'");
        out << header.str();
        write_edge_list(out, t);
    }
    return 0;
}

struct BoundsOpts {
    std::string input;
    int k = 5;
    std::vector<std::string> a_list;
    bool all = false;
    int D = 0;
};

int cmd_bounds(const BoundsOpts& opt) {
    Tree t = read_edge_list_file(opt.input);
    std::vector<BoundReport> reports;
    reports.push_back(check_simple_bound(t, opt.k));
    reports.push_back(check_star_moment_bound(t, opt.k));
    reports.push_back(check_holder(t, opt.k));
    reports.push_back(check_many_paths(t, opt.k));
    if (diameter(t) >= 2 * opt.k - 2)
        reports.push_back(check_mix_lower_bound(t, opt.k));
    std::vector<std::string> a_list = opt.a_list;
    if (opt.all && a_list.empty()) a_list = {"3/2", "2", "3"};
    for (const auto& a_str : a_list) {
        mpq_class a = parse_rational(a_str);
        reports.push_back(check_unbalanced_bound(t, opt.k, a));
        reports.push_back(check_balanced_bound(t, opt.k, a));
    }
    if (opt.D > 0 && radius(t) <= opt.D)
        reports.push_back(check_diam_claim(t, opt.k, opt.D));

    bool violated = false;
    for (const auto& r : reports) {
        print_report(std::cout, r);
        if (r.applicable && !r.holds) violated = true;
    }
    return violated ? 3 : 0;
}

struct ExperimentOpts {
    std::string family = "caterpillar";
    int k = 5;
    std::vector<int> ns;
    long long d = -1, height = -1, seed = -1;
    std::string output;
    bool cross_size = false;
};

int cmd_experiment(const ExperimentOpts& opt) {
    std::vector<ExperimentRow> rows;
    if (opt.cross_size) {
        rows = cross_size_report(opt.ns, opt.k);
    } else {
        FamilySpec spec;
        spec.name = opt.family;
        spec.params["k"] = opt.k;
        if (opt.d >= 0) spec.params["d"] = opt.d;
        if (opt.height >= 0) spec.params["height"] = opt.height;
        if (opt.seed >= 0) spec.params["seed"] = opt.seed;
        rows = run_sequence(spec, opt.k, opt.ns);
    }
    if (opt.output.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw invalid_input("InvalidInput", "cannot write '" + opt.output + "'");
        write_csv(out, rows);
    }
    for (const auto& r : rows)
        if (r.failed) return 2;
    return 0;
}

int cmd_selftest() {
    // Oracle equivalence on a small built-in corpus.
    int checked = 0, failed = 0;
    for (int i = 0; i < 25; ++i) {
        int n = 5 + static_cast<int>(i % 10);
        Tree t = random_prufer(n, 1000 + static_cast<std::uint64_t>(i));
        for (int k = 4; k <= 6 && k <= n; ++k) {
            auto cat = TreeCatalog::build(k);
            auto fast = profile(t, k, cat);
            auto slow = brute_force_profile(t, k, cat);
            ++checked;
            if (!(fast == slow) || fast.z_k != count_all_subtrees(t, k) ||
                fast.counts[0] != count_paths(t, k) ||
                fast.counts[1] != count_stars(t, k)) {
                ++failed;
                std::cout << "FAIL n=" << n << " seed=" << 1000 + i << " k=" << k << '\n';
            }
        }
    }
    std::cout << "selftest: " << (checked - failed) << "/" << checked << " checks passed\n";
    return failed ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local-profile toolkit for trees"};
    app.require_subcommand(1);

    ProfileOpts popt;
    auto* prof = app.add_subcommand("profile", "Full k-profile of a tree");
    prof->add_option("-i,--input", popt.input, "edge-list file")->required();
    prof->add_option("--k", popt.k, "subtree size (>= 4)");
    prof->add_option("--engine", popt.engine, "auto|enum|brute")
        ->check(CLI::IsMember({"auto", "enum", "brute"}));
    prof->add_option("--a", popt.a_str, "balance threshold (rational > 1), adds partition");
    prof->add_flag("--exact", popt.exact, "print exact rational proportions");
    prof->add_option("--csv", popt.csv_path, "also write CSV here");
    prof->add_option("--cap", popt.cap, "enumeration cap")->check(CLI::Range(1000LL, (long long)1e18));
    prof->add_option("--threads", popt.threads, "worker threads (0 = auto)");

    int cat_k = 5;
    auto* catc = app.add_subcommand("catalog", "List all nonisomorphic k-vertex trees");
    catc->add_option("--k", cat_k, "tree size");

    FamilyOpts fopt;
    auto* fam = app.add_subcommand("family", "Generate a named tree family member");
    fam->add_option("name", fopt.name, "caterpillar|extended_star|complete_dary|path|star|random_prufer")
        ->required();
    fam->add_option("--n", fopt.n, "vertex/size parameter");
    fam->add_option("--k", fopt.k, "profile size parameter (extended_star)");
    fam->add_option("--d", fopt.d, "arity (complete_dary)");
    fam->add_option("--height", fopt.height, "height (complete_dary)");
    fam->add_option("--seed", fopt.seed, "seed (random_prufer)");
    fam->add_option("-o,--output", fopt.output, "output file (default stdout)");

    BoundsOpts bopt;
    auto* bnd = app.add_subcommand("bounds", "Check the proven inequalities on a tree");
    bnd->add_option("-i,--input", bopt.input, "edge-list file")->required();
    bnd->add_option("--k", bopt.k, "subtree size");
    bnd->add_option("--a", bopt.a_list, "balance thresholds (rationals > 1)");
    bnd->add_flag("--all", bopt.all, "include the default a grid {3/2, 2, 3}");
    bnd->add_option("--D", bopt.D, "also check the bounded-diameter claim at this D");

    ExperimentOpts eopt;
    auto* exp = app.add_subcommand("experiment", "CSV rows along a parametric tree sequence");
    exp->add_option("--family", eopt.family, "family name");
    exp->add_option("--k", eopt.k, "subtree size");
    exp->add_option("--ns", eopt.ns, "sequence of n values")->required();
    exp->add_option("--d", eopt.d, "arity (complete_dary)");
    exp->add_option("--height", eopt.height, "height (complete_dary)");
    exp->add_option("--seed", eopt.seed, "seed (random_prufer)");
    exp->add_option("-o,--output", eopt.output, "CSV file (default stdout)");
    exp->add_flag("--cross-size", eopt.cross_size, "extended-star rows at sizes k and k+1");

    auto* self = app.add_subcommand("selftest", "Oracle-equivalence suite on a built-in corpus");
    (void)self;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (prof->parsed()) return cmd_profile(popt);
        if (catc->parsed()) return cmd_catalog(cat_k);
        if (fam->parsed()) return cmd_family(fopt);
        if (bnd->parsed()) return cmd_bounds(bopt);
        if (exp->parsed()) return cmd_experiment(eopt);
        if (self->parsed()) return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.error_class()) {
            case ErrorClass::InvalidInput: return 1;
            case ErrorClass::Infeasible: return 2;
            case ErrorClass::TheoremViolation: return 3;
            case ErrorClass::Internal: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 4;
}
