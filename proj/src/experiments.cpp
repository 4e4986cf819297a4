#include "treeprofile/experiments.hpp"

#include <cstdio>
#include <ostream>

#include "treeprofile/counting.hpp"

namespace treeprofile {

ExperimentRow experiment_row(const std::string& family_name, const Tree& t, int k) {
    ExperimentRow row;
    row.family = family_name;
    row.n = t.n();
    row.k = k;
    row.z_k = count_all_subtrees(t, k);
    row.c_path = count_paths(t, k);
    row.c_star = count_stars(t, k);
    row.moment = degree_moment(t, k - 1);
    row.diameter = diameter(t);
    if (row.z_k > 0) {
        mpq_class q1(row.c_path, row.z_k), q2(row.c_star, row.z_k);
        q1.canonicalize();
        q2.canonicalize();
        row.p1 = q1.get_d();
        row.p2 = q2.get_d();
    }
    mpq_class zn(row.z_k, t.n()), mn(row.moment, t.n());
    zn.canonicalize();
    mn.canonicalize();
    row.z_over_n = zn.get_d();
    row.moment_over_n = mn.get_d();
    return row;
}

std::vector<ExperimentRow> run_sequence(const FamilySpec& spec_template, int k,
                                        const std::vector<int>& ns) {
    std::vector<ExperimentRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        FamilySpec spec = spec_template;
        spec.params["n"] = n;
        try {
            Tree t = make_family(spec);
            rows.push_back(experiment_row(spec.name, t, k));
        } catch (const Error& e) {
            ExperimentRow row;
            row.family = spec.name;
            row.n = n;
            row.k = k;
            row.failed = true;
            row.error = e.what();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ExperimentRow> cross_size_report(const std::vector<int>& n_list, int k) {
    std::vector<ExperimentRow> rows;
    for (int n : n_list) {
        Tree t = extended_star(n, k);
        rows.push_back(experiment_row("extended_star", t, k));
        rows.push_back(experiment_row("extended_star", t, k + 1));
    }
    return rows;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "family,n,k,z_k,c_path,c_star,p1,p2,moment,z_over_n,moment_over_n,diameter,backend\n";
    for (const auto& r : rows) {
        if (r.failed) {
            out << r.family << ',' << r.n << ',' << r.k << ",,,,,,,,,,failed\n";
            continue;
        }
        out << r.family << ',' << r.n << ',' << r.k << ','
            << r.z_k.get_str() << ',' << r.c_path.get_str() << ',' << r.c_star.get_str() << ','
            << format_double(r.p1) << ',' << format_double(r.p2) << ','
            << r.moment.get_str() << ','
            << format_double(r.z_over_n) << ',' << format_double(r.moment_over_n) << ','
            << r.diameter << ',' << r.backend << '\n';
    }
}

} // namespace treeprofile
