#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "treeprofile/families.hpp"
#include "treeprofile/tree.hpp"

namespace treeprofile {

// One tree along a parametric sequence: the quantities driving the four
// equivalent superlinearity conditions (path share, Z_k/n, degree moment
// over n, star share), all from DP counters.
struct ExperimentRow {
    std::string family;
    int n = 0;
    int k = 0;
    mpz_class z_k;
    mpz_class c_path;
    mpz_class c_star;
    double p1 = 0;
    double p2 = 0;
    mpz_class moment; // sum of d(v)^{k-1}
    double z_over_n = 0;
    double moment_over_n = 0;
    int diameter = 0;
    std::string backend = "dp";
    bool failed = false;
    std::string error;
};

ExperimentRow experiment_row(const std::string& family_name, const Tree& t, int k);

// Rows for the family instantiated at each n in ns, in order. Per-row
// failures are recorded in the row, not thrown.
std::vector<ExperimentRow> run_sequence(const FamilySpec& spec_template, int k,
                                        const std::vector<int>& ns);

// Extended-star rows at subtree sizes k and k+1 for each n.
std::vector<ExperimentRow> cross_size_report(const std::vector<int>& n_list, int k);

// header: family,n,k,z_k,c_path,c_star,p1,p2,moment,z_over_n,moment_over_n,diameter,backend
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

std::string format_double(double x); // 12 significant digits

} // namespace treeprofile
