#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hgco/graph.hpp"

namespace hgco {

enum class ProblemClass { MIS, MC, MVC, MDS };
enum class Sense { MAX, MIN };
enum class Relation { LessEqual, GreaterEqual, Equal };

Sense sense_of(ProblemClass cls);
std::string to_string(ProblemClass cls);
std::string to_string(Sense s);
ProblemClass problem_class_from_string(const std::string& s);

// Constrained quadratic program over binary variables, stored in the
// internal minimization convention with every constraint row in <= form.
struct QPInstance {
    int num_vars = 0;
    Eigen::SparseMatrix<double> q;                    // N x N, symmetric
    Eigen::VectorXd c;                                // N
    Eigen::SparseMatrix<double, Eigen::RowMajor> a;   // M x N
    Eigen::VectorXd b;                                // M
    Sense original_sense = Sense::MIN;
    std::vector<std::string> var_names;

    int num_constraints() const { return static_cast<int>(a.rows()); }
};

using BinaryAssignment = Eigen::VectorXi;  // entries in {0, 1}

struct ObjectiveValue {
    double internal_value = 0.0;  // x'Qx + c'x
    double reported = 0.0;        // negated when the original sense is MAX
};

struct Feasibility {
    bool feasible = false;
    double total_violation = 0.0;  // sum_e max(0, (Ax)_e - b_e)
};

// One sparse constraint row as (column, coefficient) pairs plus a rhs.
using SparseRow = std::vector<std::pair<int, double>>;

// Multiplies >= rows by -1 so everything lands in <= form. Equality rows are
// rejected.
std::pair<SparseRow, double> normalize_constraint(SparseRow coeffs, double rhs,
                                                  Relation relation);

QPInstance build_qp(const Graph& g, ProblemClass cls);

ObjectiveValue discrete_objective(const QPInstance& qp, const BinaryAssignment& x);
Feasibility is_feasible(const QPInstance& qp, const BinaryAssignment& x);

// Text round trip: header "N M sense", Q triplets, dense c, A triplets,
// dense b.
void write_qp(const QPInstance& qp, std::ostream& out);
QPInstance read_qp(std::istream& in, const std::string& name = "<stream>");
void save_qp(const QPInstance& qp, const std::string& path);
QPInstance load_qp(const std::string& path);

std::vector<std::string> default_var_names(int n);

}  // namespace hgco
