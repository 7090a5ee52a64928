#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "hgco/graph.hpp"
#include "hgco/qp.hpp"

namespace hgco {

// Unified heterogeneous input: variable nodes carry structural features,
// constraint nodes carry [b_e, arity_e], and three typed edge sets hold the
// problem relation, the objective couplings of Qtilde = Q + diag(c), and the
// variable-constraint incidences of A.
struct HeteroGraph {
    struct WeightedEdge {
        int i = 0, j = 0;  // i < j, variable nodes
        double w = 0.0;
    };
    struct Incidence {
        int var = 0, constr = 0;
        double a = 0.0;
    };

    int num_var = 0;
    int num_constr = 0;
    Eigen::MatrixXd var_features;     // num_var x 4
    Eigen::MatrixXd constr_features;  // num_constr x 2: [b_e, arity_e]
    std::vector<std::pair<int, int>> e_prob;     // unweighted, u < v
    std::vector<WeightedEdge> e_obj_off;         // w_ij = Q_ij + Q_ji, nonzero
    std::vector<std::pair<int, double>> e_obj_diag;  // (i, Q_ii + c_i), nonzero
    std::vector<Incidence> e_constr;             // a_ej != 0

    double rhs(int e) const { return constr_features(e, 0); }
};

// Disjoint union of member graphs. Node ids in `merged` are offset per
// member; segment reductions over the instance ids recover per-member sums.
struct BatchedHeteroGraph {
    HeteroGraph merged;
    int num_instances = 0;
    std::vector<int> var_instance;     // size merged.num_var
    std::vector<int> constr_instance;  // size merged.num_constr
    std::vector<int> var_offset;       // size num_instances + 1
    std::vector<int> constr_offset;    // size num_instances + 1
};

HeteroGraph encode(const Graph& g, const QPInstance& qp);

struct DecodedQP {
    Eigen::SparseMatrix<double> q_tilde;
    Eigen::SparseMatrix<double, Eigen::RowMajor> a;
    Eigen::VectorXd b;
};

// Exact reconstruction of (Qtilde, A, b) from the edge sets; test oracle for
// encode.
DecodedQP decode_qp(const HeteroGraph& h);

BatchedHeteroGraph batch(const std::vector<HeteroGraph>& members);
std::vector<HeteroGraph> unbatch(const BatchedHeteroGraph& batch);

// Diagnostic one-liner with node/edge counts per relation.
std::string summary(const HeteroGraph& h);

}  // namespace hgco
