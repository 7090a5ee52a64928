#include "hgco/qp.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hgco {

Sense sense_of(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::MIS:
        case ProblemClass::MC:
            return Sense::MAX;
        case ProblemClass::MVC:
        case ProblemClass::MDS:
            return Sense::MIN;
    }
    throw std::invalid_argument("sense_of: bad problem class");
}

std::string to_string(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::MIS: return "MIS";
        case ProblemClass::MC: return "MC";
        case ProblemClass::MVC: return "MVC";
        case ProblemClass::MDS: return "MDS";
    }
    throw std::invalid_argument("to_string: bad problem class");
}

std::string to_string(Sense s) {
    return s == Sense::MAX ? "MAX" : "MIN";
}

ProblemClass problem_class_from_string(const std::string& s) {
    if (s == "MIS") return ProblemClass::MIS;
    if (s == "MC") return ProblemClass::MC;
    if (s == "MVC") return ProblemClass::MVC;
    if (s == "MDS") return ProblemClass::MDS;
    throw std::invalid_argument("unknown problem class '" + s + "'");
}

std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::pair<SparseRow, double> normalize_constraint(SparseRow coeffs, double rhs,
                                                  Relation relation) {
    switch (relation) {
        case Relation::LessEqual:
            return {std::move(coeffs), rhs};
        case Relation::GreaterEqual:
            for (auto& [j, v] : coeffs) v = -v;
            return {std::move(coeffs), -rhs};
        case Relation::Equal:
            throw std::invalid_argument("normalize_constraint: equality rows unsupported");
    }
    throw std::invalid_argument("normalize_constraint: bad relation");
}

namespace {

Eigen::SparseMatrix<double, Eigen::RowMajor> rows_to_matrix(
    const std::vector<SparseRow>& rows, int n) {
    std::vector<Eigen::Triplet<double>> trip;
    for (int e = 0; e < static_cast<int>(rows.size()); ++e) {
        for (const auto& [j, v] : rows[e]) trip.emplace_back(e, j, v);
    }
    Eigen::SparseMatrix<double, Eigen::RowMajor> a(static_cast<int>(rows.size()), n);
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

}  // namespace

QPInstance build_qp(const Graph& g, ProblemClass cls) {
    const int n = g.num_nodes();
    QPInstance qp;
    qp.num_vars = n;
    qp.q = Eigen::SparseMatrix<double>(n, n);
    qp.original_sense = sense_of(cls);
    qp.c = qp.original_sense == Sense::MAX ? Eigen::VectorXd::Constant(n, -1.0)
                                           : Eigen::VectorXd::Constant(n, 1.0);
    qp.var_names = default_var_names(n);

    std::vector<SparseRow> rows;
    std::vector<double> rhs;
    auto add = [&](SparseRow row, double r, Relation rel) {
        auto [nrow, nr] = normalize_constraint(std::move(row), r, rel);
        rows.push_back(std::move(nrow));
        rhs.push_back(nr);
    };

    switch (cls) {
        case ProblemClass::MIS:
            for (const auto& [u, v] : g.edges()) {
                add({{u, 1.0}, {v, 1.0}}, 1.0, Relation::LessEqual);
            }
            break;
        case ProblemClass::MC:
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (!g.has_edge(u, v)) {
                        add({{u, 1.0}, {v, 1.0}}, 1.0, Relation::LessEqual);
                    }
                }
            }
            break;
        case ProblemClass::MVC:
            for (const auto& [u, v] : g.edges()) {
                add({{u, 1.0}, {v, 1.0}}, 1.0, Relation::GreaterEqual);
            }
            break;
        case ProblemClass::MDS: {
            auto adj = g.adjacency();
            for (int i = 0; i < n; ++i) {
                SparseRow row{{i, 1.0}};
                std::vector<int> nb = adj[i];
                std::sort(nb.begin(), nb.end());
                for (int j : nb) row.emplace_back(j, 1.0);
                std::sort(row.begin(), row.end());
                add(std::move(row), 1.0, Relation::GreaterEqual);
            }
            break;
        }
    }
    qp.a = rows_to_matrix(rows, n);
    qp.b = Eigen::Map<Eigen::VectorXd>(rhs.data(), static_cast<int>(rhs.size()));
    return qp;
}

ObjectiveValue discrete_objective(const QPInstance& qp, const BinaryAssignment& x) {
    if (x.size() != qp.num_vars) {
        throw std::invalid_argument("discrete_objective: assignment length mismatch");
    }
    Eigen::VectorXd xd = x.cast<double>();
    ObjectiveValue out;
    out.internal_value = xd.dot(qp.q * xd) + qp.c.dot(xd);
    out.reported = qp.original_sense == Sense::MAX ? -out.internal_value : out.internal_value;
    return out;
}

Feasibility is_feasible(const QPInstance& qp, const BinaryAssignment& x) {
    if (x.size() != qp.num_vars) {
        throw std::invalid_argument("is_feasible: assignment length mismatch");
    }
    Eigen::VectorXd xd = x.cast<double>();
    Eigen::VectorXd slack = qp.a * xd - qp.b;
    Feasibility f;
    f.total_violation = slack.cwiseMax(0.0).sum();
    f.feasible = f.total_violation == 0.0;
    return f;
}

namespace {

void write_double(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_qp(const QPInstance& qp, std::ostream& out) {
    out << qp.num_vars << " " << qp.num_constraints() << " "
        << to_string(qp.original_sense) << "\n";
    std::vector<Eigen::Triplet<double>> qt;
    for (int k = 0; k < qp.q.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(qp.q, k); it; ++it) {
            qt.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                            it.value());
        }
    }
    out << qt.size() << "\n";
    for (const auto& t : qt) {
        out << t.row() << " " << t.col() << " ";
        write_double(out, t.value());
        out << "\n";
    }
    for (int i = 0; i < qp.num_vars; ++i) {
        if (i) out << " ";
        write_double(out, qp.c[i]);
    }
    out << "\n";
    std::vector<Eigen::Triplet<double>> at;
    for (int e = 0; e < qp.a.outerSize(); ++e) {
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(qp.a, e);
             it; ++it) {
            at.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                            it.value());
        }
    }
    out << at.size() << "\n";
    for (const auto& t : at) {
        out << t.row() << " " << t.col() << " ";
        write_double(out, t.value());
        out << "\n";
    }
    for (int e = 0; e < qp.num_constraints(); ++e) {
        if (e) out << " ";
        write_double(out, qp.b[e]);
    }
    out << "\n";
}

QPInstance read_qp(std::istream& in, const std::string& name) {
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error(name + ": " + msg);
    };
    QPInstance qp;
    int m = 0;
    std::string sense;
    if (!(in >> qp.num_vars >> m >> sense)) fail("bad header");
    if (qp.num_vars < 1 || m < 0) fail("bad dimensions");
    if (sense == "MAX") {
        qp.original_sense = Sense::MAX;
    } else if (sense == "MIN") {
        qp.original_sense = Sense::MIN;
    } else {
        fail("bad sense '" + sense + "'");
    }
    long nq = 0;
    if (!(in >> nq) || nq < 0) fail("bad Q triplet count");
    std::vector<Eigen::Triplet<double>> qt;
    for (long k = 0; k < nq; ++k) {
        int i, j;
        double v;
        if (!(in >> i >> j >> v)) fail("bad Q triplet");
        if (i < 0 || j < 0 || i >= qp.num_vars || j >= qp.num_vars) fail("Q index out of range");
        qt.emplace_back(i, j, v);
    }
    qp.q = Eigen::SparseMatrix<double>(qp.num_vars, qp.num_vars);
    qp.q.setFromTriplets(qt.begin(), qt.end());
    qp.c = Eigen::VectorXd(qp.num_vars);
    for (int i = 0; i < qp.num_vars; ++i) {
        if (!(in >> qp.c[i])) fail("bad c entry");
    }
    long na = 0;
    if (!(in >> na) || na < 0) fail("bad A triplet count");
    std::vector<Eigen::Triplet<double>> at;
    for (long k = 0; k < na; ++k) {
        int e, j;
        double v;
        if (!(in >> e >> j >> v)) fail("bad A triplet");
        if (e < 0 || j < 0 || e >= m || j >= qp.num_vars) fail("A index out of range");
        at.emplace_back(e, j, v);
    }
    qp.a = Eigen::SparseMatrix<double, Eigen::RowMajor>(m, qp.num_vars);
    qp.a.setFromTriplets(at.begin(), at.end());
    qp.b = Eigen::VectorXd(m);
    for (int e = 0; e < m; ++e) {
        if (!(in >> qp.b[e])) fail("bad b entry");
    }
    qp.var_names = default_var_names(qp.num_vars);
    return qp;
}

void save_qp(const QPInstance& qp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_qp(qp, out);
}

QPInstance load_qp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_qp(in, path);
}

}  // namespace hgco
