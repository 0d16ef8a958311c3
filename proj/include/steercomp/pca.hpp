#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace steercomp {

// m samples by n features, with a label per column.
struct DataMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> feature_names;

    Eigen::Index samples() const { return values.rows(); }
    Eigen::Index features() const { return values.cols(); }

    // Throws ConfigError: needs m >= 2, n >= 1, finite entries, one name
    // per column.
    void validate() const;
};

struct CenterResult {
    DataMatrix data;
    Eigen::VectorXd column_means;
    // Names of constant-valued columns (retained with zero variance).
    std::vector<std::string> degenerate_features;
};

// Removes each column's mean. Constant columns are flagged, not rejected.
CenterResult center(const DataMatrix& data);

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Converged when the off-diagonal Frobenius norm drops below tol; throws
// NumericalFailureError after max_sweeps sweeps.
struct JacobiResult {
    Eigen::VectorXd eigenvalues;   // descending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
    int sweeps = 0;
};

JacobiResult jacobi_eigen(const Eigen::MatrixXd& symmetric, double tol = 1e-10,
                          int max_sweeps = 100);

struct PcaReport {
    Eigen::VectorXd eigenvalues;         // descending
    Eigen::MatrixXd eigenvectors;        // columns
    Eigen::VectorXd contribution_rates;  // eigenvalue / trace, sums to 1
    std::vector<std::string> feature_names;
    // Strongest-loading feature of each reported component, in rank order.
    std::vector<std::string> component_features;
    // component_features deduplicated in rank order.
    std::vector<std::string> selected;
};

// Principal-component analysis of centered data: sample covariance
// (divisor m-1), Jacobi eigendecomposition, contribution-rate ranking and
// max-|loading| feature attribution. Components are reported up to top_k,
// truncated early once the cumulative contribution rate reaches
// cumulative_threshold.
PcaReport analyze(const DataMatrix& centered, int top_k,
                  double cumulative_threshold = 0.99);

// Human-readable table: eigenvalue, contribution rate and strongest feature
// per component, plus the selected feature list.
std::string format_report(const PcaReport& report);

}  // namespace steercomp
