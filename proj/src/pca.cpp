#include "steercomp/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "steercomp/errors.hpp"

namespace steercomp {

void DataMatrix::validate() const {
    if (values.rows() < 2) throw ConfigError("data matrix: needs at least 2 samples");
    if (values.cols() < 1) throw ConfigError("data matrix: needs at least 1 feature");
    if (feature_names.size() != static_cast<std::size_t>(values.cols()))
        throw ConfigError("data matrix: one feature name per column required");
    if (!values.allFinite()) throw ConfigError("data matrix: non-finite entries");
}

CenterResult center(const DataMatrix& data) {
    data.validate();
    CenterResult out;
    out.column_means = data.values.colwise().mean();
    out.data.values = data.values.rowwise() - out.column_means.transpose();
    out.data.feature_names = data.feature_names;
    for (Eigen::Index j = 0; j < data.features(); ++j) {
        const double spread =
            data.values.col(j).maxCoeff() - data.values.col(j).minCoeff();
        if (spread == 0.0) out.degenerate_features.push_back(data.feature_names[j]);
    }
    return out;
}

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < a.rows(); ++p)
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
    return std::sqrt(2.0 * sum);
}

}  // namespace

JacobiResult jacobi_eigen(const Eigen::MatrixXd& symmetric, double tol, int max_sweeps) {
    if (symmetric.rows() != symmetric.cols())
        throw ConfigError("jacobi: matrix must be square");
    const Eigen::Index n = symmetric.rows();
    Eigen::MatrixXd a = symmetric;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

    int sweep = 0;
    while (off_diagonal_norm(a) >= tol) {
        if (sweep >= max_sweeps)
            throw NumericalFailureError("jacobi: no convergence in " +
                                        std::to_string(max_sweeps) + " sweeps");
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = aip - s * (aiq + tau * aip);
                    a(i, q) = aiq + s * (aip - tau * aiq);
                    a(p, i) = a(i, p);
                    a(q, i) = a(i, q);
                }
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = vip - s * (viq + tau * vip);
                    v(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
        ++sweep;
    }

    JacobiResult out;
    out.sweeps = sweep;
    out.eigenvalues = a.diagonal();
    out.eigenvectors = v;

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return out.eigenvalues(i) > out.eigenvalues(j);
    });
    Eigen::VectorXd sorted_vals(n);
    Eigen::MatrixXd sorted_vecs(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        sorted_vals(k) = out.eigenvalues(order[static_cast<std::size_t>(k)]);
        sorted_vecs.col(k) = out.eigenvectors.col(order[static_cast<std::size_t>(k)]);
        // Deterministic sign: largest-magnitude component positive.
        Eigen::Index imax = 0;
        sorted_vecs.col(k).cwiseAbs().maxCoeff(&imax);
        if (sorted_vecs(imax, k) < 0.0) sorted_vecs.col(k) = -sorted_vecs.col(k);
    }
    out.eigenvalues = std::move(sorted_vals);
    out.eigenvectors = std::move(sorted_vecs);
    return out;
}

PcaReport analyze(const DataMatrix& centered, int top_k, double cumulative_threshold) {
    centered.validate();
    const Eigen::Index n = centered.features();
    if (top_k < 1 || top_k > n) throw ConfigError("pca: top_k must lie in [1, n]");
    const Eigen::VectorXd means = centered.values.colwise().mean();
    if (means.cwiseAbs().maxCoeff() >
        1e-6 * std::max(1.0, centered.values.cwiseAbs().maxCoeff()))
        throw ConfigError("pca: analyze expects centered data");

    const Eigen::MatrixXd cov = centered.values.transpose() * centered.values /
                                static_cast<double>(centered.samples() - 1);
    JacobiResult eig = jacobi_eigen(cov);

    PcaReport report;
    report.feature_names = centered.feature_names;
    report.eigenvalues = eig.eigenvalues.cwiseMax(0.0);  // clear roundoff negatives
    report.eigenvectors = eig.eigenvectors;
    const double trace = report.eigenvalues.sum();
    if (trace <= 0.0) throw DegenerateDataError("pca: covariance has zero trace");
    report.contribution_rates = report.eigenvalues / trace;

    double cumulative = 0.0;
    for (Eigen::Index k = 0; k < top_k; ++k) {
        Eigen::Index strongest = 0;
        report.eigenvectors.col(k).cwiseAbs().maxCoeff(&strongest);
        report.component_features.push_back(
            report.feature_names[static_cast<std::size_t>(strongest)]);
        cumulative += report.contribution_rates(k);
        if (cumulative >= cumulative_threshold) break;
    }
    for (const auto& name : report.component_features)
        if (std::find(report.selected.begin(), report.selected.end(), name) ==
            report.selected.end())
            report.selected.push_back(name);
    return report;
}

std::string format_report(const PcaReport& report) {
    std::ostringstream out;
    out << "component  eigenvalue    Cr        cumulative  strongest feature\n";
    double cumulative = 0.0;
    for (Eigen::Index k = 0; k < report.eigenvalues.size(); ++k) {
        cumulative += report.contribution_rates(k);
        char line[160];
        const char* feature =
            k < static_cast<Eigen::Index>(report.component_features.size())
                ? report.component_features[static_cast<std::size_t>(k)].c_str()
                : "-";
        std::snprintf(line, sizeof(line), "%-9lld  %-12.6g  %6.2f%%   %7.2f%%    %s\n",
                      static_cast<long long>(k + 1), report.eigenvalues(k),
                      100.0 * report.contribution_rates(k), 100.0 * cumulative, feature);
        out << line;
    }
    out << "selected:";
    for (const auto& name : report.selected) out << ' ' << name;
    out << '\n';
    return out.str();
}

}  // namespace steercomp
