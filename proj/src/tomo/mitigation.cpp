#include "telecloning/tomo/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "telecloning/sim/state.hpp"

namespace telecloning::tomo {

CalibrationMatrix build_calibration(const std::map<std::string, sim::Histogram>& preparations) {
    if (preparations.empty()) throw std::invalid_argument("calibration needs preparation histograms");
    const std::size_t m = preparations.begin()->first.size();
    if (m == 0 || m > 12) throw std::invalid_argument("calibration supports 1 to 12 measured bits");
    const std::size_t dim = std::size_t{1} << m;
    CalibrationMatrix cal{m, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))};
    std::uint64_t shots = 0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        const std::string key = sim::bits_from_index(j, m);
        const auto it = preparations.find(key);
        if (it == preparations.end()) throw std::invalid_argument("missing calibration preparation '" + key + "'");
        const auto& h = it->second;
        if (h.n_bits != m) throw std::invalid_argument("calibration histogram width mismatch for '" + key + "'");
        const std::uint64_t total = h.total();
        if (total == 0) throw std::invalid_argument("calibration preparation '" + key + "' has no shots");
        if (shots == 0) shots = total;
        if (total != shots) throw std::invalid_argument("calibration preparations must use equal shots");
        for (std::uint64_t i = 0; i < dim; ++i) {
            cal.a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                static_cast<double>(h.counts[i]) / static_cast<double>(total);
        }
    }
    if (preparations.size() != dim) throw std::invalid_argument("unexpected extra calibration preparations");
    return cal;
}

namespace {

// Euclidean projection onto {q >= 0, sum q = s}.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double s) {
    std::vector<double> u(v.data(), v.data() + v.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, tau = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        cum += u[k];
        const double t = (cum - s) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) tau = t;
    }
    return (v.array() - tau).cwiseMax(0.0).matrix();
}

// Accelerated projected gradient on 0.5 |A q - p|^2.
Eigen::VectorXd solve_constrained(const Eigen::MatrixXd& a, const Eigen::VectorXd& p, Eigen::VectorXd q) {
    const Eigen::MatrixXd ata = a.transpose() * a;
    const Eigen::VectorXd atp = a.transpose() * p;
    const double lipschitz = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(ata, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
    const double step = 1.0 / lipschitz;
    const double s = p.sum();
    Eigen::VectorXd y = q, prev = q;
    double t = 1.0;
    for (int it = 0; it < 200000; ++it) {
        q = project_simplex(y - step * (ata * y - atp), s);
        const double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0;
        y = q + ((t - 1.0) / t_next) * (q - prev);
        if ((q - prev).lpNorm<Eigen::Infinity>() < 1e-15) break;
        prev = q;
        t = t_next;
    }
    return q;
}

}  // namespace

std::vector<double> mitigate(const std::vector<double>& raw, const CalibrationMatrix& cal) {
    const auto dim = static_cast<std::size_t>(cal.a.rows());
    if (raw.size() != dim) throw std::invalid_argument("raw histogram does not match the calibration size");
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (total <= 0.0) return raw;
    const Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(raw.data(), static_cast<Eigen::Index>(dim)) / total;

    // Equality-constrained least squares through the KKT system; if that is
    // already nonnegative it is the answer.
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 1, n + 1);
    kkt.topLeftCorner(n, n) = cal.a.transpose() * cal.a;
    kkt.block(0, n, n, 1).setOnes();
    kkt.block(n, 0, 1, n).setOnes();
    Eigen::VectorXd rhs(n + 1);
    rhs.head(n) = cal.a.transpose() * p;
    rhs(n) = 1.0;
    const Eigen::VectorXd sol = kkt.colPivHouseholderQr().solve(rhs);
    Eigen::VectorXd q = sol.head(n);
    const bool solved = sol.allFinite() && (kkt * sol - rhs).norm() < 1e-9;
    if (!solved || q.minCoeff() < 0.0) {
        const Eigen::VectorXd start = solved ? project_simplex(q, 1.0) : Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
        q = solve_constrained(cal.a, p, start);
    }
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = q(static_cast<Eigen::Index>(i)) * total;
    return out;
}

std::vector<double> mitigate(const sim::Histogram& raw, const CalibrationMatrix& cal) {
    std::vector<double> counts(raw.counts.begin(), raw.counts.end());
    return mitigate(counts, cal);
}

}  // namespace telecloning::tomo
