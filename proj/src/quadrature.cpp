#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace dunkl {

GaussRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("Gauss rule order must be positive");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(std::max(order - 1, 0));
    for (int k = 1; k < order; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    GaussRule rule;
    rule.nodes = solver.eigenvalues();
    rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();

    // Symmetrize: the exact rule is symmetric about 0.
    for (int i = 0; i < order / 2; ++i) {
        const int j = order - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = rule.weights[j] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           const GaussRule& rule) {
    if (panels < 1) throw std::invalid_argument("need at least one panel");
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double centre = a + (p + 0.5) * width;
        double sum = 0.0;
        for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(centre + 0.5 * width * rule.nodes[i]);
        total += 0.5 * width * sum;
    }
    return total;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  int max_depth) {
    // Start from a modest uniform split so narrow peaks are not stepped over.
    constexpr int kStartPanels = 64;
    const double width = (b - a) / kStartPanels;
    double total = 0.0;
    for (int p = 0; p < kStartPanels; ++p) {
        const double lo = a + p * width;
        const double hi = lo + width;
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo), fmid = f(mid), fhi = f(hi);
        const double whole = width / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_step(f, lo, flo, mid, fmid, hi, fhi, whole, tol / kStartPanels, max_depth);
    }
    return total;
}

}  // namespace dunkl
