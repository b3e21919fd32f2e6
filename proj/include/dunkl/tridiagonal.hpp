#pragma once

// Sturm-sequence bisection for the lowest eigenvalues of a real symmetric
// tridiagonal matrix. Templated on the scalar so callers can run the
// recurrence in long double when the spectrum of interest sits far below
// the matrix norm.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

template <typename Scalar>
using TridiagonalVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <typename Scalar>
Scalar safe_pivot_floor(const TridiagonalVector<Scalar>& off_sq) {
    const Scalar tiny = std::numeric_limits<Scalar>::min();
    const Scalar largest = off_sq.size() > 0 ? off_sq.maxCoeff() : Scalar(0);
    return std::max(tiny, tiny * largest);
}

template <typename Scalar>
Eigen::Index count_below(const TridiagonalVector<Scalar>& diag, const TridiagonalVector<Scalar>& off_sq, Scalar x,
                         Scalar pivmin) {
    Eigen::Index negatives = 0;
    Scalar q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++negatives;
    for (Eigen::Index i = 1; i < diag.size(); ++i) {
        q = diag[i] - x - off_sq[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++negatives;
    }
    return negatives;
}

}  // namespace detail

/// Number of eigenvalues strictly below x. `off_sq` holds the squared
/// off-diagonal entries (length diag.size() - 1).
template <typename Scalar>
Eigen::Index sturm_count(const TridiagonalVector<Scalar>& diag, const TridiagonalVector<Scalar>& off_sq, Scalar x) {
    if (diag.size() == 0) return 0;
    return detail::count_below(diag, off_sq, x, detail::safe_pivot_floor(off_sq));
}

/// The `count` smallest eigenvalues in ascending order, each bisected to
/// a few ulps of itself.
template <typename Scalar>
TridiagonalVector<Scalar> lowest_eigenvalues(const TridiagonalVector<Scalar>& diag,
                                             const TridiagonalVector<Scalar>& off, Eigen::Index count) {
    const Eigen::Index n = diag.size();
    if (off.size() != std::max<Eigen::Index>(n - 1, 0))
        throw std::invalid_argument("off-diagonal length must be diag.size() - 1");
    if (count < 0 || count > n) throw std::invalid_argument("requested eigenvalue count out of range");

    const TridiagonalVector<Scalar> off_sq = off.array().square().matrix();
    const Scalar pivmin = detail::safe_pivot_floor(off_sq);

    // Gershgorin interval.
    Scalar lower = std::numeric_limits<Scalar>::infinity();
    Scalar upper = -lower;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar radius = (i > 0 ? std::abs(off[i - 1]) : Scalar(0)) + (i + 1 < n ? std::abs(off[i]) : Scalar(0));
        lower = std::min(lower, diag[i] - radius);
        upper = std::max(upper, diag[i] + radius);
    }
    const Scalar norm = std::max(std::abs(lower), std::abs(upper));
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    lower -= 2 * eps * norm + pivmin;
    upper += 2 * eps * norm + pivmin;

    TridiagonalVector<Scalar> values(count);
    Scalar floor = lower;
    for (Eigen::Index k = 0; k < count; ++k) {
        Scalar lo = floor;
        Scalar hi = upper;
        // Invariant: count_below(lo) <= k < count_below(hi).
        while (hi - lo > 2 * eps * std::max(std::abs(lo), std::abs(hi)) + pivmin) {
            const Scalar mid = (lo + hi) / 2;
            if (mid <= lo || mid >= hi) break;
            if (detail::count_below(diag, off_sq, mid, pivmin) <= k)
                lo = mid;
            else
                hi = mid;
        }
        values[k] = (lo + hi) / 2;
        floor = lo;
    }
    return values;
}

}  // namespace dunkl
