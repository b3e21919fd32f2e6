#pragma once

#include <Eigen/Core>

#include "dunkl/errors.hpp"

namespace dunkl {

/// P_n^{(a,b)}(x) by forward three-term recurrence. Requires a, b > -1.
template <typename Scalar>
Scalar jacobi(int n, Scalar a, Scalar b, Scalar x) {
    if (n < 0) throw DomainError("Jacobi degree must be non-negative", n);
    if (!(a > Scalar(-1))) throw DomainError("Jacobi parameter a must exceed -1", double(a));
    if (!(b > Scalar(-1))) throw DomainError("Jacobi parameter b must exceed -1", double(b));

    Scalar prev(1);
    if (n == 0) return prev;
    Scalar cur = (a + Scalar(1)) + (a + b + Scalar(2)) * (x - Scalar(1)) / Scalar(2);
    for (int k = 2; k <= n; ++k) {
        const Scalar kk(k);
        const Scalar s = Scalar(2) * kk + a + b;
        const Scalar c0 = Scalar(2) * kk * (kk + a + b) * (s - Scalar(2));
        const Scalar c1 = (s - Scalar(1)) * (s * (s - Scalar(2)) * x + a * a - b * b);
        const Scalar c2 = Scalar(2) * (kk + a - Scalar(1)) * (kk + b - Scalar(1)) * s;
        const Scalar next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Element-wise P_n^{(a,b)} over an array of abscissae.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi(int n, typename Derived::Scalar a,
                                                                 typename Derived::Scalar b,
                                                                 const Eigen::ArrayBase<Derived>& x) {
    Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = jacobi(n, a, b, x.derived().coeff(i));
    return out;
}

}  // namespace dunkl
