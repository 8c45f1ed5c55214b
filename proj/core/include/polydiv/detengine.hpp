#pragma once

#include <cstddef>
#include <vector>

#include "polydiv/closedform.hpp"
#include "polydiv/division.hpp"
#include "polydiv/matrix.hpp"

namespace polydiv {

/// Caps the order of every explicitly built matrix.
struct MatrixLimits {
    std::size_t max_order = 64;
};

/// det of the order-t anti-identity, (-1)^(t(t-1)/2). Throws IndexOutOfRange for t == 0.
[[nodiscard]] Rational anti_identity_sign(std::size_t t);

// --- Hankel system H d = a --------------------------------------------------
//
// For deg f = n >= deg g = m, the high coefficients of f = g q + r give
// H (d_{n-m}, ..., d_0)^T = (a_m, ..., a_n)^T with H the backward upper
// triangular Hankel matrix of order n-m+1, H(i, j) = g_{2m-n+i+j} (0-based,
// out-of-range coefficients zero). Its anti-diagonal is constant b_m.

/// Throws ZeroDivisor for g == 0, DegreeTooSmall for n < m, LimitExceeded
/// when n-m+1 exceeds the order cap.
[[nodiscard]] ExactMatrix build_hankel(const Polynomial& g, std::size_t n,
                                       const MatrixLimits& limits = {});

/// (-1)^(k(k-1)/2) b_m^k with k = n-m+1, no matrix built.
[[nodiscard]] Rational hankel_det_closed(const Polynomial& g, std::size_t n);

// --- Bordered matrix W and its Hessenberg form ------------------------------
//
//   W = | H    a |     a   = (a_m, ..., a_n)^T
//       | x^T  0 |     x^T = (x^{n-m}, ..., x, 1)
//
// of order t = n-m+2, evaluated at a rational point. det W = -det(H) q(x).

/// Throws ZeroDivisor for g == 0 and DegreeTooSmall when f is zero or deg f < deg g.
[[nodiscard]] ExactMatrix build_bordered(const Polynomial& f, const Polynomial& g,
                                         const Rational& x0, const MatrixLimits& limits = {});

/// W with the border moved to the first row and column (same determinant).
[[nodiscard]] ExactMatrix build_permuted(const Polynomial& f, const Polynomial& g,
                                         const Rational& x0, const MatrixLimits& limits = {});

/// Lower Hessenberg-Toeplitz matrix H_t = P_t T: first column a_n..a_m, 0,
/// Toeplitz divisor block with superdiagonal b_m, monomial last row.
[[nodiscard]] ExactMatrix build_hessenberg(const Polynomial& f, const Polynomial& g,
                                           const Rational& x0, const MatrixLimits& limits = {});

/// det_oracle(build_bordered(f, g, x0)).
[[nodiscard]] Rational det_W_at(const Polynomial& f, const Polynomial& g, const Rational& x0,
                                const MatrixLimits& limits = {});

// --- Mixed Hessenberg minors ------------------------------------------------
//
// Delta_k (1 <= k <= n-m+1) is the leading k x k block of H_t: first column
// a_n, ..., a_{n-k+1}; entry (r, c) for c >= 1 is g_{m+c-1-r} in raw
// coefficients.

struct DeltaMixedSpec {
    Polynomial f;
    Polynomial g;
    std::size_t k = 1;
};

[[nodiscard]] ExactMatrix build_delta_mixed(const DeltaMixedSpec& spec,
                                            const MatrixLimits& limits = {});

/// First-column Laplace recursion, O(k^2) scalar operations. Throws
/// IndexOutOfRange unless 1 <= k <= n-m+1.
[[nodiscard]] Rational delta_mixed(const DeltaMixedSpec& spec);

/// Delta_1 .. Delta_{n-m+1} in one pass (index 0 holds Delta_1).
[[nodiscard]] std::vector<Rational> delta_mixed_all(const Polynomial& f, const Polynomial& g);

/// det(H_t) = sum_{i=2}^{t} (-1)^{t-i} x0^{t-i} b_m^{t-i} Delta_{i-1}.
[[nodiscard]] Rational hessenberg_det_expansion(const Polynomial& f, const Polynomial& g,
                                                const Rational& x0);

/// d_j = (-1)^{t-j} b_m^{j+1-t} Delta_{t-1-j},  t = n-m+2.
/// Throws ZeroDivisor and DegreeTooSmall like quotient_closed.
[[nodiscard]] Polynomial quotient_from_dets(const Polynomial& f, const Polynomial& g);

/// q = -det W / det H, with det W evaluated at n-m+1 fixed nodes and the
/// quotient recovered by interpolation.
[[nodiscard]] Polynomial quotient_ratio(const Polynomial& f, const Polynomial& g,
                                        const MatrixLimits& limits = {});

// --- Pure Hessenberg-Toeplitz determinants ----------------------------------
//
// k x k matrix built only from the divisor's negated tail c:
//
//   standard:  superdiagonal  b_m, entry (r, c<=r) = -c_{m-1-(r-c)}
//   flipped:   superdiagonal -b_m, entry (r, c<=r) = +c_{m-1-(r-c)}
//
// with c_j = 0 for j < 0. The flipped determinant is (-1)^k times the standard one.

enum class DeltaSign {
    standard,
    flipped,
};

struct DeltaPureSpec {
    DivisorViews views;
    std::size_t k = 1;
};

/// Throws IndexOutOfRange for k == 0, LimitExceeded above the order cap.
[[nodiscard]] ExactMatrix build_delta_pure(const DeltaPureSpec& spec, DeltaSign sign,
                                           const MatrixLimits& limits = {});

/// det_oracle of the explicit matrix.
[[nodiscard]] Rational delta_pure_direct(const DeltaPureSpec& spec,
                                         DeltaSign sign = DeltaSign::standard,
                                         const MatrixLimits& limits = {});

/// Closed form through the t-sequence:
///   standard: (-1)^k b_m^k sum_{i=1}^{k} t_i c_{m-(k+1)+i}
///   flipped:          b_m^k sum_{i=1}^{k} t_i c_{m-(k+1)+i}
[[nodiscard]] Rational delta_pure_closed(const DeltaPureSpec& spec,
                                         DeltaSign sign = DeltaSign::standard);

// --- Division pipelines ------------------------------------------------------

/// quotient_from_dets + remainder_closed, with the usual short-circuits.
[[nodiscard]] DivisionResult divide_det_formula(const Polynomial& f, const Polynomial& g);

/// quotient_ratio + remainder_closed, with the usual short-circuits.
[[nodiscard]] DivisionResult divide_det_ratio(const Polynomial& f, const Polynomial& g,
                                              const MatrixLimits& limits = {});

} // namespace polydiv
