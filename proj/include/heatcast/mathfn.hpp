#pragma once

namespace heatcast::num {

// Scalar special functions used by the distribution layer. Self-contained
// implementations; accuracy notes are given per function.

double normal_pdf(double z);

/// Standard normal CDF via erfc. Accurate to full double precision.
double normal_cdf(double z);

/// Inverse standard normal CDF. Acklam's rational approximation refined with
/// one Halley step; absolute error below 1e-14 for p in (1e-300, 1-1e-16).
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b), computed with the
/// Lentz continued fraction. Relative error target 1e-12 (stopping tolerance
/// 1e-14, comfortably inside the 1e-10 accuracy budget).
double ibeta(double a, double b, double x);

double digamma(double x);

double student_t_pdf(double z, double nu);
double student_t_log_pdf(double z, double nu);

/// Standard Student-t CDF via the regularized incomplete beta function.
/// Inherits ibeta's accuracy (~1e-12 relative).
double student_t_cdf(double z, double nu);

/// Inverse standard Student-t CDF. Newton iterations on student_t_cdf with a
/// bisection fallback; converges to ~1e-12 in probability space.
double student_t_quantile(double p, double nu);

}  // namespace heatcast::num
