#pragma once

// The Lorentzian form L(A, B) = Tr(AB) - Tr(A) Tr(B) on Gram forms and its
// Hermitian and quaternionic analogues. Positive semi-definite forms lie in
// the closed negative cone; rank <= 1 forms (collinear configurations) lie
// on the light cone.

#include "cmvar/algebras.hpp"
#include "cmvar/distances.hpp"

#include <Eigen/Dense>

#include <string>

namespace cmvar {

enum class ConeRegion { NegativeCone, LightCone, PositiveRegion };

std::string to_string(ConeRegion r);

struct LorentzReport {
  double value = 0.0;
  ConeRegion region = ConeRegion::LightCone;
  bool is_extremal_candidate = false;
};

/// Throws InputError on size mismatch.
double lorentz_L(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double lorentz_L(const GramForm& a, const GramForm& b);

/// Tr(A B*) - Tr(A) Tr(B*), real for self-adjoint inputs. Throws
/// InputError on size mismatch, SelfAdjointnessViolation otherwise.
double lorentz_hermitian(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                         double tol = 1e-9);

/// Tr((AB + BA)/2) - Tr(A) Tr(B) with real-part traces.
double lorentz_quaternionic(const QuatMatrix& a, const QuatMatrix& b, double tol = 1e-9);

/// Region of L(A, A) with threshold tol * ||A||_2^2, plus
/// the rank <= 1 extremal flag.
LorentzReport cone_classify(const Eigen::MatrixXd& a, double tol = kDefaultTol);
LorentzReport cone_classify(const GramForm& a, double tol = kDefaultTol);

/// Matrix of L in an orthonormal (Frobenius) basis of symmetric m x m
/// matrices, m = n-1; size C(n,2).
Eigen::MatrixXd lorentz_form_matrix(int n);

/// Hyperbolic distance acosh(-L(A,B) / sqrt(L(A,A) L(B,B))) between two
/// points of the open negative cone (same sheet). Throws DomainError
/// otherwise.
double hyperbolic_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace cmvar
