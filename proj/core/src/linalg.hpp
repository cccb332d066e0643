// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace tflab::detail {

/// Dense Hermitian eigensolver (LAPACK zheevd). On return `values` is
/// descending; with want_vectors the columns of `a` hold the matching
/// eigenvectors. Throws numeric-failure on LAPACK error.
void hermitian_eig(Eigen::MatrixXcd& a, bool want_vectors, std::vector<double>& values);

/// Rotates v so its first component above 1e-6 * max|v| is real positive.
void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v);

}  // namespace tflab::detail
