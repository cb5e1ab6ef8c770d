#pragma once

#include <Eigen/Dense>

namespace gravab {

// exp(A) by scaling and squaring with a diagonal Pade approximant of order
// 3, 5, 7, 9 or 13, picked from the 1-norm of A (Higham 2005 thresholds).
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a);

}  // namespace gravab
