// Chi-square tests used to compare measurement-order arms and to check
// empirical joint distributions against exact ones.

#pragma once

#include <vector>

#include "eraser/analysis/coincidence.hpp"

namespace eraser::analysis {

struct ChiSquareReport {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  bool pass = true;
};

// Two-sample homogeneity test over the flattened joint cells of two tables
// with identical labels (cells with expected count < 5 are pooled). Passes
// iff p_value > significance.
ChiSquareReport order_independence_test(const CoincidenceTable& eager,
                                        const CoincidenceTable& delayed,
                                        double significance = 0.001);

// Goodness of fit of a table against an exact joint distribution, indexed
// [row][col] in the table's label order. A nonzero count on a zero-probability
// cell fails outright (p_value 0).
ChiSquareReport chi_square_goodness_of_fit(
    const CoincidenceTable& table,
    const std::vector<std::vector<double>>& expected_joint,
    double significance = 0.001);

}  // namespace eraser::analysis
