#include "eraser/analysis/chi_square.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <stdexcept>

namespace eraser::analysis {

namespace {

constexpr double kMinExpected = 5.0;  // standard small-cell pooling rule

double upper_tail_p(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareReport order_independence_test(const CoincidenceTable& eager,
                                        const CoincidenceTable& delayed,
                                        double significance) {
  if (eager.rows() != delayed.rows() || eager.cols() != delayed.cols()) {
    throw std::invalid_argument("order_independence_test: mismatched labels");
  }

  // Flatten to aligned cell counts, dropping cells empty in both arms.
  std::vector<double> o1, o2;
  for (size_t r = 0; r < eager.rows().size(); ++r) {
    for (size_t c = 0; c < eager.cols().size(); ++c) {
      const auto a = eager.at(static_cast<int>(r), static_cast<int>(c));
      const auto b = delayed.at(static_cast<int>(r), static_cast<int>(c));
      if (a + b == 0) continue;
      o1.push_back(static_cast<double>(a));
      o2.push_back(static_cast<double>(b));
    }
  }
  const double n1 = static_cast<double>(eager.total());
  const double n2 = static_cast<double>(delayed.total());
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::invalid_argument("order_independence_test: empty table");
  }

  // Pool cells whose expected count in either arm falls below the threshold.
  std::vector<std::pair<double, double>> buckets;
  double rest1 = 0.0, rest2 = 0.0;
  bool have_rest = false;
  for (size_t c = 0; c < o1.size(); ++c) {
    const double pooled = (o1[c] + o2[c]) / (n1 + n2);
    if (std::min(n1 * pooled, n2 * pooled) < kMinExpected) {
      rest1 += o1[c];
      rest2 += o2[c];
      have_rest = true;
    } else {
      buckets.emplace_back(o1[c], o2[c]);
    }
  }
  if (have_rest) buckets.emplace_back(rest1, rest2);

  ChiSquareReport report;
  if (buckets.size() < 2) {
    report.pass = report.p_value > significance;
    return report;
  }
  double stat = 0.0;
  for (const auto& [a, b] : buckets) {
    const double pooled = (a + b) / (n1 + n2);
    const double e1 = n1 * pooled;
    const double e2 = n2 * pooled;
    stat += (a - e1) * (a - e1) / e1 + (b - e2) * (b - e2) / e2;
  }
  report.statistic = stat;
  report.dof = static_cast<int>(buckets.size()) - 1;
  report.p_value = upper_tail_p(stat, report.dof);
  report.pass = report.p_value > significance;
  return report;
}

ChiSquareReport chi_square_goodness_of_fit(
    const CoincidenceTable& table,
    const std::vector<std::vector<double>>& expected_joint,
    double significance) {
  if (expected_joint.size() != table.rows().size()) {
    throw std::invalid_argument("goodness_of_fit: shape mismatch");
  }
  const double n = static_cast<double>(table.total());
  if (n == 0.0) throw std::invalid_argument("goodness_of_fit: empty table");

  std::vector<std::pair<double, double>> cells;  // (observed, probability)
  for (size_t r = 0; r < table.rows().size(); ++r) {
    if (expected_joint[r].size() != table.cols().size()) {
      throw std::invalid_argument("goodness_of_fit: shape mismatch");
    }
    for (size_t c = 0; c < table.cols().size(); ++c) {
      const double obs =
          static_cast<double>(table.at(static_cast<int>(r), static_cast<int>(c)));
      const double p = expected_joint[r][c];
      if (p <= 0.0) {
        if (obs > 0.0) {
          // Impossible outcome observed: fail outright.
          return ChiSquareReport{std::numeric_limits<double>::infinity(), 0,
                                 0.0, false};
        }
        continue;
      }
      cells.emplace_back(obs, p);
    }
  }

  std::vector<std::pair<double, double>> buckets;
  double rest_o = 0.0, rest_p = 0.0;
  bool have_rest = false;
  for (const auto& [obs, p] : cells) {
    if (n * p < kMinExpected) {
      rest_o += obs;
      rest_p += p;
      have_rest = true;
    } else {
      buckets.emplace_back(obs, p);
    }
  }
  if (have_rest) buckets.emplace_back(rest_o, rest_p);

  ChiSquareReport report;
  if (buckets.size() < 2) {
    report.pass = report.p_value > significance;
    return report;
  }
  double stat = 0.0;
  for (const auto& [obs, p] : buckets) {
    const double e = n * p;
    stat += (obs - e) * (obs - e) / e;
  }
  report.statistic = stat;
  report.dof = static_cast<int>(buckets.size()) - 1;
  report.p_value = upper_tail_p(stat, report.dof);
  report.pass = report.p_value > significance;
  return report;
}

}  // namespace eraser::analysis
