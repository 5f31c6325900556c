// Coincidence counting: joint tables of (quanton outcome, which-way outcome)
// per trial, plus the conditional probabilities and mutual information
// derived from them.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/runner/runner.hpp"

namespace eraser::analysis {

class EmptyCondition : public std::runtime_error {
 public:
  explicit EmptyCondition(const std::string& what) : std::runtime_error(what) {}
};

// Rows are quanton outcomes, columns which-way outcomes. Batches without a
// which-way measurement produce a single "none" column.
class CoincidenceTable {
 public:
  CoincidenceTable(std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels);

  void add(const std::string& row, const std::string& col,
           std::int64_t n = 1);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  std::int64_t at(int r, int c) const { return counts_[r * cols_.size() + c]; }
  std::int64_t count(const std::string& row, const std::string& col) const;
  std::int64_t row_total(const std::string& row) const;
  std::int64_t col_total(const std::string& col) const;
  std::int64_t total() const { return total_; }

  int row_index(const std::string& label) const;  // -1 if absent
  int col_index(const std::string& label) const;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// Builds the table from a batch. All records must share one schedule shape
// (same outcome count); labels are sorted for deterministic layout.
CoincidenceTable coincidence_table(
    std::span<const runner::TrialRecord> records);

// count(target AND given) / count(given). `given` is looked up among the
// columns first, then the rows; `target` must live on the other axis.
// Throws EmptyCondition when count(given) == 0.
double conditional_probability(const CoincidenceTable& table,
                               const std::string& given,
                               const std::string& target);

// Shannon mutual information of the empirical joint distribution, in bits.
double mutual_information_bits(const CoincidenceTable& table);

// Exact path: mutual information of a normalized joint probability matrix.
double mutual_information_bits(const std::vector<std::vector<double>>& joint);

}  // namespace eraser::analysis
