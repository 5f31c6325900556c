#include "eraser/analysis/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eraser::analysis {

CoincidenceTable::CoincidenceTable(std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : rows_(std::move(row_labels)), cols_(std::move(col_labels)) {
  if (rows_.empty() || cols_.empty()) {
    throw std::invalid_argument("CoincidenceTable: empty label set");
  }
  auto unique = [](const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end()).size() == v.size();
  };
  if (!unique(rows_) || !unique(cols_)) {
    throw std::invalid_argument("CoincidenceTable: duplicate labels");
  }
  counts_.assign(rows_.size() * cols_.size(), 0);
}

int CoincidenceTable::row_index(const std::string& label) const {
  auto it = std::find(rows_.begin(), rows_.end(), label);
  return it == rows_.end() ? -1 : static_cast<int>(it - rows_.begin());
}

int CoincidenceTable::col_index(const std::string& label) const {
  auto it = std::find(cols_.begin(), cols_.end(), label);
  return it == cols_.end() ? -1 : static_cast<int>(it - cols_.begin());
}

void CoincidenceTable::add(const std::string& row, const std::string& col,
                           std::int64_t n) {
  const int r = row_index(row);
  const int c = col_index(col);
  if (r < 0 || c < 0) {
    throw std::invalid_argument("CoincidenceTable: unknown label");
  }
  counts_[r * cols_.size() + c] += n;
  total_ += n;
}

std::int64_t CoincidenceTable::count(const std::string& row,
                                     const std::string& col) const {
  const int r = row_index(row);
  const int c = col_index(col);
  if (r < 0 || c < 0) {
    throw std::invalid_argument("CoincidenceTable: unknown label");
  }
  return at(r, c);
}

std::int64_t CoincidenceTable::row_total(const std::string& row) const {
  const int r = row_index(row);
  if (r < 0) throw std::invalid_argument("CoincidenceTable: unknown row");
  std::int64_t s = 0;
  for (size_t c = 0; c < cols_.size(); ++c) s += at(r, static_cast<int>(c));
  return s;
}

std::int64_t CoincidenceTable::col_total(const std::string& col) const {
  const int c = col_index(col);
  if (c < 0) throw std::invalid_argument("CoincidenceTable: unknown column");
  std::int64_t s = 0;
  for (size_t r = 0; r < rows_.size(); ++r) s += at(static_cast<int>(r), c);
  return s;
}

namespace {

// Quanton outcome is the one measured in the order the schedule dictates.
std::pair<const qcore::Outcome*, const qcore::Outcome*> split_roles(
    const runner::TrialRecord& rec) {
  if (rec.outcomes.size() == 1) return {&rec.outcomes[0], nullptr};
  if (rec.order == runner::Order::kEager) {
    return {&rec.outcomes[1], &rec.outcomes[0]};
  }
  return {&rec.outcomes[0], &rec.outcomes[1]};
}

}  // namespace

CoincidenceTable coincidence_table(
    std::span<const runner::TrialRecord> records) {
  if (records.empty()) {
    throw std::invalid_argument("coincidence_table: no records");
  }
  const size_t shape = records.front().outcomes.size();
  std::set<std::string> row_set, col_set;
  for (const auto& rec : records) {
    if (rec.outcomes.size() != shape) {
      throw std::invalid_argument("coincidence_table: inconsistent record shapes");
    }
    auto [quanton, wwd] = split_roles(rec);
    row_set.insert(quanton->label);
    if (wwd != nullptr) col_set.insert(wwd->label);
  }
  if (col_set.empty()) col_set.insert("none");

  CoincidenceTable table({row_set.begin(), row_set.end()},
                         {col_set.begin(), col_set.end()});
  for (const auto& rec : records) {
    auto [quanton, wwd] = split_roles(rec);
    table.add(quanton->label, wwd != nullptr ? wwd->label : "none");
  }
  return table;
}

double conditional_probability(const CoincidenceTable& table,
                               const std::string& given,
                               const std::string& target) {
  if (table.col_index(given) >= 0) {
    const std::int64_t denom = table.col_total(given);
    if (denom == 0) {
      throw EmptyCondition("conditional_probability: no counts for '" + given + "'");
    }
    return static_cast<double>(table.count(target, given)) /
           static_cast<double>(denom);
  }
  if (table.row_index(given) >= 0) {
    const std::int64_t denom = table.row_total(given);
    if (denom == 0) {
      throw EmptyCondition("conditional_probability: no counts for '" + given + "'");
    }
    return static_cast<double>(table.count(given, target)) /
           static_cast<double>(denom);
  }
  throw std::invalid_argument("conditional_probability: unknown label '" +
                              given + "'");
}

double mutual_information_bits(const std::vector<std::vector<double>>& joint) {
  const size_t nr = joint.size();
  if (nr == 0) throw std::invalid_argument("mutual_information: empty joint");
  const size_t nc = joint.front().size();

  std::vector<double> pr(nr, 0.0), pc(nc, 0.0);
  for (size_t r = 0; r < nr; ++r) {
    if (joint[r].size() != nc) {
      throw std::invalid_argument("mutual_information: ragged joint");
    }
    for (size_t c = 0; c < nc; ++c) {
      pr[r] += joint[r][c];
      pc[c] += joint[r][c];
    }
  }
  double mi = 0.0;
  for (size_t r = 0; r < nr; ++r) {
    for (size_t c = 0; c < nc; ++c) {
      const double p = joint[r][c];
      if (p <= 0.0) continue;
      mi += p * std::log2(p / (pr[r] * pc[c]));
    }
  }
  return mi;
}

double mutual_information_bits(const CoincidenceTable& table) {
  if (table.total() == 0) {
    throw std::invalid_argument("mutual_information: empty table");
  }
  const double n = static_cast<double>(table.total());
  std::vector<std::vector<double>> joint(
      table.rows().size(), std::vector<double>(table.cols().size(), 0.0));
  for (size_t r = 0; r < table.rows().size(); ++r) {
    for (size_t c = 0; c < table.cols().size(); ++c) {
      joint[r][c] =
          static_cast<double>(table.at(static_cast<int>(r), static_cast<int>(c))) / n;
    }
  }
  return mutual_information_bits(joint);
}

}  // namespace eraser::analysis
