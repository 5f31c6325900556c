#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "eraser/analysis/chi_square.hpp"
#include "eraser/analysis/coincidence.hpp"
#include "eraser/analysis/fringe.hpp"
#include "eraser/models/bases.hpp"
#include "eraser/models/mzi.hpp"
#include "eraser/models/prediction.hpp"
#include "eraser/models/spins.hpp"
#include "eraser/models/twoslit.hpp"
#include "eraser/qcore/density.hpp"
#include "eraser/qcore/errors.hpp"
#include "eraser/runner/runner.hpp"

namespace fs = std::filesystem;

namespace eraser::cli {

namespace {

using analysis::CoincidenceTable;
using models::FringeCondition;
using models::MziModel;
using models::SpinPairModel;
using models::TwoSlitModel;
using qcore::MeasurementBasis;
using qcore::StateVector;
using runner::MeasurementSchedule;
using runner::Order;
using runner::QuantonBasis;
using runner::TrialRecord;
using runner::WwdBasis;

// 12 significant digits, '.' decimal separator, locale-independent.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct SummaryRow {
  std::string claim;
  std::string quantity;
  double value;
};

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "claim,quantity,value\n";
  for (const auto& r : rows) {
    out << r.claim << ',' << r.quantity << ',' << fmt(r.value) << '\n';
  }
  return out.str();
}

// Exact joint distribution P(quanton=i, wwd=j) from the state, computed
// quanton-first; measurement order does not change it.
std::vector<std::vector<double>> exact_joint(const StateVector& state,
                                             const MeasurementBasis& quanton,
                                             const MeasurementBasis& wwd) {
  const auto pq = outcome_probabilities(state, quanton);
  std::vector<std::vector<double>> joint(pq.size(),
                                         std::vector<double>(wwd.dim(), 0.0));
  for (size_t i = 0; i < pq.size(); ++i) {
    if (pq[i] <= 0.0) continue;
    const StateVector given = collapse(state, quanton, static_cast<int>(i));
    const auto pw = outcome_probabilities(given, wwd);
    for (int j = 0; j < wwd.dim(); ++j) joint[i][j] = pq[i] * pw[j];
  }
  return joint;
}

MeasurementSchedule schedule_from(const RunConfig& cfg) {
  MeasurementSchedule s;
  s.order = cfg.order == "eager" ? Order::kEager : Order::kDelayed;
  s.wwd_basis = cfg.wwd_basis == "z"   ? WwdBasis::kZ
                : cfg.wwd_basis == "x" ? WwdBasis::kX
                                       : WwdBasis::kNone;
  if (cfg.model == "mzi") {
    s.quanton_basis = QuantonBasis::kDetector;
  } else if (cfg.model == "twoslit") {
    s.quanton_basis = QuantonBasis::kScreen;
  } else {
    // Spin pair: both spins are read in the same basis family.
    s.quanton_basis =
        s.wwd_basis == WwdBasis::kX ? QuantonBasis::kX : QuantonBasis::kZ;
  }
  return s;
}

TwoSlitModel twoslit_from(const RunConfig& cfg) {
  const double half_span = 3.0 * cfg.envelope_width;
  return TwoSlitModel(
      cfg.slit_separation, cfg.wavelength, cfg.screen_distance,
      cfg.envelope_width,
      models::ScreenGrid::uniform(-half_span, half_span, cfg.bins));
}

// ---------------------------------------------------------------- analytic

std::vector<SummaryRow> mzi_analytic_rows(const RunConfig& cfg) {
  std::vector<SummaryRow> rows;
  MziModel model;
  model.wwd_enabled = cfg.wwd_enabled;
  const StateVector state = mzi_final_state(model);
  const MeasurementBasis det = models::detector_basis();
  const auto pd = outcome_probabilities(state, det);

  if (!cfg.wwd_enabled) {
    rows.push_back({"no_wwd_bright_fringe", "P(D1)", pd[0]});
    rows.push_back({"no_wwd_dark_fringe", "P(D2)", pd[1]});
    return rows;
  }

  rows.push_back({"wwd_kills_interference", "P(D1)", pd[0]});
  rows.push_back({"wwd_kills_interference", "P(D2)", pd[1]});

  if (cfg.wwd_basis == "z") {
    const MeasurementBasis z = models::z_basis(1);
    const StateVector given_up = collapse(state, z, 0);
    rows.push_back({"eager_z_no_interference", "P(D1|up)",
                    outcome_probabilities(given_up, det)[0]});
    rows.push_back({"eager_z_no_interference", "P(D2|up)",
                    outcome_probabilities(given_up, det)[1]});
    const StateVector given_d1 = collapse(state, det, 0);
    const auto pz = outcome_probabilities(given_d1, z);
    rows.push_back({"delayed_z_no_which_way_info", "P(up|D1)", pz[0]});
    rows.push_back({"delayed_z_no_which_way_info", "P(down|D1)", pz[1]});
    rows.push_back({"delayed_z_no_which_way_info", "MI(click;z)_bits",
                    analysis::mutual_information_bits(exact_joint(state, det, z))});
  } else if (cfg.wwd_basis == "x") {
    const MeasurementBasis x = models::x_basis(1);
    const StateVector given_plus = collapse(state, x, 0);
    const StateVector given_minus = collapse(state, x, 1);
    rows.push_back({"eager_x_erasure", "P(D1|plus)",
                    outcome_probabilities(given_plus, det)[0]});
    rows.push_back({"eager_x_erasure", "P(D2|minus)",
                    outcome_probabilities(given_minus, det)[1]});
    const StateVector given_d1 = collapse(state, det, 0);
    const StateVector given_d2 = collapse(state, det, 1);
    rows.push_back({"click_predicts_x", "P(plus|D1)",
                    outcome_probabilities(given_d1, x)[0]});
    rows.push_back({"click_predicts_x", "P(minus|D2)",
                    outcome_probabilities(given_d2, x)[1]});
    rows.push_back({"click_predicts_x", "MI(click;x)_bits",
                    analysis::mutual_information_bits(exact_joint(state, det, x))});
  }
  return rows;
}

std::vector<SummaryRow> twoslit_analytic_rows(const TwoSlitModel& model,
                                              const RunConfig& cfg) {
  std::vector<SummaryRow> rows;
  rows.push_back({"x_branch_weights", "P(plus)",
                  branch_probability(model, FringeCondition::kXPlus)});
  rows.push_back({"x_branch_weights", "P(minus)",
                  branch_probability(model, FringeCondition::kXMinus)});

  const auto pdf_all = twoslit_pdf(model, FringeCondition::kNone);
  const auto pdf_plus = twoslit_pdf(model, FringeCondition::kXPlus);
  const auto pdf_minus = twoslit_pdf(model, FringeCondition::kXMinus);
  rows.push_back({"no_coincidence_no_fringe", "visibility(all)",
                  analysis::fringe_visibility(pdf_all, model).visibility});
  rows.push_back({"conditioned_fringes_recovered", "visibility(plus)",
                  analysis::fringe_visibility(pdf_plus, model).visibility});
  rows.push_back({"conditioned_fringes_recovered", "visibility(minus)",
                  analysis::fringe_visibility(pdf_minus, model).visibility});

  const models::PredictionRule rule{cfg.eta};
  int definite_plus = 0, definite_minus = 0;
  for (int b = 0; b < model.grid().nbins; ++b) {
    switch (predict_x_state_from_position(model, rule, b)) {
      case models::XPrediction::kPlus:
        ++definite_plus;
        break;
      case models::XPrediction::kMinus:
        ++definite_minus;
        break;
      default:
        break;
    }
  }
  rows.push_back({"position_predicts_x", "definite_plus_bins",
                  static_cast<double>(definite_plus)});
  rows.push_back({"position_predicts_x", "definite_minus_bins",
                  static_cast<double>(definite_minus)});
  return rows;
}

std::vector<SummaryRow> spins_analytic_rows() {
  std::vector<SummaryRow> rows;
  const StateVector state = models::spin_pair_state();
  const auto jz = exact_joint(state, models::z_basis(0), models::z_basis(1));
  const auto jx = exact_joint(state, models::x_basis(0), models::x_basis(1));
  rows.push_back({"spin_z_correlation", "P(z1=z2)", jz[0][0] + jz[1][1]});
  rows.push_back({"spin_x_correlation", "P(x1=x2)", jx[0][0] + jx[1][1]});
  const StateVector given_down = collapse(state, models::z_basis(0), 1);
  rows.push_back({"spin_cross_basis_null", "P(x2=plus|z1=down)",
                  outcome_probabilities(given_down, models::x_basis(1))[0]});
  return rows;
}

std::string fringes_csv_analytic(const TwoSlitModel& model) {
  const auto pdf_all = twoslit_pdf(model, FringeCondition::kNone);
  const auto pdf_plus = twoslit_pdf(model, FringeCondition::kXPlus);
  const auto pdf_minus = twoslit_pdf(model, FringeCondition::kXMinus);
  std::ostringstream out;
  out << "bin_center,pdf_total,pdf_plus,pdf_minus\n";
  for (int b = 0; b < model.grid().nbins; ++b) {
    out << fmt(model.grid().center(b)) << ',' << fmt(pdf_all[b]) << ','
        << fmt(pdf_plus[b]) << ',' << fmt(pdf_minus[b]) << '\n';
  }
  return out.str();
}

// -------------------------------------------------------------- monte carlo

struct PredictionColumns {
  std::vector<std::string> predicted;
  std::vector<std::string> matched;  // "1"/"0", empty when undetermined
};

PredictionColumns prediction_columns(const std::vector<TrialRecord>& records,
                                     const RunConfig& cfg,
                                     const TwoSlitModel* twoslit) {
  PredictionColumns cols;
  cols.predicted.reserve(records.size());
  cols.matched.reserve(records.size());
  const models::PredictionRule rule{cfg.eta};
  for (const auto& rec : records) {
    std::string predicted;
    if (cfg.model == "mzi") {
      predicted = models::predict_x_state_from_click(rec.outcomes[0].label);
    } else {
      const auto p =
          predict_x_state_from_position(*twoslit, rule, rec.outcomes[0].index);
      if (p != models::XPrediction::kUndetermined) predicted = to_string(p);
    }
    if (predicted.empty()) {
      cols.predicted.emplace_back("undetermined");
      cols.matched.emplace_back("");
    } else {
      cols.predicted.push_back(predicted);
      cols.matched.emplace_back(rec.outcomes[1].label == predicted ? "1" : "0");
    }
  }
  return cols;
}

std::string trials_csv(const std::vector<TrialRecord>& records,
                       const PredictionColumns* pred) {
  std::ostringstream out;
  out << "trial_id,order,first_label,second_label,seed";
  if (pred != nullptr) out << ",predicted,matched";
  out << '\n';
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    out << rec.trial_id << ',' << to_string(rec.order) << ','
        << rec.outcomes[0].label << ','
        << (rec.outcomes.size() > 1 ? rec.outcomes[1].label : std::string{})
        << ',' << rec.seed_used;
    if (pred != nullptr) {
      out << ',' << pred->predicted[i] << ',' << pred->matched[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string fringes_csv_mc(const analysis::FringeHistogram& hist) {
  std::ostringstream out;
  out << "bin_center,count_total,count_plus,count_minus\n";
  for (size_t b = 0; b < hist.bin_centers.size(); ++b) {
    out << fmt(hist.bin_centers[b]) << ',' << hist.total[b] << ','
        << hist.plus[b] << ',' << hist.minus[b] << '\n';
  }
  return out.str();
}

void append_mzi_mc_rows(const std::vector<TrialRecord>& records,
                        const RunConfig& cfg, std::vector<SummaryRow>& rows) {
  const CoincidenceTable table = analysis::coincidence_table(records);
  const double n = static_cast<double>(table.total());
  rows.push_back({"wwd_kills_interference", "freq(D1)",
                  static_cast<double>(table.row_total("D1")) / n});
  rows.push_back({"wwd_kills_interference", "freq(D2)",
                  static_cast<double>(table.row_total("D2")) / n});
  if (cfg.wwd_basis == "z") {
    rows.push_back({"delayed_z_no_which_way_info", "freq(up|D1)",
                    conditional_probability(table, "D1", "up")});
    rows.push_back({"delayed_z_no_which_way_info", "MI_bits",
                    analysis::mutual_information_bits(table)});
  } else if (cfg.wwd_basis == "x") {
    rows.push_back({"click_predicts_x", "freq(plus|D1)",
                    conditional_probability(table, "D1", "plus")});
    rows.push_back({"click_predicts_x", "freq(minus|D2)",
                    conditional_probability(table, "D2", "minus")});
    rows.push_back({"click_predicts_x", "MI_bits",
                    analysis::mutual_information_bits(table)});
  }
}

void append_spins_mc_rows(const std::vector<TrialRecord>& records,
                          const RunConfig& cfg, std::vector<SummaryRow>& rows) {
  const CoincidenceTable table = analysis::coincidence_table(records);
  const double n = static_cast<double>(table.total());
  std::int64_t equal = 0;
  for (const auto& label : table.rows()) {
    if (table.col_index(label) >= 0) equal += table.count(label, label);
  }
  const std::string claim =
      cfg.wwd_basis == "x" ? "spin_x_correlation" : "spin_z_correlation";
  const std::string quantity =
      cfg.wwd_basis == "x" ? "freq(x1=x2)" : "freq(z1=z2)";
  rows.push_back({claim, quantity, static_cast<double>(equal) / n});
}

void append_twoslit_mc_rows(const analysis::FringeHistogram& hist,
                            const TwoSlitModel& model,
                            const PredictionColumns* pred,
                            std::vector<SummaryRow>& rows) {
  rows.push_back({"no_coincidence_no_fringe", "visibility(all)",
                  visibility(hist, analysis::FringeSubset::kAll, model).visibility});
  if (hist.has_split) {
    rows.push_back({"conditioned_fringes_recovered", "visibility(plus)",
                    visibility(hist, analysis::FringeSubset::kPlus, model).visibility});
    rows.push_back({"conditioned_fringes_recovered", "visibility(minus)",
                    visibility(hist, analysis::FringeSubset::kMinus, model).visibility});
  }
  if (pred != nullptr) {
    std::int64_t definite = 0, matched = 0;
    for (size_t i = 0; i < pred->matched.size(); ++i) {
      if (pred->matched[i].empty()) continue;
      ++definite;
      if (pred->matched[i] == "1") ++matched;
    }
    rows.push_back({"position_predicts_x", "definite_fraction",
                    pred->matched.empty()
                        ? 0.0
                        : static_cast<double>(definite) /
                              static_cast<double>(pred->matched.size())});
    if (definite > 0) {
      rows.push_back({"position_predicts_x", "freq(match|definite)",
                      static_cast<double>(matched) /
                          static_cast<double>(definite)});
    }
  }
}

int execute(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  std::vector<SummaryRow> rows;
  std::optional<TwoSlitModel> twoslit;
  if (cfg.model == "twoslit") twoslit.emplace(twoslit_from(cfg));

  // Analytic reference rows are always emitted; Monte Carlo runs append
  // empirical frequencies next to them.
  if (cfg.model == "mzi") {
    rows = mzi_analytic_rows(cfg);
  } else if (cfg.model == "twoslit") {
    rows = twoslit_analytic_rows(*twoslit, cfg);
  } else {
    rows = spins_analytic_rows();
  }

  if (cfg.mode == "montecarlo") {
    const MeasurementSchedule schedule = schedule_from(cfg);
    const runner::RngSpec rng{cfg.seed};
    std::vector<TrialRecord> records;
    if (cfg.model == "mzi") {
      MziModel model;
      model.wwd_enabled = cfg.wwd_enabled;
      records = runner::run_batch(model, schedule, cfg.trials, rng);
      if (!records.empty()) append_mzi_mc_rows(records, cfg, rows);
    } else if (cfg.model == "twoslit") {
      records = runner::run_batch(*twoslit, schedule, cfg.trials, rng);
    } else {
      records = runner::run_batch(SpinPairModel{}, schedule, cfg.trials, rng);
      if (!records.empty() && cfg.wwd_basis != "none") {
        append_spins_mc_rows(records, cfg, rows);
      }
    }

    std::optional<PredictionColumns> pred;
    if (cfg.predict) {
      pred = prediction_columns(records, cfg,
                                twoslit ? &*twoslit : nullptr);
    }
    atomic_write(fs::path(cfg.out_dir) / "trials.csv",
                 trials_csv(records, pred ? &*pred : nullptr));
    if (cfg.model == "twoslit") {
      const auto hist = analysis::fringe_histogram(records, *twoslit);
      atomic_write(fs::path(cfg.out_dir) / "fringes.csv",
                   fringes_csv_mc(hist));
      if (!records.empty()) {
        append_twoslit_mc_rows(hist, *twoslit, pred ? &*pred : nullptr, rows);
      }
    }
  } else if (cfg.model == "twoslit") {
    atomic_write(fs::path(cfg.out_dir) / "fringes.csv",
                 fringes_csv_analytic(*twoslit));
  }

  atomic_write(fs::path(cfg.out_dir) / "summary.csv", summary_csv(rows));
  return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string wwd = "on";

  CLI::App app{"Delayed-choice quantum eraser simulations"};
  app.add_option("--model", cfg.model, "mzi | twoslit | spins")
      ->required()
      ->check(CLI::IsMember({"mzi", "twoslit", "spins"}));
  app.add_option("--order", cfg.order,
                 "measurement order: eager (which-way detector first) or "
                 "delayed (quanton first)")
      ->check(CLI::IsMember({"eager", "delayed"}));
  app.add_option("--wwd-basis", cfg.wwd_basis,
                 "which-way detector readout basis")
      ->check(CLI::IsMember({"z", "x", "none"}));
  app.add_option("--wwd", wwd, "which-way detector present (mzi only: on|off)")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--mode", cfg.mode, "analytic | montecarlo")
      ->check(CLI::IsMember({"analytic", "montecarlo"}));
  app.add_option("--trials", cfg.trials, "Monte Carlo trial count")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "master seed for per-trial RNG streams");
  app.add_option("--bins", cfg.bins, "screen bins (twoslit)")
      ->check(CLI::Range(2, 100000));
  app.add_option("--d", cfg.slit_separation, "slit separation");
  app.add_option("--lambda", cfg.wavelength, "wavelength");
  app.add_option("--dist", cfg.screen_distance, "slit-to-screen distance");
  app.add_option("--width", cfg.envelope_width, "envelope width at the screen");
  app.add_option("--eta", cfg.eta, "dominance threshold for position predictions");
  app.add_option("--out-dir", cfg.out_dir, "output directory");
  app.add_flag("--predict", cfg.predict,
               "add prediction-verification columns (delayed x-basis runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  cfg.wwd_enabled = wwd == "on";
  auto usage_error = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n\n" << app.help();
    return 2;
  };
  if (!cfg.wwd_enabled) {
    if (cfg.model != "mzi") {
      return usage_error("--wwd off is only meaningful for --model mzi");
    }
    if (app.count("--wwd-basis") > 0 && cfg.wwd_basis != "none") {
      return usage_error("--wwd off cannot be combined with a --wwd-basis");
    }
    cfg.wwd_basis = "none";
  }
  if (cfg.predict) {
    if (cfg.mode != "montecarlo" || cfg.order != "delayed" ||
        cfg.wwd_basis != "x" || cfg.model == "spins") {
      return usage_error(
          "--predict requires a delayed montecarlo run with --wwd-basis x "
          "on mzi or twoslit");
    }
  }

  try {
    return execute(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace eraser::cli
