#ifndef NEQ_REPRODUCE_HPP
#define NEQ_REPRODUCE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neq/units.hpp"

// Figure sweeps as deterministic CSV, the headline-number report, and the
// small config/sweep plumbing shared by the command-line tool.

namespace neq::cli {

// Flat key=value text with '#' comments; later keys win.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::map<std::string, std::string> load_config_file(const std::string& path);

// 12 significant digits, '.' decimal point, no locale surprises.
std::string format_number(double v);

// One CSV from a header and rows; LF line endings, deterministic layout.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

// Evaluate row_fn(i) for i in [0, n) on up to `jobs` threads; results keep
// index order regardless of completion order.
std::vector<std::vector<double>> run_sweep(
    int n, int jobs, const std::function<std::vector<double>(int)>& row_fn);

enum class Figure {
  Fig1TorqueVsTp,
  Fig2TerminalOmega,
  Fig3TorqueVsSeparation,
  Fig4SlabForce,
  Fig5PcForce,
  Fig5bTerminalVelocity,
  Fig6Cooling,
  Fig7CoolFromHot,
};

std::optional<Figure> figure_by_name(const std::string& name);
std::vector<std::string> figure_names();

struct SweepOptions {
  int jobs = 1;
  double tol = 1e-7;
  int points = 0;  // 0: per-figure default
};

// Fixed parameters per figure (environment temperature, separations, the
// gold damping) are baked in; only resolution and tolerance are knobs.
std::string reproduce_csv(Figure figure, const SweepOptions& opt = {});

struct HeadlineRow {
  std::string name;
  std::string unit;
  double computed = 0.0;
  double reference = 0.0;
  double ratio() const { return computed / reference; }
  bool within(double lo = 0.1, double hi = 10.0) const {
    const double r = std::abs(ratio());
    return r >= lo && r <= hi;
  }
};

// Order-of-magnitude comparison of every quotable number for the gold
// 100 nm preset in a 1 T field.
std::vector<HeadlineRow> headline_rows();
std::string format_headline_report(const std::vector<HeadlineRow>& rows);

}  // namespace neq::cli

#endif  // NEQ_REPRODUCE_HPP
