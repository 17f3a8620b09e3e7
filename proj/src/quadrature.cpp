#include "neq/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace neq::quad {

namespace {

// 15-point Kronrod nodes on [0, 1] (positive half) with Kronrod weights,
// and the embedded 7-point Gauss weights on the odd-indexed nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  double resabs;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halflen = 0.5 * (b - a);

  double fv[15];
  const double fc = f(center);
  fv[7] = fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = halflen * xgk[i];
    fv[i] = f(center - dx);
    fv[14 - i] = f(center + dx);
  }

  double resk = wgk[7] * fc;
  double resabs = std::abs(resk);
  double resg = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fsum = fv[i] + fv[14 - i];
    resk += wgk[i] * fsum;
    resabs += wgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) resg += wg[i / 2] * fsum;
  }

  const double mean = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i)
    resasc += wgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

  const double value = resk * halflen;
  resabs *= halflen;
  resasc *= halflen;

  double err = std::abs((resk - resg) * halflen);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, eps50);

  return {a, b, value, err, resabs};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt) {
  Result out;
  if (!(b > a)) return out;

  std::priority_queue<Panel> queue;
  double total = 0.0;
  double total_err = 0.0;
  double total_abs = 0.0;
  int panels = 0;

  auto push_range = [&](double lo, double hi) {
    int n = 1;
    if (opt.max_panel_width > 0.0)
      n = std::max(1, (int)std::ceil((hi - lo) / opt.max_panel_width));
    const double step = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      Panel p = evaluate_panel(f, lo + i * step, lo + (i + 1) * step);
      out.evaluations += 15;
      total += p.value;
      total_err += p.error;
      total_abs += p.resabs;
      queue.push(p);
      ++panels;
    }
  };
  push_range(a, b);

  // Values limited by cancellation cannot be refined below the roundoff of
  // the |f| integral; treat that as an implicit floor.  The coefficient
  // sits well above the per-panel floors (50 eps each), which sum to
  // exactly 50 eps * total_abs and would otherwise never be reachable.
  auto tolerance = [&] {
    const double roundoff =
        1000.0 * std::numeric_limits<double>::epsilon() * total_abs;
    return std::max({opt.rel_tol * std::abs(total), opt.abs_floor, roundoff});
  };

  while (total_err > tolerance() && !queue.empty()) {
    if (panels >= opt.max_panels) {
      out.value = total;
      out.abs_error = total_err;
      out.truncation_point = b;
      out.abs_integral = total_abs;
      throw ConvergenceError("quadrature failed to converge after " +
                                 std::to_string(panels) + " panels",
                             out);
    }
    Panel worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    total_abs -= worst.resabs;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const auto& half :
         {evaluate_panel(f, worst.a, mid), evaluate_panel(f, mid, worst.b)}) {
      out.evaluations += 15;
      total += half.value;
      total_err += half.error;
      total_abs += half.resabs;
      queue.push(half);
      ++panels;
    }
  }

  out.value = total;
  out.abs_error = total_err;
  out.truncation_point = b;
  out.abs_integral = total_abs;
  return out;
}

Result integrate_semi_infinite(const IntegrandSpec& spec, double rel_tol,
                               double abs_floor) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-2))
    throw std::invalid_argument("integrate_semi_infinite: rel_tol out of range");
  if (spec.decay == Decay::BoseExponential && !(spec.rate > 0.0))
    throw std::invalid_argument("integrate_semi_infinite: rate must be > 0");

  Options opt;
  opt.rel_tol = rel_tol;
  opt.abs_floor = abs_floor;
  if (spec.oscillation_period)
    opt.max_panel_width = 0.5 * *spec.oscillation_period;

  // First block: cover the Bose envelope, e^{-45} ~ 3e-20 leaves room for
  // polynomial growth of the rest of the integrand.
  double first;
  if (spec.decay == Decay::BoseExponential) {
    first = 45.0 / spec.rate;
  } else {
    first = 1.0;
  }
  if (spec.oscillation_period)
    first = std::max(first, 4.0 * *spec.oscillation_period);

  Result total;
  double lo = 0.0;
  double hi = first;
  const int max_blocks = 60;
  int consecutive_small = 0;
  for (int block = 0; block < max_blocks; ++block) {
    Options block_opt = opt;
    // Tail blocks matter less; keep their tolerance tied to what is known
    // of the total so far.  Past the Bose envelope the width cap serves no
    // purpose and would make the confirmation blocks needlessly expensive.
    block_opt.abs_floor =
        std::max(abs_floor, 0.1 * rel_tol * std::abs(total.value));
    if (block > 0 && spec.decay == Decay::BoseExponential)
      block_opt.max_panel_width = 0.0;
    Result r;
    try {
      r = integrate(spec.f, lo, hi, block_opt);
    } catch (ConvergenceError& e) {
      e.partial.value += total.value;
      e.partial.abs_error += total.abs_error;
      e.partial.evaluations += total.evaluations;
      throw;
    }
    total.value += r.value;
    total.abs_error += r.abs_error;
    total.evaluations += r.evaluations;
    total.truncation_point = hi;
    total.abs_integral += r.abs_integral;

    const double roundoff = 1000.0 * std::numeric_limits<double>::epsilon() *
                            total.abs_integral;
    const double tail_tol = std::max(
        {rel_tol * std::abs(total.value), abs_floor, roundoff});
    const bool small = std::abs(r.value) + r.abs_error <= 0.5 * tail_tol;
    consecutive_small = small ? consecutive_small + 1 : 0;
    if (consecutive_small >= 2) return total;

    lo = hi;
    hi = 2.0 * hi;
  }
  throw ConvergenceError("semi-infinite integral did not settle", total);
}

}  // namespace neq::quad
