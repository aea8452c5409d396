#include "cvbell/figures.hpp"

#include <cstdio>

#include "cvbell/bell.hpp"
#include "cvbell/errors.hpp"
#include "cvbell/optimizer.hpp"
#include "cvbell/parallel.hpp"

namespace cvbell {

namespace {

struct Row {
  int n;
  double r;
  double x;
  double value;
};

void write_rows(const std::vector<Row>& rows, bool with_squeezing, std::ostream& out) {
  for (const auto& row : rows) {
    out << row.n << ',';
    if (with_squeezing) out << format_real(row.r) << ',';
    out << format_real(row.x) << ',' << format_real(row.value) << '\n';
  }
}

void figure_surfaces(std::ostream& out) {
  out << "n,r,j,value\n";
  std::vector<double> rs;
  std::vector<double> js;
  for (int i = 0; i <= 100; ++i) rs.push_back(0.02 * i);
  for (int k = 0; k <= 200; ++k) js.push_back(0.005 * k);
  for (int n = 2; n <= 5; ++n) {
    const auto values = scan_surface(n, rs, js);
    std::vector<Row> rows;
    rows.reserve(values.size());
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      rows.push_back({n, rs[idx / js.size()], js[idx % js.size()], values[idx].value});
    }
    write_rows(rows, true, out);
  }
}

void figure_asymptotic(std::ostream& out) {
  out << "n,a,value\n";
  for (int n : large_party_counts()) {
    const EqualSettingsBell bell(n);
    std::vector<Row> rows(1500);
    parallel_for(rows.size(), [&](std::size_t i) {
      const double a = 0.001 * static_cast<double>(i + 1);
      rows[i] = {n, 0.0, a, bell.asymptotic(a).value};
    });
    write_rows(rows, false, out);
  }
}

void figure_finite(std::ostream& out) {
  out << "n,r,j,value\n";
  constexpr int kSteps = 400;
  for (double r : comparison_squeezings()) {
    for (int n : large_party_counts()) {
      const double j_hi = 4.0 * maximize_over_displacement(n, r).argmax;
      const EqualSettingsBell bell(n);
      std::vector<Row> rows(kSteps + 1);
      parallel_for(rows.size(), [&](std::size_t k) {
        const double j = j_hi * static_cast<double>(k) / kSteps;
        rows[k] = {n, r, j, bell.at(r, j).value};
      });
      write_rows(rows, true, out);
    }
  }
}

}  // namespace

const std::vector<int>& large_party_counts() {
  static const std::vector<int> counts{5, 9, 15, 25, 45, 85};
  return counts;
}

const std::vector<double>& comparison_squeezings() {
  static const std::vector<double> rs{0.1, 0.3, 0.8, 1.5};
  return rs;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_figure(int which, std::ostream& out) {
  switch (which) {
    case 1:
      figure_surfaces(out);
      break;
    case 2:
      figure_asymptotic(out);
      break;
    case 3:
      figure_finite(out);
      break;
    default:
      throw InvalidArgument("figure: --which must be 1, 2 or 3");
  }
}

std::string figure_grid_description() {
  return "Figure grids (CSV, header row, 17 significant digits):\n"
         "  1: n,r,j,value  n=2..5, r=0.02*i (i=0..100), J=0.005*k (k=0..200)\n"
         "  2: n,a,value    n in {5,9,15,25,45,85}, A=0.001*i (i=1..1500), large-squeezing limit\n"
         "  3: n,r,j,value  n as in 2, r in {0.1,0.3,0.8,1.5}, J=k*J_hi/400 (k=0..400),\n"
         "                  J_hi = 4 x the optimal J at that (n, r)\n";
}

}  // namespace cvbell
