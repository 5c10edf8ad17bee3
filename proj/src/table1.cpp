#include "table1.hpp"

#include <cstdlib>

#include "errors.hpp"

namespace zdensity {

const std::vector<PublishedRow>& published_table1() {
  static const std::vector<PublishedRow> rows = {
      {"0.60", "0.5229", 19399, "4.2288", "2.2841", 333, -81673},
      {"0.65", "0.5552", 40105, "2.4361", "1.7965", 262, -97414},
      {"0.70", "0.5873", 91470, "1.4934", "1.4609", 213, -136370},
      {"0.75", "0.6096", 169119, "1.0031", "1.1442", 167, -169449},
      {"0.76", "0.6136", 188973, "0.9355", "1.0921", 160, -176604},
      {"0.77", "0.6175", 210645, "0.8750", "1.0437", 153, -184134},
      {"0.78", "0.6213", 234346, "0.8205", "0.9986", 146, -192120},
      {"0.79", "0.6250", 260321, "0.7714", "0.9566", 140, -200644},
      {"0.80", "0.6287", 288853, "0.7269", "0.9176", 134, -209795},
      {"0.81", "0.6324", 320270, "0.6864", "0.8812", 129, -219667},
      {"0.82", "0.6361", 354951, "0.6495", "0.8473", 124, -230367},
      {"0.83", "0.6398", 393341, "0.6156", "0.8157", 119, -242009},
      {"0.84", "0.6435", 435955, "0.5846", "0.7862", 115, -254724},
      {"0.85", "0.6472", 483393, "0.5561", "0.7586", 111, -268658},
      {"0.86", "0.6510", 536357, "0.5297", "0.7327", 107, -283978},
      {"0.87", "0.6548", 595670, "0.5053", "0.7085", 104, -300872},
      {"0.88", "0.6587", 662291, "0.4827", "0.6857", 101, -319555},
      {"0.89", "0.6626", 737343, "0.4617", "0.6644", 97, -340272},
      {"0.90", "0.6667", 822142, "0.4421", "0.6443", 95, -363301},
      {"0.91", "0.6708", 918225, "0.4238", "0.6253", 92, -388959},
      {"0.92", "0.6750", 1027390, "0.4066", "0.6075", 89, -417606},
      {"0.93", "0.6793", 1151729, "0.3905", "0.5906", 87, -449647},
      {"0.94", "0.6838", 1293683, "0.3754", "0.5747", 84, -485543},
      {"0.95", "0.6883", 1456079, "0.3612", "0.5596", 82, -525807},
      {"0.96", "0.6930", 1642194, "0.3478", "0.5452", 80, -571018},
      {"0.97", "0.6977", 1855803, "0.3352", "0.5316", 78, -621815},
      {"0.98", "0.7026", 2101249, "0.3232", "0.5187", 76, -678911},
      {"0.99", "0.7077", 2383498, "0.3118", "0.5063", 74, -743087},
  };
  return rows;
}

bool Deviation::within_tolerance() const noexcept {
  return std::llabs(b1) <= kTolB1 && std::llabs(b2) <= kTolB2 && std::llabs(b3) <= kTolB3 && std::llabs(c3) <= kTolC3;
}

namespace {

// "0.5561" -> 5561 (fixed four-decimal strings only).
int64_t ten_thousandths(const std::string& s) {
  std::string digits;
  for (char ch : s) {
    if (ch != '.') digits.push_back(ch);
  }
  return std::stoll(digits);
}

}  // namespace

Deviation deviation_from(const FormattedCoefficients& f, const PublishedRow& row) {
  Deviation d;
  d.b1 = ten_thousandths(f.b1) - ten_thousandths(row.b1);
  d.b2 = ten_thousandths(f.b2) - ten_thousandths(row.b2);
  d.b3 = std::stoll(f.b3) - row.b3;
  d.c3 = std::stoll(f.c3) - row.c3;
  return d;
}

std::vector<Table1Entry> regenerate_table1(const DensityModel& model, const std::vector<std::string>& sigmas,
                                           bool scan_cells) {
  const auto& rows = published_table1();
  for (const auto& s : sigmas) {
    bool known = false;
    for (const auto& r : rows) known = known || Real::parse(s) == Real::parse(r.sigma);
    if (!known) fail(ErrorKind::invalid_argument, "no published row for sigma = " + s);
  }
  mp::ScopedPrecision guard(model.context().working_digits());
  constexpr int kDecimals = 4;
  std::vector<Table1Entry> out;
  for (const auto& row : rows) {
    if (!sigmas.empty()) {
      bool wanted = false;
      for (const auto& s : sigmas) wanted = wanted || Real::parse(s) == Real::parse(row.sigma);
      if (!wanted) continue;
    }
    const Real sigma = Real::parse(row.sigma);
    const Real sigma0 = Real::parse(row.sigma0);
    const Real H(row.H);
    Table1Entry e{row, model.coefficients(sigma, sigma0, H), {}, {}, std::nullopt};
    e.formatted = format_coefficients(e.recomputed, kDecimals);
    e.deviation = deviation_from(e.formatted, row);
    if (scan_cells && !e.deviation.within_tolerance()) {
      RoundingCellScan scan;
      const Real lattice = Real::parse("1e-6");
      for (int k = 0; k < 100; ++k) {
        Real s0 = sigma0 - lattice * k;
        auto c = model.coefficients(sigma, s0, H);
        ++scan.points;
        if (deviation_from(format_coefficients(c, kDecimals), row).within_tolerance()) {
          ++scan.hits;
          if (!scan.first_hit) scan.first_hit = s0;
          scan.last_hit = s0;
        }
      }
      e.cell_scan = std::move(scan);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Table1Entry> regenerate_table1(const PrecisionContext& ctx) { return regenerate_table1(DensityModel(ctx)); }

}  // namespace zdensity
