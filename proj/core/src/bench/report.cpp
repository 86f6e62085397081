// Copyright 2026 The Robokit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "robokit/bench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "robokit/bench/stats.hpp"
#include "robokit/errors.hpp"

namespace robokit::bench {

namespace {

const char* const kAggregateHeader =
    "controller,motion_class,reference,translation_mean_mm,translation_std_mm,"
    "rotation_mean_deg,rotation_std_deg,n,failed";

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + '\n';
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& s, int line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigParseError("aggregate csv line " + std::to_string(line),
                           "bad number '" + s + "'");
  }
  return value;
}

std::string fixed(double x, int decimals) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(decimals);
  out << x;
  return out.str();
}

std::string pad(const std::string& s, std::size_t width) {
  // The plus-minus sign is two bytes but one column.
  std::size_t cols = 0;
  for (unsigned char c : s) cols += (c & 0xC0) != 0x80;
  return s + std::string(width > cols ? width - cols : 0, ' ');
}

}  // namespace

std::string csv_preamble(const std::string& table, std::uint64_t seed) {
  return "# robokit " + table + " schema " + std::to_string(kReportSchemaVersion) +
         " seed " + std::to_string(seed) + "\n";
}

std::string base_trials_csv(const BaseBenchReport& report) {
  std::string out = csv_preamble("base_trials", report.seed);
  out += "controller,motion_class,target_index,target_x,target_y,target_theta,trial,seed,"
         "translation_gt_mm,translation_odom_mm,rotation_gt_deg,rotation_odom_deg,"
         "reached,elapsed_s\n";
  for (const auto& t : report.trials) {
    out += join({t.controller, t.motion_class, std::to_string(t.target_index),
                 exact_number(t.target.x), exact_number(t.target.y),
                 exact_number(t.target.theta), std::to_string(t.trial),
                 std::to_string(t.seed), exact_number(t.translation_gt_mm),
                 exact_number(t.translation_odom_mm), exact_number(t.rotation_gt_deg),
                 exact_number(t.rotation_odom_deg), t.reached ? "1" : "0",
                 exact_number(t.elapsed)});
  }
  return out;
}

std::string base_aggregate_csv(const BaseBenchReport& report) {
  std::string out = csv_preamble("base_aggregate", report.seed);
  out += std::string(kAggregateHeader) + "\n";
  for (const auto& a : report.aggregates) {
    out += join({a.controller, a.motion_class, a.reference,
                 exact_number(a.translation_mean_mm), exact_number(a.translation_std_mm),
                 exact_number(a.rotation_mean_deg), exact_number(a.rotation_std_deg),
                 std::to_string(a.n), std::to_string(a.failed)});
  }
  return out;
}

std::vector<AggregateRow> parse_aggregate_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool header = false;
  std::vector<AggregateRow> rows;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kAggregateHeader) {
        throw ConfigParseError("aggregate csv line " + std::to_string(number),
                               "unexpected header");
      }
      header = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 9) {
      throw ConfigParseError("aggregate csv line " + std::to_string(number),
                             "expected 9 columns");
    }
    AggregateRow row;
    row.controller = cells[0];
    row.motion_class = cells[1];
    row.reference = cells[2];
    row.translation_mean_mm = parse_number<double>(cells[3], number);
    row.translation_std_mm = parse_number<double>(cells[4], number);
    row.rotation_mean_deg = parse_number<double>(cells[5], number);
    row.rotation_std_deg = parse_number<double>(cells[6], number);
    row.n = parse_number<int>(cells[7], number);
    row.failed = parse_number<int>(cells[8], number);
    rows.push_back(std::move(row));
  }
  if (!header) throw ConfigParseError("aggregate csv", "missing header");
  return rows;
}

std::string base_summary(const BaseBenchReport& report) {
  std::ostringstream out;
  out << "robot " << report.robot << ", seed " << report.seed << "\n";
  out << pad("controller", 14) << pad("class", 10) << pad("reference", 14)
      << pad("translation (mm)", 18) << pad("rotation (deg)", 16) << "failed\n";
  for (const auto& a : report.aggregates) {
    out << pad(a.controller, 14) << pad(a.motion_class, 10) << pad(a.reference, 14)
        << pad(format_pm(a.translation_mean_mm, a.translation_std_mm, 0), 18)
        << pad(format_pm(a.rotation_mean_deg, a.rotation_std_deg, 2), 16) << a.failed
        << "/" << a.n << "\n";
  }
  return out.str();
}

std::string arm_repeatability_csv(const RepeatabilityResult& result) {
  std::string out = csv_preamble("arm_repeatability", result.seed);
  out += "pose,commanded_x_m,commanded_y_m,commanded_z_m,reachable,n,std_x_mm,std_y_mm,"
         "std_z_mm,rp_mm\n";
  for (const auto& p : result.poses) {
    out += join({p.name, exact_number(p.commanded.x()), exact_number(p.commanded.y()),
                 exact_number(p.commanded.z()), p.reachable ? "1" : "0",
                 std::to_string(p.attained_mm.size()), exact_number(p.std_mm.x()),
                 exact_number(p.std_mm.y()), exact_number(p.std_mm.z()),
                 exact_number(p.rp_mm)});
  }
  return out;
}

std::string arm_points_csv(const RepeatabilityResult& result) {
  std::string out = csv_preamble("arm_points", result.seed);
  out += "pose,rep,x_mm,y_mm,z_mm\n";
  for (const auto& p : result.poses) {
    for (std::size_t r = 0; r < p.attained_mm.size(); ++r) {
      const auto& a = p.attained_mm[r];
      out += join({p.name, std::to_string(r), exact_number(a.x()), exact_number(a.y()),
                   exact_number(a.z())});
    }
  }
  return out;
}

std::string arm_summary(const RepeatabilityResult& result) {
  std::ostringstream out;
  out << "robot " << result.robot << ", seed " << result.seed << ", " << result.reps
      << " repetitions\n";
  out << pad("pose", 10) << pad("std x (mm)", 12) << pad("std y (mm)", 12)
      << pad("std z (mm)", 12) << "RP (mm)\n";
  for (const auto& p : result.poses) {
    out << pad(p.name, 10);
    if (!p.reachable) {
      out << "unreachable (skipped)\n";
      continue;
    }
    out << pad(fixed(p.std_mm.x(), 2), 12) << pad(fixed(p.std_mm.y(), 2), 12)
        << pad(fixed(p.std_mm.z(), 2), 12) << fixed(p.rp_mm, 2) << "\n";
  }
  return out.str();
}

std::string tracking_path_csv(const TrackingReport& report) {
  std::string out = csv_preamble("tracking_path", report.seed);
  out += "t_s,ref_x,ref_y,ref_theta,odom_x,odom_y,odom_theta,measured_x,measured_y,"
         "measured_theta,v,w,cross_track_mm\n";
  const auto& entries = report.log.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out += join({exact_number(e.t), exact_number(e.reference.x),
                 exact_number(e.reference.y), exact_number(e.reference.theta),
                 exact_number(e.odom.x), exact_number(e.odom.y), exact_number(e.odom.theta),
                 exact_number(e.measured.x), exact_number(e.measured.y),
                 exact_number(e.measured.theta), exact_number(e.command.v),
                 exact_number(e.command.w), exact_number(report.cross_track_mm[i])});
  }
  return out;
}

std::string tracking_svg(const TrackingReport& report) {
  std::vector<Pose2D> actual;
  for (const auto& e : report.log.entries) actual.push_back(e.measured);
  if (!report.log.entries.empty()) actual.push_back(report.log.final_measured);
  const auto& ref = report.reference.states;

  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  const std::vector<Pose2D>* paths[] = {&ref, &actual};
  for (const auto* path : paths) {
    for (const auto& p : *path) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  if (!std::isfinite(x0)) x0 = y0 = -0.5, x1 = y1 = 0.5;
  const double margin = 0.05 + 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= margin, y0 -= margin, x1 += margin, y1 += margin;
  const double px_per_m = 600.0 / std::max(x1 - x0, y1 - y0);
  const double w = (x1 - x0) * px_per_m, h = (y1 - y0) * px_per_m;

  auto polyline = [&](const std::vector<Pose2D>& path, const char* colour) {
    std::string pts;
    char buf[64];
    for (const auto& p : path) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", (p.x - x0) * px_per_m,
                    (y1 - p.y) * px_per_m);
      pts += buf;
    }
    if (!pts.empty()) pts.pop_back();
    return std::string("  <polyline fill=\"none\" stroke=\"") + colour +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };

  char head[256];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.2f %.2f\">\n",
                std::ceil(w), std::ceil(h), w, h);
  std::string out = head;
  out += "  <!-- robokit tracking " + report.controller + " seed " +
         std::to_string(report.seed) + "; 1 m = " + fixed(px_per_m, 2) + " px -->\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += polyline(ref, "red");
  out += polyline(actual, "black");
  out += "</svg>\n";
  return out;
}

std::string tracking_summary(const TrackingReport& report) {
  std::ostringstream out;
  out << "robot " << report.robot << ", seed " << report.seed << ", controller "
      << report.controller << ", shape " << report.shape;
  if (report.shape == "circle") out << " radius " << fixed(report.radius, 3) << " m";
  out << "\n";
  out << "cross-track RMS (mm) " << fixed(report.rms_mm, 2) << "\n";
  out << "cross-track max (mm) " << fixed(report.max_mm, 2) << "\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

namespace {

std::vector<std::filesystem::path> write_all(
    const std::filesystem::path& dir,
    const std::vector<std::pair<std::string, std::string>>& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& [name, text] : files) {
    written.push_back(dir / name);
    write_text_file(written.back(), text);
  }
  return written;
}

}  // namespace

std::vector<std::filesystem::path> write_report(const BaseBenchReport& report,
                                                const std::filesystem::path& dir) {
  return write_all(dir, {{"base_trials.csv", base_trials_csv(report)},
                         {"base_aggregate.csv", base_aggregate_csv(report)},
                         {"summary.txt", base_summary(report)}});
}

std::vector<std::filesystem::path> write_report(const RepeatabilityResult& result,
                                                const std::filesystem::path& dir) {
  return write_all(dir, {{"arm_repeatability.csv", arm_repeatability_csv(result)},
                         {"arm_points.csv", arm_points_csv(result)},
                         {"summary.txt", arm_summary(result)}});
}

std::vector<std::filesystem::path> write_report(const TrackingReport& report,
                                                const std::filesystem::path& dir) {
  return write_all(dir, {{"tracking_path.csv", tracking_path_csv(report)},
                         {"tracking.svg", tracking_svg(report)},
                         {"summary.txt", tracking_summary(report)}});
}

}  // namespace robokit::bench
