// Copyright 2026 The spnav Authors
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

#include "spnav/eval/trace_export.h"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spnav/error.h"

namespace spnav::eval {
namespace {

std::string Num(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

double ParseNum(std::string_view token) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw Error(ErrorCode::kFormat, "bad number '" + std::string(token) + "' in trace csv");
  }
  return v;
}

constexpr const char* kHeader = "step,x,y,theta,v,omega,goal_x,goal_y,support";
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

world::Point ToWorld(const world::RobotState& r, const Eigen::Vector2d& robot_frame) {
  // robot frame: [0] lateral-left, [1] forward
  const double c = std::cos(r.pose.theta), s = std::sin(r.pose.theta);
  return {r.pose.x + robot_frame[1] * c - robot_frame[0] * s,
          r.pose.y + robot_frame[1] * s + robot_frame[0] * c};
}

}  // namespace

std::string TraceToCsv(const EpisodeTrace& trace) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const TraceStep& s : trace.steps) {
    out << s.step << "," << Num(s.robot.pose.x) << "," << Num(s.robot.pose.y) << ","
        << Num(s.robot.pose.theta) << "," << Num(s.robot.v) << "," << Num(s.robot.omega) << ","
        << Num(s.goal.x()) << "," << Num(s.goal.y());
    for (const SupportPoint& p : s.support) {
      out << "," << Num(p.position[0]) << "," << Num(p.position[1]) << "," << p.multiplicity;
    }
    out << "\n";
  }
  return out.str();
}

EpisodeTrace TraceFromCsv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error(ErrorCode::kFormat, "trace csv: missing header");
  EpisodeTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view view(line);
    size_t pos = 0;
    while (true) {
      const size_t comma = view.find(',', pos);
      f.push_back(view.substr(pos, comma == view.npos ? view.npos : comma - pos));
      if (comma == view.npos) break;
      pos = comma + 1;
    }
    if (f.size() < 8 || (f.size() - 8) % 3 != 0) throw Error(ErrorCode::kFormat, "trace csv: bad row");
    TraceStep s;
    s.step = static_cast<int>(ParseNum(f[0]));
    s.robot.pose = {ParseNum(f[1]), ParseNum(f[2]), ParseNum(f[3])};
    s.robot.v = ParseNum(f[4]);
    s.robot.omega = ParseNum(f[5]);
    s.goal = {ParseNum(f[6]), ParseNum(f[7])};
    for (size_t i = 8; i < f.size(); i += 3) {
      s.support.push_back({{ParseNum(f[i]), ParseNum(f[i + 1])}, static_cast<int>(ParseNum(f[i + 2]))});
    }
    trace.steps.push_back(std::move(s));
  }
  return trace;
}

std::string TraceToSvg(const world::Scenario& scenario, const std::vector<EpisodeTrace>& traces) {
  const world::Bounds& b = scenario.bounds();
  constexpr double kScale = 100.0;  // px per metre
  const double width = (b.xmax - b.xmin) * kScale, height = (b.ymax - b.ymin) * kScale;
  auto px = [&](const world::Point& p) {
    return Num((p.x() - b.xmin) * kScale) + "," + Num((b.ymax - p.y()) * kScale);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(width) << "\" height=\""
      << Num(height) << "\" viewBox=\"0 0 " << Num(width) << " " << Num(height) << "\">\n";
  out << "<rect class=\"bounds\" x=\"0\" y=\"0\" width=\"" << Num(width) << "\" height=\"" << Num(height)
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"4\"/>\n";
  for (const world::Polygon& o : scenario.obstacles()) {
    out << "<polygon class=\"obstacle\" points=\"";
    for (const world::Point& v : o.vertices()) out << px(v) << " ";
    out << "\" fill=\"#888888\"/>\n";
  }
  for (size_t t = 0; t < traces.size(); ++t) {
    const EpisodeTrace& trace = traces[t];
    const char* color = kPalette[t % std::size(kPalette)];
    if (!trace.trajectory.empty()) {
      out << "<polyline class=\"trajectory\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (const world::RobotState& r : trace.trajectory) out << px(r.pose.position()) << " ";
      out << "\"/>\n";
    }
    for (const TraceStep& s : trace.steps) {
      const world::Point c = s.robot.pose.position();
      out << "<circle class=\"robot\" cx=\"" << Num((c.x() - b.xmin) * kScale) << "\" cy=\""
          << Num((b.ymax - c.y()) * kScale) << "\" r=\"" << Num(s.robot.radius * kScale)
          << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
      for (const SupportPoint& p : s.support) {
        const world::Point w = ToWorld(s.robot, p.position);
        out << "<circle class=\"support\" cx=\"" << Num((w.x() - b.xmin) * kScale) << "\" cy=\""
            << Num((b.ymax - w.y()) * kScale) << "\" r=\"" << Num(4.0 * p.multiplicity) << "\" fill=\""
            << color << "\" fill-opacity=\"0.6\"/>\n";
      }
    }
    if (!trace.steps.empty()) {
      const world::Point g = trace.steps.front().goal;
      out << "<circle class=\"goal\" cx=\"" << Num((g.x() - b.xmin) * kScale) << "\" cy=\""
          << Num((b.ymax - g.y()) * kScale) << "\" r=\"" << Num(0.3 * kScale)
          << "\" fill=\"none\" stroke=\"red\" stroke-dasharray=\"4\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

void ExportTraces(const world::Scenario& scenario, const std::vector<EpisodeTrace>& traces,
                  const std::filesystem::path& dir) {
  if (traces.empty()) throw Error(ErrorCode::kInvalidArgument, "no traces to export");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, dir.string() + ": " + ec.message());
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
  };
  for (size_t i = 0; i < traces.size(); ++i) {
    write(dir / ("episode_" + std::to_string(traces[i].task_index) + ".csv"), TraceToCsv(traces[i]));
  }
  write(dir / "overlay.svg", TraceToSvg(scenario, traces));
}

}  // namespace spnav::eval
