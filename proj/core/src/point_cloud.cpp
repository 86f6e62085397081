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
#include "robokit/point_cloud.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

void append_number(std::string& out, double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, res.ptr);
}

}  // namespace

void save_xyz(const PointCloud& cloud, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write point cloud " + path);
  std::string line;
  for (const auto& pt : cloud) {
    line.clear();
    append_number(line, pt.p.x());
    line += ' ';
    append_number(line, pt.p.y());
    line += ' ';
    append_number(line, pt.p.z());
    if (pt.tag == PointTag::kFloor) line += " floor";
    if (pt.tag == PointTag::kObject) line += " object";
    line += '\n';
    out << line;
  }
  if (!out) throw Error("write failed for " + path);
}

PointCloud load_xyz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open point cloud " + path);
  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok[4];
    int n = 0;
    while (n < 4 && ls >> tok[n]) ++n;
    std::string extra;
    if (n < 3 || (ls >> extra)) {
      throw ConfigParseError("line " + std::to_string(line_no),
                             "expected 'x y z [tag]'");
    }
    CloudPoint pt;
    for (int i = 0; i < 3; ++i) {
      const auto res = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(),
                                       pt.p[i]);
      if (res.ec != std::errc() || res.ptr != tok[i].data() + tok[i].size()) {
        throw ConfigParseError("line " + std::to_string(line_no),
                               "invalid number '" + tok[i] + "'");
      }
    }
    if (n == 4) {
      if (tok[3] == "floor") {
        pt.tag = PointTag::kFloor;
      } else if (tok[3] == "object") {
        pt.tag = PointTag::kObject;
      } else {
        throw ConfigParseError("line " + std::to_string(line_no),
                               "unknown tag '" + tok[3] + "'");
      }
    }
    cloud.push_back(pt);
  }
  return cloud;
}

}  // namespace robokit
