/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/localization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loopda/errors.hpp"

namespace loopda {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

std::vector<int> window_cells(int start, int width, int shift, int n) {
  std::vector<int> cells(width);
  for (int i = 0; i < width; ++i) cells[i] = wrap(start + shift + i, n);
  return cells;
}

}  // namespace

ZoneLayout build_zones(int n_cells, int center_width, int halo_width) {
  if (n_cells <= 0 || center_width <= 0 || halo_width < 0) {
    throw ConfigError("build_zones: widths must be positive");
  }
  if (n_cells % center_width != 0) {
    throw ConfigError("build_zones: center_width " +
                      std::to_string(center_width) + " does not divide " +
                      std::to_string(n_cells));
  }
  ZoneLayout layout;
  layout.center_width = center_width;
  layout.halo_width = halo_width;
  layout.ring_size = n_cells;
  const int n_zones = n_cells / center_width;
  for (int z = 0; z < n_zones; ++z) {
    Zone zone;
    const int start = z * center_width;
    for (int i = 0; i < center_width; ++i) zone.center.push_back(start + i);
    zone.window = window_cells(start - halo_width,
                               center_width + 2 * halo_width, 0, n_cells);
    layout.zones.push_back(std::move(zone));
  }
  return layout;
}

int adaptive_shift(double u_local, double u_max, int z_max) {
  if (u_max <= 0.0) return 0;
  const int raw =
      static_cast<int>(std::floor(u_local / u_max * z_max));
  return std::clamp(raw, -z_max, z_max);
}

ZoneLayout apply_shift(const ZoneLayout& layout,
                       const std::vector<int>& shifts) {
  if (shifts.size() != layout.zones.size()) {
    throw ConfigError("apply_shift: expected one shift per zone");
  }
  ZoneLayout out = layout;
  for (std::size_t z = 0; z < out.zones.size(); ++z) {
    Zone& zone = out.zones[z];
    zone.shift =
        std::clamp(shifts[z], -layout.center_width, layout.center_width);
    const int start = zone.center.front() - layout.halo_width;
    zone.window =
        window_cells(start, layout.center_width + 2 * layout.halo_width,
                     zone.shift, layout.ring_size);
  }
  return out;
}

}  // namespace loopda
