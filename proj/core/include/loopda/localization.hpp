/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <vector>

namespace loopda {

/// One analysis zone on the ring: a contiguous block of center cells
/// (analyzed by this zone and no other) plus an observation-selection
/// window of center + halo cells, translated by the zone's signed shift.
struct Zone {
  std::vector<int> center;
  std::vector<int> window;
  int shift = 0;
};

struct ZoneLayout {
  std::vector<Zone> zones;
  int center_width = 0;
  int halo_width = 0;
  int ring_size = 0;
};

/// Partitions [0, n_cells) into n_cells/center_width zones; each window
/// extends halo_width cells to both sides, wrapped modulo the ring.
/// center_width must divide n_cells.
ZoneLayout build_zones(int n_cells, int center_width, int halo_width);

/// floor(u_local/u_max * z_max), clamped to [-z_max, z_max]; zero when
/// the flow is identically zero.
int adaptive_shift(double u_local, double u_max, int z_max);

/// Translates each zone's observation window by its shift around the
/// ring. Centers are untouched, so every cell is still analyzed exactly
/// once. Shifts are clamped to +/- center_width.
ZoneLayout apply_shift(const ZoneLayout& layout,
                       const std::vector<int>& shifts);

}  // namespace loopda
