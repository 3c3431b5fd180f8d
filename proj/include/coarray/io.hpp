// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coarray/closed_form.hpp"
#include "coarray/digital.hpp"
#include "coarray/geometry.hpp"
#include "coarray/imaging.hpp"
#include "coarray/steering.hpp"

namespace coarray {

using json = nlohmann::json;

json geometry_to_json(const ArrayGeometry& geom);
ArrayGeometry geometry_from_json(const json& j);

json grid_to_json(const DirectionGrid& grid);
DirectionGrid grid_from_json(const json& j);

/// Complex vectors are stored as interleaved [re0, im0, re1, im1, ...].
json target_to_json(const TargetSpec& spec);
TargetSpec target_from_json(const json& j);

/// Flat column-major re/im arrays with an explicit [rows, cols] shape.
json digital_bank_to_json(const DigitalBank& bank);
DigitalBank digital_bank_from_json(const json& j);

/// Finite bit depths store integer lattice indices k (phase = 2*pi*k / 2^B)
/// so a round trip is bit-exact; continuous phases store raw doubles.
json hybrid_bank_to_json(const HybridBank& bank);
HybridBank hybrid_bank_from_json(const json& j);

json scene_to_json(const Scene& scene);
Scene scene_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// CSV with header "iteration,squared_error", one row per iteration.
void write_error_trace_csv(const std::string& path, const std::vector<double>& trace);

/// Raw little-endian grid dump: int32 rows, int32 cols, then rows*cols
/// complex doubles (re, im) in row-major pixel order.
void write_image_binary(const std::string& path, const ImageResult& image, int rows, int cols);

/// Magnitude in dB relative to the image peak, floor-clipped at -60 dB;
/// one CSV row per image row.
void write_image_db_csv(const std::string& path, const ImageResult& image, int rows, int cols,
                        double floor_db = -60.0);

}  // namespace coarray
