// SPDX-License-Identifier: Apache-2.0
#include "coarray/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace coarray {

namespace {

json cvec_to_json(const CVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(v[i].real());
    arr.push_back(v[i].imag());
  }
  return arr;
}

CVec cvec_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() % 2 != 0)
    throw std::invalid_argument("interleaved complex array must have even length");
  CVec v(arr.size() / 2);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = cxd(arr[2 * i].get<double>(), arr[2 * i + 1].get<double>());
  return v;
}

json cmat_to_json(const CMat& m) {
  json j;
  j["shape"] = {m.rows(), m.cols()};
  CVec flat = Eigen::Map<const CVec>(m.data(), m.size());
  j["data"] = cvec_to_json(flat);
  return j;
}

CMat cmat_from_json(const json& j) {
  auto shape = j.at("shape");
  Eigen::Index rows = shape.at(0).get<Eigen::Index>();
  Eigen::Index cols = shape.at(1).get<Eigen::Index>();
  CVec flat = cvec_from_json(j.at("data"));
  if (flat.size() != rows * cols) throw std::invalid_argument("matrix data/shape mismatch");
  return Eigen::Map<const CMat>(flat.data(), rows, cols);
}

json phases_to_json(const RMat& phases, const QuantizationSpec& bits) {
  json j;
  j["shape"] = {phases.rows(), phases.cols()};
  json data = json::array();
  if (bits.is_finite()) {
    const double inv_step = std::ldexp(1.0, bits.bits - 1) / kPi;
    const std::int64_t levels = std::int64_t{1} << bits.bits;
    for (Eigen::Index c = 0; c < phases.cols(); ++c)
      for (Eigen::Index r = 0; r < phases.rows(); ++r) {
        std::int64_t k = std::llround(phases(r, c) * inv_step);
        data.push_back(((k % levels) + levels) % levels);
      }
  } else {
    for (Eigen::Index c = 0; c < phases.cols(); ++c)
      for (Eigen::Index r = 0; r < phases.rows(); ++r) data.push_back(phases(r, c));
  }
  j["data"] = data;
  return j;
}

RMat phases_from_json(const json& j, const QuantizationSpec& bits) {
  auto shape = j.at("shape");
  Eigen::Index rows = shape.at(0).get<Eigen::Index>();
  Eigen::Index cols = shape.at(1).get<Eigen::Index>();
  const json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::invalid_argument("phase data/shape mismatch");
  RMat phases(rows, cols);
  Eigen::Index i = 0;
  if (bits.is_finite()) {
    const double step = kPi / std::ldexp(1.0, bits.bits - 1);
    for (Eigen::Index c = 0; c < cols; ++c)
      for (Eigen::Index r = 0; r < rows; ++r) phases(r, c) = data[i++].get<std::int64_t>() * step;
  } else {
    for (Eigen::Index c = 0; c < cols; ++c)
      for (Eigen::Index r = 0; r < rows; ++r) phases(r, c) = data[i++].get<double>();
  }
  return phases;
}

}  // namespace

json geometry_to_json(const ArrayGeometry& geom) {
  json j;
  j["label"] = to_string(geom.label);
  j["dim"] = geom.dim;
  json pos = json::array();
  for (const auto& p : geom.positions) {
    if (geom.dim == 1) {
      pos.push_back(p[0]);
    } else {
      pos.push_back(json::array({p[0], p[1]}));
    }
  }
  j["positions"] = pos;
  return j;
}

ArrayGeometry geometry_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<LatticePoint> positions;
  for (const auto& p : j.at("positions")) {
    if (dim == 1) {
      positions.push_back({p.get<int>(), 0});
    } else {
      positions.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    }
  }
  ArrayGeometry geom = make_custom(std::move(positions), dim);
  if (j.contains("label")) geom.label = array_label_from_string(j.at("label").get<std::string>());
  return geom;
}

json grid_to_json(const DirectionGrid& grid) {
  json j;
  j["dim"] = grid.dim;
  json dirs = json::array();
  for (const auto& d : grid.directions) {
    if (grid.dim == 1) {
      dirs.push_back(d.u);
    } else {
      dirs.push_back(json::array({d.u, d.w}));
    }
  }
  j["directions"] = dirs;
  return j;
}

DirectionGrid grid_from_json(const json& j) {
  DirectionGrid grid;
  grid.dim = j.at("dim").get<int>();
  for (const auto& d : j.at("directions")) {
    Direction dir;
    if (grid.dim == 1) {
      dir.u = d.get<double>();
    } else {
      dir.u = d.at(0).get<double>();
      dir.w = d.at(1).get<double>();
    }
    grid.directions.push_back(dir);
  }
  return grid;
}

json target_to_json(const TargetSpec& spec) {
  json j;
  j["domain"] = spec.domain == TargetSpec::Domain::Coarray ? "coarray" : "psf";
  j["values"] = cvec_to_json(spec.values);
  return j;
}

TargetSpec target_from_json(const json& j) {
  TargetSpec spec;
  std::string domain = j.at("domain").get<std::string>();
  if (domain == "coarray") {
    spec.domain = TargetSpec::Domain::Coarray;
  } else if (domain == "psf") {
    spec.domain = TargetSpec::Domain::Psf;
  } else {
    throw std::invalid_argument("unknown target domain: " + domain);
  }
  spec.values = cvec_from_json(j.at("values"));
  return spec;
}

json digital_bank_to_json(const DigitalBank& bank) {
  json j;
  j["kind"] = "digital";
  j["w_t"] = cmat_to_json(bank.wt);
  j["w_r"] = cmat_to_json(bank.wr);
  return j;
}

DigitalBank digital_bank_from_json(const json& j) {
  DigitalBank bank;
  bank.wt = cmat_from_json(j.at("w_t"));
  bank.wr = cmat_from_json(j.at("w_r"));
  if (bank.wt.cols() != bank.wr.cols())
    throw std::invalid_argument("digital bank column counts differ");
  return bank;
}

json hybrid_bank_to_json(const HybridBank& bank) {
  json j;
  j["kind"] = "hybrid";
  j["m_t"] = bank.m_t;
  j["m_r"] = bank.m_r;
  j["bits"] = bank.bits.is_finite() ? json(bank.bits.bits) : json(nullptr);
  j["f_t"] = phases_to_json(bank.ft_phase, bank.bits);
  j["f_r"] = phases_to_json(bank.fr_phase, bank.bits);
  j["c_t"] = cmat_to_json(bank.ct);
  j["c_r"] = cmat_to_json(bank.cr);
  return j;
}

HybridBank hybrid_bank_from_json(const json& j) {
  HybridBank bank;
  bank.m_t = j.at("m_t").get<int>();
  bank.m_r = j.at("m_r").get<int>();
  const json& b = j.at("bits");
  bank.bits = b.is_null() ? QuantizationSpec::infinite() : QuantizationSpec::finite(b.get<int>());
  bank.ft_phase = phases_from_json(j.at("f_t"), bank.bits);
  bank.fr_phase = phases_from_json(j.at("f_r"), bank.bits);
  bank.ct = cmat_from_json(j.at("c_t"));
  bank.cr = cmat_from_json(j.at("c_r"));
  if (bank.ct.cols() != bank.cr.cols() || bank.ct.rows() != bank.m_t ||
      bank.cr.rows() != bank.m_r || bank.ft_phase.cols() != bank.m_t * bank.ct.cols() ||
      bank.fr_phase.cols() != bank.m_r * bank.cr.cols())
    throw std::invalid_argument("hybrid bank shape mismatch");
  return bank;
}

json scene_to_json(const Scene& scene) {
  json j;
  // a scene records full (u, w) pairs regardless of the array dimension
  DirectionGrid grid{scene.directions, 2};
  j["directions"] = grid_to_json(grid).at("directions");
  j["gamma"] = cvec_to_json(scene.gamma);
  j["sigma2"] = scene.sigma2;
  return j;
}

Scene scene_from_json(const json& j) {
  Scene scene;
  json g;
  g["dim"] = 2;
  g["directions"] = j.at("directions");
  scene.directions = grid_from_json(g).directions;
  scene.gamma = cvec_from_json(j.at("gamma"));
  scene.sigma2 = j.at("sigma2").get<double>();
  if (scene.gamma.size() != static_cast<Eigen::Index>(scene.directions.size()))
    throw std::invalid_argument("scene direction/reflectivity count mismatch");
  return scene;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

void write_error_trace_csv(const std::string& path, const std::vector<double>& trace) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << "iteration,squared_error\n";
  out.precision(17);
  for (std::size_t i = 0; i < trace.size(); ++i) out << i + 1 << ',' << trace[i] << '\n';
}

void write_image_binary(const std::string& path, const ImageResult& image, int rows, int cols) {
  if (static_cast<Eigen::Index>(rows) * cols != image.values.size())
    throw std::invalid_argument("image shape does not match pixel count");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  std::int32_t hdr[2] = {rows, cols};
  out.write(reinterpret_cast<const char*>(hdr), sizeof(hdr));
  out.write(reinterpret_cast<const char*>(image.values.data()),
            static_cast<std::streamsize>(image.values.size() * sizeof(cxd)));
}

void write_image_db_csv(const std::string& path, const ImageResult& image, int rows, int cols,
                        double floor_db) {
  if (static_cast<Eigen::Index>(rows) * cols != image.values.size())
    throw std::invalid_argument("image shape does not match pixel count");
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  double peak = image.values.cwiseAbs().maxCoeff();
  if (peak == 0.0) peak = 1.0;
  out.precision(10);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double mag = std::abs(image.values[static_cast<Eigen::Index>(r) * cols + c]) / peak;
      double db = mag > 0.0 ? 20.0 * std::log10(mag) : floor_db;
      out << std::max(db, floor_db);
      if (c + 1 < cols) out << ',';
    }
    out << '\n';
  }
}

}  // namespace coarray
