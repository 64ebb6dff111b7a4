// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding of states, channels and layered algorithms.
//
//   complex   [re, im] (a bare number is read as real)
//   matrix    [[complex, ...], ...] row-major
//   state     {"dim": d, "matrix": matrix}
//   channel   {"dim_in": d, "dim_out": d', "kraus": [matrix, ...]}
//   algorithm {"dim": D, "layers": [{"gate": channel | {"unitary": matrix},
//              "noise": {"type": "global_depolarizing", "p": x}
//                     | {"type": "local_depolarizing", "p": x, "k": k}
//                     | {"type": "kraus", "channel": channel}}, ...]}
//
// Shape and syntax problems raise InputError; well-formed documents whose
// contents break a mathematical invariant raise ValidationError from the
// domain constructors.

#ifndef QDP_IO_HPP_
#define QDP_IO_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/dp.hpp"

namespace qdp {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

inline std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw InputError(where + ": expected a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace detail

inline Complex parse_complex(const Json& j, const std::string& where = "complex") {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError(where + ": expected [re, im]");
}

inline Matrix parse_matrix(const Json& j, const std::string& where = "matrix") {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw InputError(where + ": rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError(where + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = parse_complex(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

inline DensityMatrix parse_state(const Json& j) {
  const std::size_t dim = detail::count(detail::field(j, "dim", "state"), "state.dim");
  const Matrix m = parse_matrix(detail::field(j, "matrix", "state"), "state.matrix");
  if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
    throw InputError("state: matrix shape does not match dim " + std::to_string(dim));
  }
  return DensityMatrix(m);
}

inline QuantumChannel parse_channel(const Json& j) {
  const std::size_t din = detail::count(detail::field(j, "dim_in", "channel"), "channel.dim_in");
  const std::size_t dout = detail::count(detail::field(j, "dim_out", "channel"), "channel.dim_out");
  const Json& list = detail::field(j, "kraus", "channel");
  if (!list.is_array() || list.empty()) throw InputError("channel.kraus: expected a non-empty array");
  std::vector<Matrix> ks;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Matrix k = parse_matrix(list[i], "channel.kraus[" + std::to_string(i) + "]");
    if (static_cast<std::size_t>(k.rows()) != dout || static_cast<std::size_t>(k.cols()) != din) {
      throw InputError("channel.kraus[" + std::to_string(i) + "]: shape must be dim_out x dim_in");
    }
    ks.push_back(std::move(k));
  }
  return QuantumChannel(din, dout, std::move(ks));
}

inline NoiseSpec parse_noise(const Json& j, const std::string& where) {
  const Json& type = detail::field(j, "type", where);
  if (!type.is_string()) throw InputError(where + ".type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "global_depolarizing") {
    return GlobalDepolarizing{detail::number(detail::field(j, "p", where), where + ".p")};
  }
  if (t == "local_depolarizing") {
    return LocalDepolarizing{detail::number(detail::field(j, "p", where), where + ".p"),
                             detail::count(detail::field(j, "k", where), where + ".k")};
  }
  if (t == "kraus") return KrausNoise{parse_channel(detail::field(j, "channel", where))};
  throw InputError(where + ".type: unknown noise type '" + t + "'");
}

inline LayeredAlgorithm parse_algorithm(const Json& j) {
  const std::size_t dim = detail::count(detail::field(j, "dim", "algorithm"), "algorithm.dim");
  const Json& list = detail::field(j, "layers", "algorithm");
  if (!list.is_array() || list.empty()) throw InputError("algorithm.layers: expected a non-empty array");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "algorithm.layers[" + std::to_string(i) + "]";
    const Json& gate = detail::field(list[i], "gate", where);
    QuantumChannel g = gate.is_object() && gate.contains("unitary")
                           ? unitary_channel(parse_matrix(gate["unitary"], where + ".gate.unitary"))
                           : parse_channel(gate);
    layers.push_back({std::move(g), parse_noise(detail::field(list[i], "noise", where), where + ".noise")});
  }
  return LayeredAlgorithm(dim, std::move(layers));
}

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(Complex(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const DensityMatrix& rho) {
  return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

inline Json to_json(const KrausMap& c) {
  Json ks = Json::array();
  for (const Matrix& k : c.kraus()) ks.push_back(to_json(k));
  return {{"dim_in", c.dim_in()}, {"dim_out", c.dim_out()}, {"kraus", std::move(ks)}};
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

// Wraps nlohmann type errors (e.g. a string where a number was expected).
template <typename Parser>
auto load(const std::string& path, Parser&& parser) {
  const Json j = load_json(path);
  try {
    return parser(j);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

inline DensityMatrix load_state(const std::string& path) {
  return load(path, [](const Json& j) { return parse_state(j); });
}
inline QuantumChannel load_channel(const std::string& path) {
  return load(path, [](const Json& j) { return parse_channel(j); });
}
inline LayeredAlgorithm load_algorithm(const std::string& path) {
  return load(path, [](const Json& j) { return parse_algorithm(j); });
}

}  // namespace io
}  // namespace qdp

#endif  // QDP_IO_HPP_
