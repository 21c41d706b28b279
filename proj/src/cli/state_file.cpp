// Copyright 2026 The fefkit Authors
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

#include "fefkit/cli/state_file.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace fefkit::cli {
namespace {

using nlohmann::json;

Complex ParsePair(const json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw StateFileError(where + ": expected a two-element [re, im] array");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

void AppendPair(std::string& out, Complex z) {
  out += '[';
  out += format_double(z.real());
  out += ", ";
  out += format_double(z.imag());
  out += ']';
}

std::string Header(std::size_t d, const char* kind) {
  return "{\n  \"d\": " + std::to_string(d) + ",\n  \"kind\": \"" + kind +
         "\",\n  \"data\": [\n";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ParsedState parse_state(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw StateFileError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StateFileError("top level: expected a JSON object");

  if (!doc.contains("d")) throw StateFileError("d: missing field");
  if (!doc["d"].is_number_unsigned()) {
    throw StateFileError("d: expected a positive integer");
  }
  const auto d = doc["d"].get<std::size_t>();
  if (d < 2 || d > 64) throw StateFileError("d: must lie in [2, 64]");

  if (!doc.contains("kind")) throw StateFileError("kind: missing field");
  if (!doc["kind"].is_string()) throw StateFileError("kind: expected a string");
  const auto kind = doc["kind"].get<std::string>();
  if (kind != "pure" && kind != "density") {
    throw StateFileError("kind: expected \"pure\" or \"density\", got \"" +
                         kind + "\"");
  }

  if (!doc.contains("data")) throw StateFileError("data: missing field");
  const json& data = doc["data"];
  const std::size_t n = d * d;
  if (!data.is_array() || data.size() != n) {
    throw StateFileError("data: expected an array of " + std::to_string(n) +
                         " entries");
  }

  try {
    if (kind == "pure") {
      ComplexVector amps(n);
      for (std::size_t i = 0; i < n; ++i) {
        amps[i] = ParsePair(data[i], "data[" + std::to_string(i) + "]");
      }
      return PureState::from_amplitudes(d, std::move(amps));
    }
    ComplexMatrix rho(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = data[r];
      if (!row.is_array() || row.size() != n) {
        throw StateFileError("data[" + std::to_string(r) +
                             "]: expected a row of " + std::to_string(n) +
                             " entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        rho(r, c) = ParsePair(row[c], "data[" + std::to_string(r) + "][" +
                                          std::to_string(c) + "]");
      }
    }
    return validate_density(rho, d);
  } catch (const ValidationError& e) {
    throw StateFileError(std::string("data: ") + e.what());
  }
}

ParsedState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string serialize_state(const PureState& psi) {
  std::string out = Header(psi.d(), "pure");
  const auto amps = psi.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out += "    ";
    AppendPair(out, amps[i]);
    out += i + 1 < amps.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string serialize_state(const DensityMatrix& rho) {
  std::string out = Header(rho.d(), "density");
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "    [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      AppendPair(out, m(r, c));
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_state_file(const std::filesystem::path& path,
                      const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StateFileError("cannot write " + path.string());
  out << contents;
  out.flush();
  if (!out) throw StateFileError("failed writing " + path.string());
}

}  // namespace fefkit::cli
