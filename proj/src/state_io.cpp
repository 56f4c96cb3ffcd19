#include "polygamy/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polygamy {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw StateFileError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) field_error(key, "missing");
  return j.at(key);
}

cplx parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    field_error(field, "expected a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

SubsystemLayout parse_layout(const json& j) {
  if (!j.is_array() || j.empty()) field_error("layout", "expected a nonempty array of dimensions");
  std::vector<int> dims;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer())
      field_error("layout[" + std::to_string(k) + "]", "expected an integer");
    dims.push_back(j[k].get<int>());
  }
  try {
    return SubsystemLayout(std::move(dims));
  } catch (const std::invalid_argument& e) {
    field_error("layout", e.what());
  }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

LoadedState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StateFileError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw StateFileError("line 1, column 1: expected a JSON object");

  const json& kind = require(doc, "kind");
  if (!kind.is_string()) field_error("kind", "expected \"pure\" or \"mixed\"");
  const SubsystemLayout layout = parse_layout(require(doc, "layout"));
  const auto n = static_cast<std::size_t>(layout.total());

  if (kind == "pure") {
    const json& amps = require(doc, "amplitudes");
    if (!amps.is_array() || amps.size() != n)
      field_error("amplitudes", "expected " + std::to_string(n) + " entries");
    CVector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      v(static_cast<Eigen::Index>(i)) = parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
    try {
      return StateVector(std::move(v), layout);
    } catch (const std::invalid_argument& e) {
      field_error("amplitudes", e.what());
    }
  }
  if (kind == "mixed") {
    const json& rows = require(doc, "matrix");
    if (!rows.is_array() || rows.size() != n)
      field_error("matrix", "expected " + std::to_string(n) + " rows");
    CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      const std::string row_name = "matrix[" + std::to_string(r) + "]";
      if (!rows[r].is_array() || rows[r].size() != n)
        field_error(row_name, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_complex(rows[r][c], row_name + "[" + std::to_string(c) + "]");
    }
    try {
      return DensityOperator(m, layout);
    } catch (const std::invalid_argument& e) {
      field_error("matrix", e.what());
    }
  }
  field_error("kind", "expected \"pure\" or \"mixed\"");
}

LoadedState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state(buffer.str());
  } catch (const StateFileError& e) {
    throw StateFileError(path.string() + ": " + e.what());
  }
}

std::string serialize_state(const LoadedState& state) {
  json doc;
  doc["layout"] = layout_of(state).dims();
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    doc["kind"] = "pure";
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi->amplitudes().size(); ++i)
      amps.push_back(complex_json(psi->amplitudes()(i)));
    doc["amplitudes"] = std::move(amps);
  } else {
    const CMatrix& m = std::get<DensityOperator>(state).matrix();
    doc["kind"] = "mixed";
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  return doc.dump(1) + "\n";
}

void write_state_file(const std::filesystem::path& path, const LoadedState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file " + path.string());
  out << serialize_state(state);
}

const SubsystemLayout& layout_of(const LoadedState& state) {
  return std::visit([](const auto& s) -> const SubsystemLayout& { return s.layout(); }, state);
}

DensityOperator as_density(const LoadedState& state) {
  if (const auto* psi = std::get_if<StateVector>(&state)) return DensityOperator::from_pure(*psi);
  return std::get<DensityOperator>(state);
}

}  // namespace polygamy
