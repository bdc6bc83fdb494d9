#include "sympgt/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "sympgt/errors.hpp"

namespace sympgt {

namespace {

using Index = SparseOperator::Index;

// Entries reordered to (col, row): the natural map order is row-major, the
// wire order is column-major.
std::vector<std::tuple<Index, Index, Rational>> column_major(
    const SparseOperator& op) {
  std::vector<std::tuple<Index, Index, Rational>> cells;
  cells.reserve(op.nnz());
  for (const auto& [key, value] : op.entries()) {
    cells.emplace_back(key.second, key.first, value);
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) {
              return std::make_pair(std::get<0>(a), std::get<1>(a)) <
                     std::make_pair(std::get<0>(b), std::get<1>(b));
            });
  return cells;
}

}  // namespace

std::string to_exact_json(const HighestWeight& lam, const GeneratorId& gen,
                          const SparseOperator& op) {
  nlohmann::ordered_json doc;
  doc["schema"] = "sympgt/1";
  doc["dimension"] = op.dimension();
  doc["lambda"] = lam.entries();
  doc["generator"] = gen.name();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [col, row, value] : column_major(op)) {
    entries.push_back({row, col, to_fraction_string(value)});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

ExactMatrixFile from_exact_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("unparseable json: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", std::string()) != "sympgt/1") {
    throw ValidationError("expected a sympgt/1 document");
  }
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw ValidationError("dimension must be an integer");
  }
  const auto dim = doc["dimension"].get<Index>();
  if (dim < 0) throw ValidationError("dimension must be non-negative");
  if (!doc.contains("lambda") || !doc["lambda"].is_array()) {
    throw ValidationError("lambda must be an array of integers");
  }
  ExactMatrixFile file;
  for (const auto& item : doc["lambda"]) {
    if (!item.is_number_integer()) {
      throw ValidationError("lambda must be an array of integers");
    }
    file.lambda.push_back(item.get<Entry>());
  }
  HighestWeight::validate(file.lambda);
  if (!doc.contains("generator") || !doc["generator"].is_string()) {
    throw ValidationError("generator must be a string");
  }
  file.generator = doc["generator"].get<std::string>();
  GeneratorId::parse(file.generator);  // format check only
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ValidationError("entries must be an array");
  }
  file.op = SparseOperator(dim);
  for (const auto& item : doc["entries"]) {
    if (!item.is_array() || item.size() != 3 ||
        !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_string()) {
      throw ValidationError("each entry must be [row, col, \"num/den\"]");
    }
    const auto row = item[0].get<Index>();
    const auto col = item[1].get<Index>();
    if (row < 0 || col < 0 || row >= dim || col >= dim) {
      throw ValidationError("entry index out of range");
    }
    const Rational value = parse_fraction(item[2].get<std::string>());
    if (value == 0) throw ValidationError("stored zero entry");
    if (file.op.at(row, col) != 0) throw ValidationError("duplicate entry");
    file.op.set(row, col, value);
  }
  return file;
}

std::string to_matrix_market(const HighestWeight& lam, const GeneratorId& gen,
                             const SparseOperator& op) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << "% lambda " << lam.to_string() << " generator " << gen.name()
      << "; rationals converted to decimal, lossy\n";
  out << op.dimension() << ' ' << op.dimension() << ' ' << op.nnz() << '\n';
  out << std::setprecision(17);
  for (const auto& [col, row, value] : column_major(op)) {
    out << (row + 1) << ' ' << (col + 1) << ' '
        << value.convert_to<double>() << '\n';
  }
  return out.str();
}

}  // namespace sympgt
