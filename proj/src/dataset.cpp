#include "bbgc/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bbgc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_comma(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

[[noreturn]] void cell_error(const std::string& path, int row, int col,
                             const std::string& what) {
  throw std::runtime_error(path + ": row " + std::to_string(row) + ", column " +
                           std::to_string(col) + ": " + what);
}

}  // namespace

ColumnKind ColumnKind::ord(int levels) {
  if (levels < 2) throw std::invalid_argument("ColumnKind: ordinal levels must be >= 2");
  return {VarKind::ordinal, levels};
}

MixedDataset::MixedDataset(Eigen::MatrixXd values, std::vector<ColumnKind> kinds,
                           std::vector<std::string> names)
    : values_(std::move(values)), kinds_(std::move(kinds)), names_(std::move(names)) {
  const int n = static_cast<int>(values_.rows());
  const int p = static_cast<int>(values_.cols());
  if (n < 2 || p < 1)
    throw std::invalid_argument("MixedDataset: requires n >= 2 and p >= 1");
  if (static_cast<int>(kinds_.size()) != p)
    throw std::invalid_argument("MixedDataset: kinds length must equal column count");
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) names_.push_back("x" + std::to_string(j + 1));
  }
  if (static_cast<int>(names_.size()) != p)
    throw std::invalid_argument("MixedDataset: names length must equal column count");

  for (int j = 0; j < p; ++j) {
    const ColumnKind& k = kinds_[static_cast<std::size_t>(j)];
    if (k.is_ordinal() && k.levels < 2)
      throw std::invalid_argument("MixedDataset: ordinal levels must be >= 2");
    for (int i = 0; i < n; ++i) {
      const double v = values_(i, j);
      if (std::isnan(v)) continue;
      if (std::isinf(v))
        throw std::invalid_argument("MixedDataset: observed cells must be finite");
      if (k.is_ordinal()) {
        if (v != std::floor(v) || v < 1.0 || v > static_cast<double>(k.levels))
          throw std::invalid_argument(
              "MixedDataset: ordinal cell (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + ") value " + std::to_string(v) +
              " outside 1.." + std::to_string(k.levels));
      }
    }
  }
}

std::vector<double> MixedDataset::observed_column(int j) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n()));
  for (int i = 0; i < n(); ++i)
    if (observed(i, j)) out.push_back(values_(i, j));
  return out;
}

long MixedDataset::observed_count() const {
  long c = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < p(); ++j)
      if (observed(i, j)) ++c;
  return c;
}

MixedDataset MixedDataset::with_masked(
    const std::vector<std::pair<int, int>>& cells) const {
  Eigen::MatrixXd v = values_;
  for (const auto& [i, j] : cells) v(i, j) = std::numeric_limits<double>::quiet_NaN();
  return MixedDataset(std::move(v), kinds_, names_);
}

MixedDataset MixedDataset::select_columns(const std::vector<int>& cols) const {
  Eigen::MatrixXd v(n(), static_cast<int>(cols.size()));
  std::vector<ColumnKind> k;
  std::vector<std::string> nm;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    v.col(static_cast<int>(c)) = values_.col(cols[c]);
    k.push_back(kinds_[static_cast<std::size_t>(cols[c])]);
    nm.push_back(names_[static_cast<std::size_t>(cols[c])]);
  }
  return MixedDataset(std::move(v), std::move(k), std::move(nm));
}

bool MixedDataset::operator==(const MixedDataset& other) const {
  if (n() != other.n() || p() != other.p()) return false;
  if (kinds_ != other.kinds_ || names_ != other.names_) return false;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < p(); ++j) {
      const bool o1 = observed(i, j), o2 = other.observed(i, j);
      if (o1 != o2) return false;
      if (o1 && values_(i, j) != other.values_(i, j)) return false;
    }
  return true;
}

CellIndexSets index_sets(const MixedDataset& d) {
  CellIndexSets s;
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.p(); ++j) {
      const bool ord = d.kind(j).is_ordinal();
      if (d.observed(i, j))
        (ord ? s.obs_ord : s.obs_cont).emplace_back(i, j);
      else
        (ord ? s.miss_ord : s.miss_cont).emplace_back(i, j);
    }
  return s;
}

std::vector<ColumnSchema> read_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schema file: " + path);
  std::vector<ColumnSchema> schema;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split_comma(line);
    if (fields.size() < 2)
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               ": expected `name,kind[,levels]`");
    ColumnSchema col;
    col.name = fields[0];
    if (fields[1] == "continuous") {
      col.kind = ColumnKind::cont();
    } else if (fields[1] == "ordinal") {
      if (fields.size() < 3)
        throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                                 ": ordinal column needs a level count");
      col.kind = ColumnKind::ord(std::stoi(fields[2]));
    } else {
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               ": unknown kind `" + fields[1] + "`");
    }
    schema.push_back(std::move(col));
  }
  if (schema.empty()) throw std::runtime_error(path + ": empty schema");
  return schema;
}

void write_schema(const MixedDataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write schema file: " + path);
  for (int j = 0; j < d.p(); ++j) {
    out << d.names()[static_cast<std::size_t>(j)];
    if (d.kind(j).is_ordinal())
      out << ",ordinal," << d.kind(j).levels << "\n";
    else
      out << ",continuous\n";
  }
  if (!out) throw std::runtime_error("write failure: " + path);
}

MixedDataset read_csv(const std::string& path,
                      const std::vector<ColumnSchema>& schema,
                      const std::string& missing_token) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  const int p = static_cast<int>(schema.size());

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  const auto header = split_comma(line);
  if (static_cast<int>(header.size()) != p)
    throw std::runtime_error(path + ": header has " + std::to_string(header.size()) +
                             " columns, schema declares " + std::to_string(p));

  std::vector<std::vector<double>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() && in.eof()) break;
    const auto fields = split_comma(line);
    if (static_cast<int>(fields.size()) != p)
      throw std::runtime_error(path + ": row " + std::to_string(lineno - 1) +
                               " has " + std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(p));
    std::vector<double> row(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
      const std::string& f = fields[static_cast<std::size_t>(j)];
      const int data_row = lineno - 1;
      if (f.empty() || f == missing_token) {
        row[static_cast<std::size_t>(j)] = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      double v;
      std::size_t pos = 0;
      try {
        v = std::stod(f, &pos);
      } catch (const std::exception&) {
        cell_error(path, data_row, j + 1, "cannot parse `" + f + "`");
      }
      if (pos != f.size()) cell_error(path, data_row, j + 1, "cannot parse `" + f + "`");
      const ColumnKind& k = schema[static_cast<std::size_t>(j)].kind;
      if (k.is_ordinal()) {
        if (v != std::floor(v))
          cell_error(path, data_row, j + 1, "ordinal value `" + f + "` is not an integer");
        if (v < 1.0 || v > static_cast<double>(k.levels))
          cell_error(path, data_row, j + 1,
                     "ordinal value " + f + " outside 1.." + std::to_string(k.levels));
      } else if (!std::isfinite(v)) {
        cell_error(path, data_row, j + 1, "non-finite value `" + f + "`");
      }
      row[static_cast<std::size_t>(j)] = v;
    }
    rows.push_back(std::move(row));
  }

  const int n = static_cast<int>(rows.size());
  if (n < 2) throw std::runtime_error(path + ": needs at least 2 data rows");
  Eigen::MatrixXd values(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      values(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  std::vector<ColumnKind> kinds;
  kinds.reserve(schema.size());
  for (const auto& c : schema) kinds.push_back(c.kind);
  return MixedDataset(std::move(values), std::move(kinds),
                      std::vector<std::string>(header.begin(), header.end()));
}

void write_csv(const MixedDataset& d, const std::string& path,
               const std::string& missing_token) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write CSV file: " + path);
  for (int j = 0; j < d.p(); ++j)
    out << d.names()[static_cast<std::size_t>(j)] << (j + 1 < d.p() ? "," : "\n");
  char buf[40];
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 0; j < d.p(); ++j) {
      if (!d.observed(i, j)) {
        out << missing_token;
      } else if (d.kind(j).is_ordinal()) {
        out << static_cast<long>(d.value(i, j));
      } else {
        std::snprintf(buf, sizeof(buf), "%.17g", d.value(i, j));
        out << buf;
      }
      out << (j + 1 < d.p() ? "," : "\n");
    }
  }
  if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace bbgc
