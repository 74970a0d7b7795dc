#ifndef BBGC_DATASET_HPP
#define BBGC_DATASET_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bbgc {

enum class VarKind { continuous, ordinal };

/// Declared type of one column. Ordinal columns take integer categories
/// 1..levels (contiguous; relabeling is the caller's job).
struct ColumnKind {
  VarKind kind = VarKind::continuous;
  int levels = 0;  // >= 2 when ordinal, ignored otherwise

  static ColumnKind cont() { return {VarKind::continuous, 0}; }
  static ColumnKind ord(int levels);

  bool is_ordinal() const { return kind == VarKind::ordinal; }
  bool operator==(const ColumnKind&) const = default;
};

/// n x p matrix of mixed continuous/ordinal values with missingness.
/// Missing cells are stored as NaN; observed(i, j) is the mask. Immutable
/// after construction, safe for concurrent shared reads.
class MixedDataset {
 public:
  MixedDataset(Eigen::MatrixXd values, std::vector<ColumnKind> kinds,
               std::vector<std::string> names = {});

  int n() const { return static_cast<int>(values_.rows()); }
  int p() const { return static_cast<int>(values_.cols()); }

  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<ColumnKind>& kinds() const { return kinds_; }
  const ColumnKind& kind(int j) const { return kinds_[static_cast<std::size_t>(j)]; }
  const std::vector<std::string>& names() const { return names_; }

  double value(int i, int j) const { return values_(i, j); }
  bool observed(int i, int j) const { return !std::isnan(values_(i, j)); }

  /// Observed values of one column, in row order.
  std::vector<double> observed_column(int j) const;
  long observed_count() const;

  /// New dataset with the given cells blanked out.
  MixedDataset with_masked(const std::vector<std::pair<int, int>>& cells) const;
  /// New dataset keeping only the given columns, in the given order.
  MixedDataset select_columns(const std::vector<int>& cols) const;

  bool operator==(const MixedDataset& other) const;

 private:
  Eigen::MatrixXd values_;
  std::vector<ColumnKind> kinds_;
  std::vector<std::string> names_;
};

/// The four disjoint, exhaustive cell sets: observed/missing x
/// continuous/ordinal. Cells are (row, col), row-major order.
struct CellIndexSets {
  std::vector<std::pair<int, int>> obs_cont;
  std::vector<std::pair<int, int>> obs_ord;
  std::vector<std::pair<int, int>> miss_cont;
  std::vector<std::pair<int, int>> miss_ord;
};

CellIndexSets index_sets(const MixedDataset& d);

struct ColumnSchema {
  std::string name;
  ColumnKind kind;
};

/// Schema file: one line per column, `name,kind[,levels]` where kind is
/// `continuous` or `ordinal`.
std::vector<ColumnSchema> read_schema(const std::string& path);
void write_schema(const MixedDataset& d, const std::string& path);

/// Read a UTF-8 comma-separated file with one header row. Cells equal to
/// missing_token, or empty, are missing. Ordinal cells must be integers in
/// 1..levels; violations are reported with row, column and value.
MixedDataset read_csv(const std::string& path,
                      const std::vector<ColumnSchema>& schema,
                      const std::string& missing_token = "NA");

/// Inverse of read_csv: continuous values are written with enough digits
/// that parsing them back is bit-faithful.
void write_csv(const MixedDataset& d, const std::string& path,
               const std::string& missing_token = "NA");

}  // namespace bbgc

#endif  // BBGC_DATASET_HPP
