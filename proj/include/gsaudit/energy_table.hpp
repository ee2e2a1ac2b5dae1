#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsaudit/geometry.hpp"
#include "gsaudit/potentials.hpp"

namespace gsaudit {

struct TableEntry {
  double energy = 0.0;
  std::string label;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TableMetadata {
  std::optional<DomainSpec> domain;
  std::optional<PotentialSpec> potential;
  std::string source;
  std::map<std::string, std::string> extra;  // unrecognised header keys, kept verbatim

  friend bool operator==(const TableMetadata&, const TableMetadata&) = default;
};

/// Sparse list N -> putative ground-state energy E^x(N), N >= 2.
class EnergyTable {
 public:
  EnergyTable() = default;
  explicit EnergyTable(TableMetadata meta) : meta_(std::move(meta)) {}

  /// Adds a row. A second row for the same N keeps the lower energy and
  /// records a warning describing the discarded one.
  void insert(int n, double energy, std::string label = {});

  bool contains(int n) const { return rows_.contains(n); }
  /// Throws LookupError when n is absent.
  const TableEntry& at(int n) const;
  double energy(int n) const { return at(n).energy; }

  bool empty() const { return rows_.empty(); }
  std::size_t size() const { return rows_.size(); }
  const std::map<int, TableEntry>& rows() const { return rows_; }

  const TableMetadata& metadata() const { return meta_; }
  TableMetadata& metadata() { return meta_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Rows and metadata; warnings are ingestion history and do not count.
  friend bool operator==(const EnergyTable& a, const EnergyTable& b) {
    return a.rows_ == b.rows_ && a.meta_ == b.meta_;
  }

 private:
  std::map<int, TableEntry> rows_;
  TableMetadata meta_;
  std::vector<std::string> warnings_;
};

}  // namespace gsaudit
