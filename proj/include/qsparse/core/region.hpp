#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qsparse {

/// Nonempty sorted set of distinct qubit indices.
class Region {
 public:
  Region(std::initializer_list<int> qubits);
  explicit Region(std::vector<int> qubits);

  /// Qubits [begin, end).
  static Region range(int begin, int end);
  /// `size` consecutive qubits starting at `start` on a periodic chain of n.
  static Region periodic_block(int start, int size, int num_qubits);

  const std::vector<int>& qubits() const { return qubits_; }
  int size() const { return static_cast<int>(qubits_.size()); }
  bool contains(int qubit) const;

  bool overlaps(const Region& other) const;
  Region united(const Region& other) const;

  /// Bit mask with bit q set for every member (qubit index, not basis bit).
  /// Throws InvalidArgument for qubits >= 64.
  std::uint64_t mask() const;

  /// Throws InvalidArgument unless every index lies in [0, num_qubits).
  void validate(int num_qubits) const;

  std::string to_string() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<int> qubits_;
};

/// Qubits of a mask in increasing order.
std::vector<int> qubits_of_mask(std::uint64_t mask);

}  // namespace qsparse
