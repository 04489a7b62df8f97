#include "qsparse/core/region.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <sstream>

#include "qsparse/core/errors.hpp"

namespace qsparse {

Region::Region(std::initializer_list<int> qubits) : Region(std::vector<int>(qubits)) {}

Region::Region(std::vector<int> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.empty()) throw InvalidArgument("region must be nonempty");
  std::sort(qubits_.begin(), qubits_.end());
  if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
    throw InvalidArgument("region contains a repeated qubit");
  }
  if (qubits_.front() < 0) throw InvalidArgument("region qubit index out of range");
}

Region Region::range(int begin, int end) {
  std::vector<int> q;
  for (int i = begin; i < end; ++i) q.push_back(i);
  return Region(std::move(q));
}

Region Region::periodic_block(int start, int size, int num_qubits) {
  if (size > num_qubits) throw InvalidArgument("block longer than the chain");
  std::vector<int> q;
  for (int i = 0; i < size; ++i) q.push_back(((start + i) % num_qubits + num_qubits) % num_qubits);
  return Region(std::move(q));
}

bool Region::contains(int qubit) const {
  return std::binary_search(qubits_.begin(), qubits_.end(), qubit);
}

bool Region::overlaps(const Region& other) const {
  auto a = qubits_.begin();
  auto b = other.qubits_.begin();
  while (a != qubits_.end() && b != other.qubits_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

Region Region::united(const Region& other) const {
  std::vector<int> q;
  std::set_union(qubits_.begin(), qubits_.end(), other.qubits_.begin(), other.qubits_.end(), std::back_inserter(q));
  return Region(std::move(q));
}

std::uint64_t Region::mask() const {
  if (qubits_.back() >= 64) throw InvalidArgument("region " + to_string() + " does not fit a 64-bit mask");
  std::uint64_t m = 0;
  for (int q : qubits_) m |= std::uint64_t{1} << q;
  return m;
}

void Region::validate(int num_qubits) const {
  if (qubits_.back() >= num_qubits) {
    throw InvalidArgument("region " + to_string() + " out of range for " + std::to_string(num_qubits) +
                          " qubits");
  }
}

std::string Region::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < qubits_.size(); ++i) os << (i ? "," : "") << qubits_[i];
  os << '}';
  return os.str();
}

std::vector<int> qubits_of_mask(std::uint64_t mask) {
  std::vector<int> q;
  while (mask) {
    q.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return q;
}

}  // namespace qsparse
