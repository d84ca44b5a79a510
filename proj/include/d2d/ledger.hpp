#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace d2d {

/// Real-valued transmission bookkeeping for the fluid recursion.
/// m(i, l) is the mass of UEs making their l-th transmission in zone i,
/// split exactly into successes ms(i, l) and failures mf(i, l).
/// Rows must be completed in order i = 1..dz_count (see complete_row).
class TransmissionLedger {
 public:
  TransmissionLedger(std::int64_t dz_count, std::int64_t max_transmissions)
      : dz_count_(dz_count),
        lmax_(max_transmissions),
        m_(static_cast<std::size_t>(dz_count * max_transmissions), 0.0),
        ms_(m_.size(), 0.0),
        mf_(m_.size(), 0.0) {}

  std::int64_t dz_count() const { return dz_count_; }
  std::int64_t max_transmissions() const { return lmax_; }

  double& m(std::int64_t i, std::int64_t l) { return m_[index(i, l)]; }
  double& ms(std::int64_t i, std::int64_t l) { return ms_[index(i, l)]; }
  double& mf(std::int64_t i, std::int64_t l) { return mf_[index(i, l)]; }
  double m(std::int64_t i, std::int64_t l) const { return m_[index(i, l)]; }
  double ms(std::int64_t i, std::int64_t l) const { return ms_[index(i, l)]; }
  double mf(std::int64_t i, std::int64_t l) const { return mf_[index(i, l)]; }

  /// Zone-wide contender total M_i over all attempt groups.
  double dz_total(std::int64_t i) const {
    double sum = 0.0;
    for (std::int64_t l = 1; l <= lmax_; ++l) sum += m(i, l);
    return sum;
  }

  std::int64_t completed_rows() const { return completed_; }
  void complete_row(std::int64_t i) {
    if (i != completed_ + 1)
      throw std::logic_error("ledger rows must be completed in order: expected " +
                             std::to_string(completed_ + 1) + ", got " +
                             std::to_string(i));
    completed_ = i;
  }

 private:
  std::size_t index(std::int64_t i, std::int64_t l) const {
    if (i < 1 || i > dz_count_ || l < 1 || l > lmax_)
      throw std::out_of_range("ledger index (i=" + std::to_string(i) +
                              ", l=" + std::to_string(l) + ") out of range");
    return static_cast<std::size_t>((i - 1) * lmax_ + (l - 1));
  }

  std::int64_t dz_count_;
  std::int64_t lmax_;
  std::int64_t completed_ = 0;
  std::vector<double> m_, ms_, mf_;
};

}  // namespace d2d
