#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace fdlap {

inline constexpr long kFftCrossover = 256;

enum class ConvPath { automatic, direct, fft };

// y_i = sum_q k[i + n - 1 - q] x[q] for i in [0, w), where n = x.size() and
// k.size() = w + n - 1 holds the kernel at offsets lo, lo+1, ...
std::vector<double> toeplitz_apply(std::span<const double> k, std::span<const double> x, long w,
                                   ConvPath path = ConvPath::automatic);

// Symmetric Toeplitz matrix T_{ij} = c[|i-j|] of order n, applied by circulant
// embedding of size next_pow2(2n). The transformed column is computed once.
class SymmetricToeplitz {
public:
  explicit SymmetricToeplitz(std::vector<double> column, ConvPath path = ConvPath::automatic);
  ~SymmetricToeplitz();
  SymmetricToeplitz(SymmetricToeplitz&&) noexcept;
  SymmetricToeplitz& operator=(SymmetricToeplitz&&) noexcept;

  long order() const { return static_cast<long>(column_.size()); }
  const std::vector<double>& column() const { return column_; }
  bool uses_fft() const { return fft_ != nullptr; }

  void apply(std::span<const double> x, std::span<double> y) const;

private:
  struct Fft;
  std::vector<double> column_;
  std::unique_ptr<Fft> fft_;
};

long next_pow2(long n);

}  // namespace fdlap
