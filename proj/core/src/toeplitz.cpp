#include "fdlap/toeplitz.hpp"

#include <algorithm>
#include <mutex>

#include <fftw3.h>

#include "fdlap/errors.hpp"

namespace fdlap {
namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class T>
struct FftwDeleter {
  void operator()(T* p) const { fftw_free(p); }
};
using RealBuf = std::unique_ptr<double, FftwDeleter<double>>;
using CplxBuf = std::unique_ptr<fftw_complex, FftwDeleter<fftw_complex>>;

RealBuf alloc_real(long n) { return RealBuf(fftw_alloc_real(static_cast<std::size_t>(n))); }
CplxBuf alloc_cplx(long n) { return CplxBuf(fftw_alloc_complex(static_cast<std::size_t>(n))); }

// Real cyclic convolution engine of fixed length L.
class CyclicConv {
public:
  explicit CyclicConv(long length) : n_(length), in_(alloc_real(length)), spec_(alloc_cplx(length / 2 + 1)) {
    std::lock_guard lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), in_.get(), spec_.get(), FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n_), spec_.get(), in_.get(), FFTW_ESTIMATE);
  }
  ~CyclicConv() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
  }
  CyclicConv(const CyclicConv&) = delete;
  CyclicConv& operator=(const CyclicConv&) = delete;

  long length() const { return n_; }

  // Spectrum of a zero-padded real sequence.
  std::vector<std::complex<double>> transform(std::span<const double> a) const {
    std::fill(in_.get(), in_.get() + n_, 0.0);
    std::copy(a.begin(), a.end(), in_.get());
    fftw_execute_dft_r2c(fwd_, in_.get(), spec_.get());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n_ / 2 + 1));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {spec_.get()[i][0], spec_.get()[i][1]};
    return out;
  }

  // Cyclic convolution of x (zero padded) with a sequence whose spectrum is given.
  void convolve(const std::vector<std::complex<double>>& kspec, std::span<const double> x) const {
    std::fill(in_.get(), in_.get() + n_, 0.0);
    std::copy(x.begin(), x.end(), in_.get());
    fftw_execute_dft_r2c(fwd_, in_.get(), spec_.get());
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < kspec.size(); ++i) {
      const std::complex<double> v = std::complex<double>(spec_.get()[i][0], spec_.get()[i][1]) * kspec[i] * scale;
      spec_.get()[i][0] = v.real();
      spec_.get()[i][1] = v.imag();
    }
    fftw_execute_dft_c2r(inv_, spec_.get(), in_.get());
  }

  const double* result() const { return in_.get(); }

private:
  long n_;
  RealBuf in_;
  CplxBuf spec_;
  fftw_plan fwd_ = nullptr;
  fftw_plan inv_ = nullptr;
};

}  // namespace

long next_pow2(long n) {
  long p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> toeplitz_apply(std::span<const double> k, std::span<const double> x, long w, ConvPath path) {
  const long n = static_cast<long>(x.size());
  if (w <= 0 || n <= 0) return std::vector<double>(static_cast<std::size_t>(std::max<long>(w, 0)), 0.0);
  if (static_cast<long>(k.size()) != w + n - 1) throw ContractViolation("toeplitz_apply: kernel length must be w+n-1");
  // Direct work is n*w; the FFT path also builds its plans per call, which costs about
  // as much as a direct product with n = w = 2 kFftCrossover.
  if (path == ConvPath::automatic)
    path = static_cast<double>(n) * static_cast<double>(w) > 4.0 * kFftCrossover * kFftCrossover ? ConvPath::fft
                                                                                                   : ConvPath::direct;
  std::vector<double> y(static_cast<std::size_t>(w), 0.0);
  if (path == ConvPath::direct) {
    for (long i = 0; i < w; ++i) {
      double acc = 0.0;
      for (long q = 0; q < n; ++q) acc += k[static_cast<std::size_t>(i + n - 1 - q)] * x[static_cast<std::size_t>(q)];
      y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
  }
  CyclicConv conv(next_pow2(w + n - 1));
  conv.convolve(conv.transform(k), x);
  for (long i = 0; i < w; ++i) y[static_cast<std::size_t>(i)] = conv.result()[i + n - 1];
  return y;
}

struct SymmetricToeplitz::Fft {
  explicit Fft(long length) : conv(length) {}
  CyclicConv conv;
  std::vector<std::complex<double>> spectrum;
};

SymmetricToeplitz::SymmetricToeplitz(std::vector<double> column, ConvPath path) : column_(std::move(column)) {
  const long n = order();
  if (n <= 0) throw ContractViolation("SymmetricToeplitz: empty column");
  if (path == ConvPath::automatic) path = n > kFftCrossover ? ConvPath::fft : ConvPath::direct;
  if (path == ConvPath::direct) return;
  // First column of the circulant: c_0..c_{n-1}, zeros, c_{n-1}..c_1.
  const long L = next_pow2(2 * n);
  fft_ = std::make_unique<Fft>(L);
  std::vector<double> circ(static_cast<std::size_t>(L), 0.0);
  for (long i = 0; i < n; ++i) circ[static_cast<std::size_t>(i)] = column_[static_cast<std::size_t>(i)];
  for (long i = 1; i < n; ++i) circ[static_cast<std::size_t>(L - i)] = column_[static_cast<std::size_t>(i)];
  fft_->spectrum = fft_->conv.transform(circ);
}

SymmetricToeplitz::~SymmetricToeplitz() = default;
SymmetricToeplitz::SymmetricToeplitz(SymmetricToeplitz&&) noexcept = default;
SymmetricToeplitz& SymmetricToeplitz::operator=(SymmetricToeplitz&&) noexcept = default;

void SymmetricToeplitz::apply(std::span<const double> x, std::span<double> y) const {
  const long n = order();
  if (static_cast<long>(x.size()) != n || static_cast<long>(y.size()) != n)
    throw ContractViolation("SymmetricToeplitz::apply: size mismatch");
  if (!fft_) {
    for (long i = 0; i < n; ++i) {
      double acc = 0.0;
      for (long j = 0; j < n; ++j)
        acc += column_[static_cast<std::size_t>(std::abs(i - j))] * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = acc;
    }
    return;
  }
  fft_->conv.convolve(fft_->spectrum, x);
  std::copy(fft_->conv.result(), fft_->conv.result() + n, y.begin());
}

}  // namespace fdlap
