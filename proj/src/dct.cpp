#include "oscillquad/dct.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace oscillquad {
namespace {

// The FFTW planner is not thread safe; execution of an existing plan on new
// arrays is. Plans are cached per length for the life of the process.
class Redft00Plans {
 public:
  ~Redft00Plans() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(n); it != plans_.end()) return it->second;
    std::vector<double> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_r2r_1d(n, in.data(), out.data(), FFTW_REDFT00,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(n, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

Redft00Plans& plans() {
  static Redft00Plans instance;
  return instance;
}

void check_length(std::size_t n) {
  if (n < 3) throw std::invalid_argument("DCT-I requires at least 3 samples");
}

// FFTW's REDFT00 omits the 1/2 on the endpoint terms and doubles the interior,
// so its output is exactly twice the halved-endpoint sum.
void fast_real(std::span<const double> x, std::span<double> y) {
  fftw_plan plan = plans().get(static_cast<int>(x.size()));
  std::vector<double> in(x.begin(), x.end());
  fftw_execute_r2r(plan, in.data(), y.data());
  for (double& v : y) v *= 0.5;
}

template <class T>
std::vector<T> naive(std::span<const T> x) {
  const std::size_t n = x.size();
  const double big_n = static_cast<double>(n - 1);
  std::vector<T> y(n, T{});
  for (std::size_t m = 0; m < n; ++m) {
    T acc{};
    for (std::size_t k = 0; k < n; ++k) {
      const double weight = (k == 0 || k == n - 1) ? 0.5 : 1.0;
      // Reduce m*k modulo 2N before scaling to keep the cosine argument small.
      const auto mk = (m * k) % (2 * (n - 1));
      acc += weight * std::cos(std::numbers::pi * static_cast<double>(mk) / big_n) * x[k];
    }
    y[m] = acc;
  }
  return y;
}

}  // namespace

std::vector<double> dct1_forward_real(std::span<const double> x, DctMethod method) {
  check_length(x.size());
  if (method == DctMethod::naive) return naive<double>(x);
  std::vector<double> y(x.size());
  fast_real(x, y);
  return y;
}

ComplexVector dct1_forward(std::span<const Complex> x, DctMethod method) {
  check_length(x.size());
  if (method == DctMethod::naive) return naive<Complex>(x);
  const std::size_t n = x.size();
  std::vector<double> re(n), im(n), yre(n), yim(n);
  for (std::size_t k = 0; k < n; ++k) {
    re[k] = x[k].real();
    im[k] = x[k].imag();
  }
  fast_real(re, yre);
  fast_real(im, yim);
  ComplexVector y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = Complex{yre[k], yim[k]};
  return y;
}

ComplexVector dct1_inverse(std::span<const Complex> y, DctMethod method) {
  ComplexVector x = dct1_forward(y, method);
  const double scale = 2.0 / static_cast<double>(y.size() - 1);
  for (auto& v : x) v *= scale;
  return x;
}

}  // namespace oscillquad
