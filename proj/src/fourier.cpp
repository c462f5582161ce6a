// SPDX-License-Identifier: Apache-2.0
#include "fourier.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace sigop::detail {

namespace {

struct Buffer {
  explicit Buffer(std::size_t n) : ptr(fftw_alloc_complex(n)) {}
  ~Buffer() { fftw_free(ptr); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* ptr;
};

std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> plans;

fftw_plan plan_for(std::size_t n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  Buffer tmp(n);
  fftw_plan p = fftw_plan_dft_1d(int(n), tmp.ptr, tmp.ptr, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                 FFTW_ESTIMATE);
  plans.emplace(key, p);
  return p;
}

}  // namespace

void dft(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (n == 0) return;
  fftw_plan p = plan_for(n, sign);
  Buffer buf(n);
  std::memcpy(buf.ptr, reinterpret_cast<const double*>(data.data()), n * sizeof(fftw_complex));
  fftw_execute_dft(p, buf.ptr, buf.ptr);
  std::memcpy(reinterpret_cast<double*>(data.data()), buf.ptr, n * sizeof(fftw_complex));
}

}  // namespace sigop::detail
