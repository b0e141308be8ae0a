#pragma once

// Thin RAII wrappers around FFTW plans.  FFTW's planner is not thread-safe,
// so plan creation/destruction is serialised; execution on distinct plans is
// safe concurrently.

#include <fftw3.h>

#include <complex>
#include <mutex>

namespace spinwav::detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

class Fft1d {
 public:
  // sign: FFTW_FORWARD (-1) computes sum_p x_p e^{-2pi i pk/n};
  //       FFTW_BACKWARD (+1) the conjugate sum.  No normalisation.
  Fft1d(int n, int sign) : n_(n) {
    buf_ = static_cast<fftw_complex*>(
        fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n)));
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan_ = fftw_plan_dft_1d(n, buf_, buf_, sign, FFTW_ESTIMATE);
  }
  ~Fft1d() {
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(buf_);
  }
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  int size() const { return n_; }
  std::complex<double>* buffer() {
    return reinterpret_cast<std::complex<double>*>(buf_);
  }
  void execute() { fftw_execute(plan_); }

 private:
  int n_;
  fftw_complex* buf_;
  fftw_plan plan_;
};

class Fft2d {
 public:
  // Row-major n0 x n1 transform, same sign conventions as Fft1d.
  Fft2d(int n0, int n1, int sign) : n0_(n0), n1_(n1) {
    buf_ = static_cast<fftw_complex*>(fftw_malloc(
        sizeof(fftw_complex) * static_cast<std::size_t>(n0) * n1));
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan_ = fftw_plan_dft_2d(n0, n1, buf_, buf_, sign, FFTW_ESTIMATE);
  }
  ~Fft2d() {
    {
      std::lock_guard<std::mutex> lock(fftw_planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(buf_);
  }
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  std::complex<double>* buffer() {
    return reinterpret_cast<std::complex<double>*>(buf_);
  }
  void execute() { fftw_execute(plan_); }

 private:
  int n0_, n1_;
  fftw_complex* buf_;
  fftw_plan plan_;
};

}  // namespace spinwav::detail
