// SPDX-License-Identifier: Apache-2.0
//
// swradar - spatial wideband MIMO FMCW radar simulation and estimation
// Copyright (C) 2026 swradar contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace swradar::detail
{

namespace
{

// FFTW planning is not thread-safe; new-array execution is. Plans are built
// once per (rows, cols, sign) with FFTW_UNALIGNED so they can run on any
// buffer.
class PlanCache
{
  public:
    fftw_plan get(std::size_t rows, std::size_t cols, int sign)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(rows, cols, sign);
        auto it = plans_.find(key);
        if (it != plans_.end())
            return it->second;

        arma::cx_mat dummy_in(rows, cols, arma::fill::zeros);
        arma::cx_mat dummy_out(rows, cols, arma::fill::zeros);
        // Column-major (rows, cols) storage is row-major (cols, rows) to FFTW.
        fftw_plan p = fftw_plan_dft_2d(int(cols), int(rows),
                                       reinterpret_cast<fftw_complex*>(dummy_in.memptr()),
                                       reinterpret_cast<fftw_complex*>(dummy_out.memptr()),
                                       sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr)
            throw std::runtime_error("fft2: FFTW planning failed");
        plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache()
{
    static PlanCache c;
    return c;
}

arma::cx_mat transform(const arma::cx_mat& x, int sign)
{
    arma::cx_mat out(x.n_rows, x.n_cols);
    arma::cx_mat in(x); // FFTW may not accept const input
    fftw_plan p = cache().get(x.n_rows, x.n_cols, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.memptr()),
                     reinterpret_cast<fftw_complex*>(out.memptr()));
    return out;
}

} // namespace

arma::cx_mat fft2(const arma::cx_mat& x)
{
    return transform(x, FFTW_FORWARD);
}

arma::cx_mat ifft2(const arma::cx_mat& x)
{
    arma::cx_mat out = transform(x, FFTW_BACKWARD);
    out /= double(x.n_rows) * double(x.n_cols);
    return out;
}

arma::cx_mat fft2_padded(const arma::cx_mat& x, std::size_t rows, std::size_t cols)
{
    if (rows < x.n_rows || cols < x.n_cols)
        throw std::invalid_argument("fft2_padded: pad size smaller than input");
    if (rows == x.n_rows && cols == x.n_cols)
        return fft2(x);
    arma::cx_mat padded(rows, cols, arma::fill::zeros);
    padded.submat(0, 0, x.n_rows - 1, x.n_cols - 1) = x;
    return fft2(padded);
}

} // namespace swradar::detail
