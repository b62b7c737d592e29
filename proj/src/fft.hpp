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

// Internal FFTW-backed transforms over arma::cx_mat. Plans are cached per
// shape; planning is serialized, execution is concurrent-safe on distinct
// matrices.

#ifndef SWRADAR_FFT_HPP
#define SWRADAR_FFT_HPP

#include <armadillo>

namespace swradar::detail
{

/// Unnormalized forward 2D DFT over both axes.
arma::cx_mat fft2(const arma::cx_mat& x);

/// Inverse of fft2 (scaled by 1/(rows*cols)).
arma::cx_mat ifft2(const arma::cx_mat& x);

/// Forward 2D DFT of x zero-padded to (rows, cols); requires rows >= x.n_rows
/// and cols >= x.n_cols.
arma::cx_mat fft2_padded(const arma::cx_mat& x, std::size_t rows, std::size_t cols);

} // namespace swradar::detail

#endif
