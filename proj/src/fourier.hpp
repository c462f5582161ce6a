// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace sigop::detail {

// data[k] <- sum_j data[j] exp(sign 2 pi i j k / n), unnormalized
void dft(std::vector<std::complex<double>>& data, int sign);

}  // namespace sigop::detail
