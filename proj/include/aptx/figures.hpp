#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace aptx {

/// Writes the six canonical comparison series as CSV files into out_dir and
/// returns the file names, in order:
///   aptx_values.csv               x, aptx              (alpha=1, beta=1, gamma=0.5)
///   aptx_derivative.csv           x, aptx_grad
///   tanh_sigmoid_derivatives.csv  x, tanh_grad, sigmoid_grad
///   relu_family.csv               x, relu, leaky_relu, elu   (slope 0.05, elu alpha 2)
///   swish_mish_derivatives.csv    x, swish_grad, mish_grad
///   mish_aptx_derivatives.csv     x, mish_grad, aptx_grad
std::vector<std::string> emit_figures(const std::filesystem::path& out_dir,
                                      double lo = -5.0, double hi = 5.0,
                                      double step = 0.01);

}  // namespace aptx
