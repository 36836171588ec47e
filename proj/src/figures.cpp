#include "aptx/figures.hpp"

#include "aptx/analysis.hpp"
#include "aptx/report_io.hpp"

namespace aptx {

std::vector<std::string> emit_figures(const std::filesystem::path& out_dir,
                                      double lo, double hi, double step) {
  std::filesystem::create_directories(out_dir);

  EvalSeries aptx = sample_series(ActivationSpec::aptx(), lo, hi, step);
  EvalSeries tanh = sample_series(ActivationSpec::tanh(), lo, hi, step);
  EvalSeries sigmoid = sample_series(ActivationSpec::sigmoid(), lo, hi, step);
  EvalSeries relu = sample_series(ActivationSpec::relu(), lo, hi, step);
  EvalSeries leaky = sample_series(ActivationSpec::leaky_relu(), lo, hi, step);
  EvalSeries elu = sample_series(ActivationSpec::elu(), lo, hi, step);
  EvalSeries swish = sample_series(ActivationSpec::swish(), lo, hi, step);
  EvalSeries mish = sample_series(ActivationSpec::mish(), lo, hi, step);

  auto table = [&](std::vector<std::string> header,
                   std::vector<const std::vector<double>*> columns) {
    CsvTable t;
    t.header = std::move(header);
    for (std::size_t i = 0; i < aptx.xs.size(); ++i) {
      std::vector<double> row;
      row.reserve(columns.size() + 1);
      row.push_back(aptx.xs[i]);
      for (const auto* col : columns) row.push_back((*col)[i]);
      t.rows.push_back(std::move(row));
    }
    return t;
  };

  struct Sheet {
    const char* file;
    CsvTable table;
  };
  Sheet sheets[] = {
      {"aptx_values.csv", table({"x", "aptx"}, {&aptx.values})},
      {"aptx_derivative.csv", table({"x", "aptx_grad"}, {&aptx.grads})},
      {"tanh_sigmoid_derivatives.csv",
       table({"x", "tanh_grad", "sigmoid_grad"},
             {&tanh.grads, &sigmoid.grads})},
      {"relu_family.csv", table({"x", "relu", "leaky_relu", "elu"},
                                {&relu.values, &leaky.values, &elu.values})},
      {"swish_mish_derivatives.csv",
       table({"x", "swish_grad", "mish_grad"}, {&swish.grads, &mish.grads})},
      {"mish_aptx_derivatives.csv",
       table({"x", "mish_grad", "aptx_grad"}, {&mish.grads, &aptx.grads})},
  };

  std::vector<std::string> names;
  for (Sheet& sheet : sheets) {
    write_csv(out_dir / sheet.file, sheet.table);
    names.emplace_back(sheet.file);
  }
  return names;
}

}  // namespace aptx
