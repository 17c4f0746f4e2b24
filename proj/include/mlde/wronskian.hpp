#pragma once

#include "mlde/log_series.hpp"

#include <vector>

namespace mlde {

// det(theta^i f_j) with theta^i = theta_{2i-2} o ... o theta_0.
Series modular_wronskian(const std::vector<Series>& system);
// Logarithmic members are allowed as long as the log terms cancel in the
// determinant, as they do for a full solution system.
Series modular_wronskian(const std::vector<LogSeries>& system);

}  // namespace mlde
