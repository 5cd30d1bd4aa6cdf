#include "scenval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scenval::stats {

double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("mean of empty range");
    }
    return compensated_sum(values) / static_cast<double>(values.size());
}

double sample_stddev(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        return 0.0;
    }
    const double mu = mean(values);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - mu;
        sq[i] = d * d;
    }
    return std::sqrt(compensated_sum(sq) / static_cast<double>(n - 1));
}

double standard_error(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    return sample_stddev(values) / std::sqrt(static_cast<double>(values.size()));
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // positions i..j share the same value; assign the mid rank
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t p = i; p <= j; ++p) {
            ranks[order[p]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pearson: size mismatch");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        return 0.0;
    }
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const double> x, std::span<const double> y) {
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

}  // namespace scenval::stats
