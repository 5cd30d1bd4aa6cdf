#include "scenval/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "scenval/errors.hpp"

namespace scenval::quad {

namespace {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (positive half;
// the rule is symmetric). Nodes with even index belong to the embedded
// 7-point Gauss rule.
constexpr int kKronrodHalf = 8;
constexpr double kNodes[kKronrodHalf] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007899, 0.000000000000000,
};
constexpr double kKronrodWeights[kKronrodHalf] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Segment {
    double a, b;
    double value;   // K15 estimate
    double error;   // |K15 - G7|
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const {
        return x.error < y.error;
    }
};

// Evaluates the K15 and embedded G7 rules on [a, b].
Segment evaluate_segment(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < kKronrodHalf - 1; ++i) {
        const double offset = half * kNodes[i];
        const double sum = f(mid - offset) + f(mid + offset);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * sum;
        }
    }
    const double centre = f(mid);
    kronrod += kKronrodWeights[kKronrodHalf - 1] * centre;
    gauss += kGaussWeights[3] * centre;
    kronrod *= half;
    gauss *= half;
    return Segment{a, b, kronrod, std::abs(kronrod - gauss)};
}

constexpr std::size_t kEvalsPerSegment = 15;

std::vector<double> initial_edges(double a, double b,
                                  const std::vector<double>& breakpoints) {
    std::vector<double> edges{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            edges.push_back(x);
        }
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

[[noreturn]] void budget_exhausted(double error, std::size_t evaluations) {
    throw QuadratureNotConverged(
        "quadrature budget of " + std::to_string(evaluations) +
        " evaluations exhausted with error estimate " + std::to_string(error));
}

struct Rectangle {
    double ax, bx, ay, by;
    double value;
    double error;
};

struct RectangleOrder {
    bool operator()(const Rectangle& x, const Rectangle& y) const {
        return x.error < y.error;
    }
};

// Tensor-product K15x15 / G7x7 estimates over one rectangle.
Rectangle evaluate_rectangle(const std::function<double(double, double)>& f,
                             double ax, double bx, double ay, double by) {
    const double hx = 0.5 * (bx - ax);
    const double mx = 0.5 * (ax + bx);
    const double hy = 0.5 * (by - ay);
    const double my = 0.5 * (ay + by);

    double fx[2 * kKronrodHalf - 1][2 * kKronrodHalf - 1];
    double xs[2 * kKronrodHalf - 1];
    double ys[2 * kKronrodHalf - 1];
    // node layout: index 0..13 mirror pairs, 14 is the centre
    for (int i = 0; i < kKronrodHalf - 1; ++i) {
        xs[2 * i] = mx - hx * kNodes[i];
        xs[2 * i + 1] = mx + hx * kNodes[i];
        ys[2 * i] = my - hy * kNodes[i];
        ys[2 * i + 1] = my + hy * kNodes[i];
    }
    xs[14] = mx;
    ys[14] = my;
    for (int i = 0; i < 15; ++i) {
        for (int j = 0; j < 15; ++j) {
            fx[i][j] = f(xs[i], ys[j]);
        }
    }

    auto kweight = [](int i) {
        return i == 14 ? kKronrodWeights[kKronrodHalf - 1] : kKronrodWeights[i / 2];
    };
    // Gauss nodes sit at odd half-indices: kNodes[1], kNodes[3], kNodes[5], centre.
    auto gweight = [](int i) {
        if (i == 14) {
            return kGaussWeights[3];
        }
        const int half = i / 2;
        return half % 2 == 1 ? kGaussWeights[half / 2] : 0.0;
    };

    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double kwi = kweight(i);
        const double gwi = gweight(i);
        for (int j = 0; j < 15; ++j) {
            kronrod += kwi * kweight(j) * fx[i][j];
            if (gwi != 0.0) {
                gauss += gwi * gweight(j) * fx[i][j];
            }
        }
    }
    kronrod *= hx * hy;
    gauss *= hx * hy;
    return Rectangle{ax, bx, ay, by, kronrod, std::abs(kronrod - gauss)};
}

constexpr std::size_t kEvalsPerRectangle = 225;

double transform_point(double t) { return t / (1.0 - t * t); }

double transform_jacobian(double t) {
    const double one_minus = 1.0 - t * t;
    return (1.0 + t * t) / (one_minus * one_minus);
}

}  // namespace

double compactify(double x) {
    if (std::isinf(x)) {
        return x > 0 ? 1.0 : -1.0;
    }
    // Solve t/(1-t^2) = x for the branch through the origin.
    if (x == 0.0) {
        return 0.0;
    }
    return (std::sqrt(4.0 * x * x + 1.0) - 1.0) / (2.0 * x);
}

Result integrate_interval(const std::function<double(double)>& f, double a, double b,
                          const Options& opts, const std::vector<double>& breakpoints) {
    const auto edges = initial_edges(a, b, breakpoints);

    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> queue;
    double total_value = 0.0;
    double total_error = 0.0;
    std::size_t evaluations = 0;

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Segment s = evaluate_segment(f, edges[i], edges[i + 1]);
        evaluations += kEvalsPerSegment;
        total_value += s.value;
        total_error += s.error;
        queue.push(s);
    }

    while (total_error > opts.abs_tol) {
        if (queue.empty()) {
            // every remaining segment is unsplittable in double precision
            budget_exhausted(total_error, evaluations);
        }
        if (evaluations + 2 * kEvalsPerSegment > opts.max_evaluations) {
            budget_exhausted(total_error, evaluations);
        }
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            continue;  // keeps its contribution, just cannot be refined
        }
        Segment left = evaluate_segment(f, worst.a, mid);
        Segment right = evaluate_segment(f, mid, worst.b);
        evaluations += 2 * kEvalsPerSegment;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    return Result{total_value, total_error, evaluations};
}

Result integrate_rectangle(const std::function<double(double, double)>& f,
                           double ax, double bx, double ay, double by,
                           const Options& opts,
                           const std::vector<double>& breakpoints_x,
                           const std::vector<double>& breakpoints_y) {
    const auto xedges = initial_edges(ax, bx, breakpoints_x);
    const auto yedges = initial_edges(ay, by, breakpoints_y);

    std::priority_queue<Rectangle, std::vector<Rectangle>, RectangleOrder> queue;
    double total_value = 0.0;
    double total_error = 0.0;
    std::size_t evaluations = 0;

    for (std::size_t i = 0; i + 1 < xedges.size(); ++i) {
        for (std::size_t j = 0; j + 1 < yedges.size(); ++j) {
            Rectangle r = evaluate_rectangle(f, xedges[i], xedges[i + 1], yedges[j],
                                             yedges[j + 1]);
            evaluations += kEvalsPerRectangle;
            total_value += r.value;
            total_error += r.error;
            queue.push(r);
        }
    }

    while (total_error > opts.abs_tol) {
        if (queue.empty()) {
            budget_exhausted(total_error, evaluations);
        }
        if (evaluations + 4 * kEvalsPerRectangle > opts.max_evaluations) {
            budget_exhausted(total_error, evaluations);
        }
        const Rectangle worst = queue.top();
        queue.pop();
        const double mx = 0.5 * (worst.ax + worst.bx);
        const double my = 0.5 * (worst.ay + worst.by);
        if (mx <= worst.ax || mx >= worst.bx || my <= worst.ay || my >= worst.by) {
            continue;
        }
        total_value -= worst.value;
        total_error -= worst.error;
        const double qx[3] = {worst.ax, mx, worst.bx};
        const double qy[3] = {worst.ay, my, worst.by};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Rectangle r =
                    evaluate_rectangle(f, qx[i], qx[i + 1], qy[j], qy[j + 1]);
                evaluations += kEvalsPerRectangle;
                total_value += r.value;
                total_error += r.error;
                queue.push(r);
            }
        }
    }

    return Result{total_value, total_error, evaluations};
}

Result integrate_real_line(const std::function<double(double)>& f,
                           const Options& opts,
                           const std::vector<double>& breakpoints) {
    std::vector<double> tbreaks{0.0};
    for (double x : breakpoints) {
        tbreaks.push_back(compactify(x));
    }
    auto transformed = [&f](double t) {
        return f(transform_point(t)) * transform_jacobian(t);
    };
    return integrate_interval(transformed, -1.0, 1.0, opts, tbreaks);
}

Result integrate_real_plane(const std::function<double(double, double)>& f,
                            const Options& opts,
                            const std::vector<double>& breakpoints) {
    std::vector<double> tbreaks{0.0};
    for (double x : breakpoints) {
        tbreaks.push_back(compactify(x));
    }
    auto transformed = [&f](double tx, double ty) {
        return f(transform_point(tx), transform_point(ty)) *
               transform_jacobian(tx) * transform_jacobian(ty);
    };
    return integrate_rectangle(transformed, -1.0, 1.0, -1.0, 1.0, opts, tbreaks,
                               tbreaks);
}

}  // namespace scenval::quad
