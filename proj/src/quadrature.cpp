#include "qsphere/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "qsphere/error.hpp"

namespace qsphere {

namespace {

struct Rule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

// Newton iteration on Legendre polynomials
Rule make_rule(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const Rule& rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

std::complex<double> gauss_legendre_c(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, int n) {
    const Rule& r = rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

std::complex<double> integrate_converged(const std::function<std::complex<double>(double)>& f,
                                         double a, double b, double tol) {
    std::complex<double> prev = gauss_legendre_c(f, a, b, 32);
    for (int n = 64; n <= 1024; n *= 2) {
        std::complex<double> cur = gauss_legendre_c(f, a, b, n);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("1d quadrature did not converge to tolerance");
}

double gauss_legendre_2d(const std::function<double(double, double)>& f, double ax, double bx,
                         double ay, double by, int n) {
    return gauss_legendre(
        [&](double x) {
            return gauss_legendre([&](double y) { return f(x, y); }, ay, by, n);
        },
        ax, bx, n);
}

}  // namespace qsphere
