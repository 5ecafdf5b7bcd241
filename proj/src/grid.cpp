#include "plastiplate/grid.hpp"

#include <cmath>

namespace plp {

std::vector<Layer> gauss_legendre_layers(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("gauss_legendre_layers: 1 <= n <= 16");
    std::vector<Layer> out(n);
    // Nodes of P_n on [-1,1] by Newton from the Chebyshev initial guess.
    for (int k = 0; k < n; ++k) {
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pn1 = (n == 1) ? 1.0 : p0;
            dp = n * (x * pn - pn1) / (x * x - 1.0);
            const double step = pn / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1,1] -> (-1/2,1/2).
        out[k] = {0.5 * x, 0.5 * w};
    }
    return out;
}

}  // namespace plp
