#pragma once
#include <vector>

namespace meridian {

// Dense univariate polynomial, coefficients in ascending degree order.
struct Poly1 {
    std::vector<double> coeffs; // empty means the zero polynomial

    static Poly1 constant(double c) { return {{c}}; }

    double eval(double t) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Poly1 derivative() const {
        Poly1 d;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            d.coeffs.push_back(coeffs[k] * static_cast<double>(k));
        return d;
    }

    bool is_constant() const {
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            if (coeffs[k] != 0.0) return false;
        return true;
    }
};

} // namespace meridian
