#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace sigscope {

using BigInt = boost::multiprecision::cpp_int;

// h_n(t,x) = sum_k c_{n,k} t^k x^{n-2k}, exact integer c_{n,k}, c_{n,0} = 1.
struct HermitePolynomial {
    int order = 0;
    std::vector<BigInt> coeffs;  // k = 0 .. floor(order/2)
};

// Cached exact table from the recurrence
// h_{n+1} = x h_n - n t h_{n-1}, i.e. c_{n+1,k} = c_{n,k} - n c_{n-1,k-1}.
// Safe for concurrent callers.
const HermitePolynomial& hermite_coeffs(int n);

// sum_k c_{n,k} t^k x^{n-2k} with compensated (Neumaier) accumulation over
// double-converted coefficients. Coefficients convert exactly-in-range for
// n <= 250 or so; estimators use n <= 200.
double hermite_eval(int n, double t, double x);

// h_n(qv, x_t) / n!, computed in log space past the double factorial range.
double ito_iterated_integral(int n, double qv, double x_t);

// Large-n comparator for h_n(1, y):
// e^{y^2/4} (2^{n/2}/sqrt(pi)) Gamma((n+1)/2) cos(y sqrt(n) - n pi/2).
// Diagnostic only; never feeds estimators.
double hermite_asymptotic(int n, double y);

// |cos(x sqrt(n/t) - n pi/2)| < threshold: the comparator (and the level's
// contribution to the limit functional) degenerates near cosine zeros.
bool hermite_cosine_degenerate(int n, double t, double x, double threshold = 0.05);

}
