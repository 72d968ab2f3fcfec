#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace polar {

// sign(0) = +1, matching the two's-complement hardware convention.
inline double sign_of(double v) {
    return v < 0.0 ? -1.0 : 1.0;
}

// SC f node: sign(a)sign(b)min(|a|,|b|) (min-sum form).
inline double f_node(double a, double b) {
    return sign_of(a) * sign_of(b) * std::min(std::fabs(a), std::fabs(b));
}

// SC g node: a*(-1)^u_sum + b.
inline double g_node(double a, double b, std::uint8_t u_sum) {
    return (u_sum ? -a : a) + b;
}

// BP Type-I message: s * sign(in1)sign(in2+in3) * min(|in1|, |in2+in3|).
inline double msg_type1(double s, double in1, double in2, double in3) {
    const double sum = in2 + in3;
    return s * sign_of(in1) * sign_of(sum) * std::min(std::fabs(in1), std::fabs(sum));
}

// BP Type-II message: in1 + s * sign(in2)sign(in3) * min(|in2|, |in3|).
inline double msg_type2(double s, double in1, double in2, double in3) {
    return in1 + s * sign_of(in2) * sign_of(in3) * std::min(std::fabs(in2), std::fabs(in3));
}

inline double clamp_llr(double v, double bound) {
    return std::clamp(v, -bound, bound);
}

} // namespace polar
