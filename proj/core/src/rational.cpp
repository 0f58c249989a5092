#include <holoext/rational.hpp>

#include <sstream>

namespace holoext {

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact at every step
    }
    return r;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace holoext
