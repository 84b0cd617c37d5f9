#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace farrell {

// Raised when an input tuple lies outside the cases the curated data can
// settle (as opposed to being malformed, which raises std::invalid_argument).
class unsupported_case : public std::runtime_error {
public:
    explicit unsupported_case(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long mod_reduce(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// Inverse of a modulo prime p, a != 0 (mod p).
inline long mod_inverse(long a, long p) {
    a = mod_reduce(a, p);
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

inline long ipow(long base, int exp) {
    long r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

inline long factorial(int n) {
    long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace farrell
