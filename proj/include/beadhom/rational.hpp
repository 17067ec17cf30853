#pragma once

#include <gmpxx.h>
#include <string>

namespace beadhom {

// Exact rational scalar used throughout. GMP keeps elimination exact; no
// floating point appears anywhere in the library.
using Rat = mpq_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace beadhom
