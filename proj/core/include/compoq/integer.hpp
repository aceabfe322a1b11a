#ifndef COMPOQ_INTEGER_HPP
#define COMPOQ_INTEGER_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace compoq {

/// Exact arbitrary-precision integer used for every coefficient and count.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// (-1)^e for any integer e.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace compoq

#endif
