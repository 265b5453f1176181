#pragma once

#include <gmpxx.h>

#include <string>

namespace qseries {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

} // namespace qseries
