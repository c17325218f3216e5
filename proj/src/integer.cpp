#include "bu/integer.hpp"

#include "bu/errors.hpp"

#include <limits>
#include <string>

namespace bu {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidInput("negative exponent " + std::to_string(exp));
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && (result > std::numeric_limits<std::int64_t>::max() / base ||
                      result < std::numeric_limits<std::int64_t>::min() / base)) {
      throw InvalidInput(std::to_string(base) + "^" + std::to_string(exp) +
                         " overflows 64-bit range");
    }
    result *= base;
  }
  return result;
}

int valuation(std::int64_t value, std::int64_t p) {
  if (value == 0) throw InvalidInput("valuation of zero");
  int v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

int valuation(const Integer& value, std::int64_t p) {
  if (value == 0) throw InvalidInput("valuation of zero");
  Integer rest = value;
  int v = 0;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  return v;
}

}  // namespace bu
