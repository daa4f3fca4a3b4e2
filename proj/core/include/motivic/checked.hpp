#ifndef MOTIVIC_CHECKED_HPP
#define MOTIVIC_CHECKED_HPP

#include <cstdint>

#include "error.hpp"

namespace motivic
{

// Overflow-checked 64-bit arithmetic. All exact computations in the engine
// go through these; intermediate values are tiny, so overflow means a bug
// or absurd input rather than a precision problem.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer multiplication");
  return r;
}

// Floor division (rounds towards negative infinity).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

} // namespace motivic

#endif // MOTIVIC_CHECKED_HPP
