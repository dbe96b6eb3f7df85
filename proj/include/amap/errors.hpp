#ifndef AMAP_ERRORS_HPP
#define AMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amap {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/* Bad value handed to an operation: zero ideal, non-monotone sequence, ... */
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

/* mult_order on an element that is not a unit modulo the ideal. */
class NotCoprime : public Error
{
  public:
    using Error::Error;
};

class SizeLimitExceeded : public Error
{
  public:
    using Error::Error;
};

class ParseError : public Error
{
  public:
    using Error::Error;
};

/* Broken invariant inside the library; never expected on valid input. */
class InternalError : public Error
{
  public:
    using Error::Error;
};

} // namespace amap

#endif
