#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinaltri {

/// Base of every domain error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A desk-scale guard tripped; raise SPINALTRI_MAX_DIM to lift it.
class ScaleError : public Error {
public:
    using Error::Error;
};

class DuplicatePoint : public Error {
public:
    DuplicatePoint(std::size_t first, std::size_t second)
        : Error("duplicate point: vertices " + std::to_string(first) + " and " + std::to_string(second) +
                " coincide"),
          first_(first),
          second_(second) {}
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class NotInConvexPosition : public Error {
public:
    explicit NotInConvexPosition(std::size_t index)
        : Error("point " + std::to_string(index) + " lies in the convex hull of the others"), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Raised when a structural guarantee that should hold for valid input fails.
/// Seeing one means a bug upstream, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace spinaltri
