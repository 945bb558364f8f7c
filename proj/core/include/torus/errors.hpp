#pragma once

#include <stdexcept>
#include <string>

namespace torus {

/// A value lies outside its declared domain (e.g. a row code >= 2^n).
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A request exceeds the memory budget or the 63-bit index space.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace torus
