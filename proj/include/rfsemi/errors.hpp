#pragma once

#include <stdexcept>
#include <string>

namespace rfsemi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("generator list is empty") {}
};

struct NotCofinite : Error {
    NotCofinite() : Error("gcd of generators is not 1; complement is infinite") {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct NotPseudoFrobenius : Error {
    NotPseudoFrobenius() : Error("value is not a pseudo-Frobenius number of the semigroup") {}
};

struct NotAlmostSymmetric : Error {
    NotAlmostSymmetric() : Error("semigroup is not almost symmetric") {}
};

struct OrderMismatch : Error {
    OrderMismatch() : Error("matrices have different orders") {}
};

struct OrderOutOfRange : Error {
    explicit OrderOutOfRange(const std::string& what) : Error(what) {}
};

struct CheckpointMismatch : Error {
    explicit CheckpointMismatch(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace rfsemi
