#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resdouble {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error("parse error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Malformed or inconsistent JSON input.
class InputError : public Error {
public:
    using Error::Error;
};

/// Rejected input germ: zero polynomial, origin not on the curve or not singular, repeated factor.
class GermError : public Error {
public:
    using Error::Error;
};

class InvalidDigraph : public Error {
public:
    using Error::Error;
};

/// A blowup center would have irrational coordinates; `factor()` is the offending polynomial.
class IrrationalCenter : public Error {
public:
    IrrationalCenter(std::string factor, int curve)
        : Error("blowup center at a root of " + factor + " on E_" + std::to_string(curve + 1) +
                " is not rational"),
          factor_(std::move(factor)), curve_(curve) {}
    const std::string& factor() const noexcept { return factor_; }
    int curve() const noexcept { return curve_; }

private:
    std::string factor_;
    int curve_;
};

class BlowupCapExceeded : public Error {
public:
    using Error::Error;
};

class CompletenessViolation : public Error {
public:
    using Error::Error;
};

class ParityViolation : public Error {
public:
    using Error::Error;
};

/// A lattice computation needs an unsplit component but F_i splits with gamma_i > 0.
class SplitAmbiguity : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class InternalDefect : public Error {
public:
    using Error::Error;
};

}  // namespace resdouble
