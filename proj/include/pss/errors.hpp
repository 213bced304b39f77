#pragma once

#include <stdexcept>
#include <string>

namespace pss {

/// Incompatible tensor shapes. The message names both shapes.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Out-of-range (or duplicated) gather/label index.
class IndexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation's contract was violated (non-scalar loss, rho out of range, ...).
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration: unknown key, bad value, cross-field violation.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File I/O or on-disk format failure. The message names the file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Training diverged (non-finite loss). The message names iteration and rho.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pss
