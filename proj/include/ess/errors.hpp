#ifndef ESS_ERRORS_HPP
#define ESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ess {

/// A checked mathematical property failed (operand is not a curvature, a
/// morphism is not full, pairs or forms disagree, ...). Expected at runtime;
/// the CLI maps it to exit code 1.
class MathFailure : public std::runtime_error {
public:
    MathFailure(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// An identity the theory guarantees failed to hold: a library bug, never a
/// data problem. The CLI maps it to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

} // namespace ess

#endif
