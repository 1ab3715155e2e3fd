#ifndef NODALKIT_ERRORS_HPP
#define NODALKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nodalkit {

// Thrown when an exact-arithmetic or enumeration budget would be exceeded.
// `required` carries the budget the caller would need to raise the cap to.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_(required) {}

    unsigned long long required() const { return required_; }

private:
    unsigned long long required_;
};

} // namespace nodalkit

#endif
