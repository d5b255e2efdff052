#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

// Thrown when an evaluator cannot certify its accuracy target. Carries the
// estimated error so callers can decide whether to degrade gracefully.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double estimated)
        : std::runtime_error(what), estimated_abs_error(estimated) {}
    double estimated_abs_error;
};

// Thrown by the plain-series oracle when the requested truncation point sits
// in the growing part of the term sequence, i.e. the partial sum is garbage.
class divergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fracwave
