#pragma once

#include <stdexcept>
#include <string>

namespace fuss {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_part : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct certificate_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct branch_ambiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fuss
