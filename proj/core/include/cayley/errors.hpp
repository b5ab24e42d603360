#pragma once

#include <stdexcept>

namespace cayley {

// An identity that holds for every valid input failed to hold.  Reaching this
// means a bug in the library, never bad user data.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input is valid mathematics but outside the ranges this build is sized for.
class scale_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cayley
