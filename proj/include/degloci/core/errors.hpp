#pragma once

#include <stdexcept>
#include <string>

namespace degloci
{

// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class variable_mismatch : public error
{
public:
    using error::error;
};

class truncation_mismatch : public error
{
public:
    using error::error;
};

// An exact division left a nonzero remainder. Inside the class computations
// this always means a formula was mistranscribed or a routine is buggy, so it
// is never caught and retried.
class nonexact_division : public error
{
public:
    using error::error;
};

class not_symmetric : public error
{
public:
    using error::error;
};

class invalid_orbit : public error
{
public:
    using error::error;
};

class out_of_scope : public error
{
public:
    using error::error;
};

class unmapped_variable : public error
{
public:
    using error::error;
};

class degree_overflow : public error
{
public:
    using error::error;
};

class internal_error : public error
{
public:
    using error::error;
};

} // namespace degloci
