#pragma once

#include <string>

#include "tsg/types.hpp"

namespace tsg {

// (add, mul, zero) algebra the multiply and merge kernels are parameterized
// over. Plain function pointers keep a single CsrMatrix value type usable
// with any semiring selected at runtime.
struct Semiring {
    value_t (*add)(value_t, value_t);
    value_t (*mul)(value_t, value_t);
    value_t zero;
    const char* name;

    bool is_zero(value_t v) const { return v == zero; }
};

// (+, *, 0) over doubles.
const Semiring& arithmetic_semiring();

// (or, and, false) with values encoded as 0.0 / 1.0.
const Semiring& boolean_semiring();

// Accepts "arithmetic"/"arith"/"plus-times" and "boolean"/"bool"/"and-or".
// Throws std::invalid_argument on anything else.
const Semiring& semiring_by_name(const std::string& name);

} // namespace tsg
