#include "tsg/semiring.hpp"

#include <stdexcept>

namespace tsg {

namespace {

value_t plus_op(value_t a, value_t b) { return a + b; }
value_t times_op(value_t a, value_t b) { return a * b; }

value_t or_op(value_t a, value_t b) { return (a != 0.0 || b != 0.0) ? 1.0 : 0.0; }
value_t and_op(value_t a, value_t b) { return (a != 0.0 && b != 0.0) ? 1.0 : 0.0; }

} // namespace

const Semiring& arithmetic_semiring() {
    static const Semiring sr{plus_op, times_op, 0.0, "arithmetic"};
    return sr;
}

const Semiring& boolean_semiring() {
    static const Semiring sr{or_op, and_op, 0.0, "boolean"};
    return sr;
}

const Semiring& semiring_by_name(const std::string& name) {
    if (name == "arithmetic" || name == "arith" || name == "plus-times") {
        return arithmetic_semiring();
    }
    if (name == "boolean" || name == "bool" || name == "and-or") {
        return boolean_semiring();
    }
    throw std::invalid_argument("unknown semiring: " + name);
}

} // namespace tsg
