#pragma once

#include <stdexcept>
#include <string>

#include "tsg/csr.hpp"

namespace tsg {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads a Matrix Market coordinate file. Supported qualifiers: real or
// pattern entries, general or symmetric storage. Symmetric inputs are
// expanded; pattern entries read as 1.0; indices convert to 0-based.
// Throws io_error on malformed headers, non-coordinate layouts, or indices
// outside the declared bounds.
CsrMatrix mm_read(const std::string& path);

// Writes canonical CSR as "coordinate real general" with 1-based indices
// and round-trip-exact value formatting, making mm_read(mm_write(m)) == m.
void mm_write(const std::string& path, const CsrMatrix& m);

} // namespace tsg
