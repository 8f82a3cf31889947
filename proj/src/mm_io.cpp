#include "tsg/mm_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tsg {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

CsrMatrix mm_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw io_error(path + ": empty file");

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix") {
        throw io_error(path + ": malformed MatrixMarket header");
    }
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (format != "coordinate") throw io_error(path + ": only coordinate format is supported");
    if (field != "real" && field != "pattern") {
        throw io_error(path + ": unsupported field type '" + field + "'");
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw io_error(path + ": unsupported symmetry '" + symmetry + "'");
    }
    bool pattern = field == "pattern";
    bool symmetric = symmetry == "symmetric";

    do {
        if (!std::getline(in, line)) throw io_error(path + ": missing size line");
    } while (!line.empty() && line[0] == '%');

    index_t nrows = 0, ncols = 0, declared = 0;
    {
        std::istringstream sizes(line);
        if (!(sizes >> nrows >> ncols >> declared) || nrows < 0 || ncols < 0 || declared < 0) {
            throw io_error(path + ": malformed size line");
        }
    }

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(symmetric ? 2 * declared : declared));
    for (index_t k = 0; k < declared; ++k) {
        do {
            if (!std::getline(in, line)) throw io_error(path + ": unexpected end of file");
        } while (line.empty() || line[0] == '%');
        std::istringstream entry(line);
        index_t i = 0, j = 0;
        value_t v = 1.0;
        if (!(entry >> i >> j)) throw io_error(path + ": malformed entry line");
        if (!pattern && !(entry >> v)) throw io_error(path + ": entry missing value");
        if (i < 1 || i > nrows || j < 1 || j > ncols) {
            throw io_error(path + ": entry index outside declared bounds");
        }
        triplets.push_back({i - 1, j - 1, v});
        if (symmetric && i != j) triplets.push_back({j - 1, i - 1, v});
    }
    return csr_from_triplets(nrows, ncols, std::move(triplets), arithmetic_semiring());
}

void mm_write(const std::string& path, const CsrMatrix& m) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.nrows << ' ' << m.ncols << ' ' << m.nnz() << '\n';
    out << std::setprecision(17);
    for (index_t r = 0; r < m.nrows; ++r) {
        for (index_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
            out << (r + 1) << ' ' << (m.col_indices[k] + 1) << ' ' << m.values[k] << '\n';
        }
    }
    if (!out) throw io_error("write failed for " + path);
}

} // namespace tsg
