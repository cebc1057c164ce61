#pragma once

// Matrix files and result documents. The on-disk format is JSON with all
// reals printed to 17 significant digits, which round-trips doubles
// bitwise. Input files must contain Hermitian matrices; result documents
// additionally carry a (non-Hermitian) basis, a summary, and the
// verification report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acm/hermitian.hpp"
#include "acm/verify.hpp"

namespace acm {

struct NamedMatrix {
    std::string name;
    Matrix data;
};

struct MatrixFile {
    Index n = 0;
    std::vector<NamedMatrix> matrices;
};

struct ResultDocument {
    Index n = 0;
    std::vector<NamedMatrix> matrices;                        // approximants
    std::optional<NamedMatrix> basis;                         // unitary, optional
    std::vector<std::pair<std::string, std::string>> summary; // ordered, preformatted
    const VerificationReport* report = nullptr;
};

// 17-significant-digit decimal form of v; parses back to the same bits.
std::string format_double(double v);

// Throws file_error on unreadable, unparsable, or schema-violating input,
// including non-Hermitian matrices (checked within tol.herm(n)).
MatrixFile load_matrix_file(const std::string& path, const Tolerances& tol = {});

// Writers throw file_error when the file cannot be created and
// numeric_error on non-finite values.
void save_matrix_file(const std::string& path, const MatrixFile& file);
void save_result_file(const std::string& path, const ResultDocument& doc);

}  // namespace acm
