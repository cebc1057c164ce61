#include "acm/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acm {

namespace {

using nlohmann::json;

void write_entries(std::ostream& out, const Matrix& m, const std::string& indent) {
    out << "[";
    for (Index i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "\n" : ",\n") << indent << "  [";
        for (Index j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw numeric_error("refusing to serialize a non-finite entry");
            out << (j == 0 ? "" : ", ") << "[" << format_double(v.real()) << ", "
                << format_double(v.imag()) << "]";
        }
        out << "]";
    }
    out << "\n" << indent << "]";
}

void write_named_matrix(std::ostream& out, const NamedMatrix& nm, const std::string& indent) {
    out << indent << "{\"name\": " << json(nm.name).dump() << ", \"entries\": ";
    write_entries(out, nm.data, indent);
    out << "}";
}

void write_matrix_list(std::ostream& out, const std::vector<NamedMatrix>& matrices) {
    out << "  \"matrices\": [";
    for (size_t i = 0; i < matrices.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n");
        write_named_matrix(out, matrices[i], "    ");
    }
    out << "\n  ]";
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw file_error("cannot write file: " + path);
    return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw file_error("write failed: " + path);
}

Matrix parse_entries(const json& entries, Index n, const std::string& name) {
    if (!entries.is_array() || static_cast<Index>(entries.size()) != n)
        throw file_error("matrix '" + name + "' does not have " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n)
            throw file_error("matrix '" + name + "' row " + std::to_string(i) +
                             " does not have " + std::to_string(n) + " entries");
        for (Index j = 0; j < n; ++j) {
            const json& cell = row[static_cast<size_t>(j)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw file_error("matrix '" + name + "' entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not a [re, im] pair");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw file_error("matrix '" + name + "' contains a non-finite entry");
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

MatrixFile load_matrix_file(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw file_error("cannot parse " + path + ": " + e.what());
    }

    if (!doc.is_object() || !doc.contains("n") || !doc.contains("matrices"))
        throw file_error(path + ": expected an object with 'n' and 'matrices'");
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1)
        throw file_error(path + ": 'n' must be a positive integer");
    MatrixFile file;
    file.n = static_cast<Index>(doc["n"].get<std::int64_t>());

    const json& matrices = doc["matrices"];
    if (!matrices.is_array() || matrices.empty())
        throw file_error(path + ": 'matrices' must be a nonempty list");
    for (const json& entry : matrices) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
            !entry.contains("entries"))
            throw file_error(path + ": each matrix needs 'name' and 'entries'");
        NamedMatrix nm{entry["name"].get<std::string>(),
                       parse_entries(entry["entries"], file.n, entry["name"].get<std::string>())};
        if (!HermitianMatrix(nm.data).is_hermitian(tol.herm(file.n)))
            throw file_error(path + ": matrix '" + nm.name + "' is not Hermitian");
        file.matrices.push_back(std::move(nm));
    }
    return file;
}

void save_matrix_file(const std::string& path, const MatrixFile& file) {
    std::ofstream out = open_for_write(path);
    out << "{\n  \"n\": " << file.n << ",\n";
    write_matrix_list(out, file.matrices);
    out << "\n}\n";
    finish_write(out, path);
}

void save_result_file(const std::string& path, const ResultDocument& doc) {
    std::ofstream out = open_for_write(path);
    out << "{\n  \"n\": " << doc.n << ",\n";
    write_matrix_list(out, doc.matrices);
    if (doc.basis) {
        out << ",\n  \"basis\": ";
        write_named_matrix(out, *doc.basis, "  ");
    }
    if (!doc.summary.empty()) {
        out << ",\n  \"summary\": {";
        for (size_t i = 0; i < doc.summary.size(); ++i)
            out << (i == 0 ? "\n" : ",\n") << "    " << json(doc.summary[i].first).dump()
                << ": " << doc.summary[i].second;
        out << "\n  }";
    }
    if (doc.report) {
        out << ",\n  \"report\": {\n    \"overall\": "
            << (doc.report->overall ? "true" : "false") << ",\n    \"checks\": [";
        for (size_t i = 0; i < doc.report->checks.size(); ++i) {
            const CheckResult& c = doc.report->checks[i];
            out << (i == 0 ? "\n" : ",\n") << "      {\"name\": " << json(c.name).dump()
                << ", \"claimed\": " << format_double(c.claimed)
                << ", \"measured\": " << format_double(c.measured)
                << ", \"tolerance\": " << format_double(c.tolerance)
                << ", \"passed\": " << (c.passed ? "true" : "false")
                << ", \"applicable\": " << (c.applicable ? "true" : "false") << "}";
        }
        out << "\n    ]\n  }";
    }
    out << "\n}\n";
    finish_write(out, path);
}

}  // namespace acm
