#include "acm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>

#include "acm/generate.hpp"
#include "acm/matrix_io.hpp"
#include "acm/multi.hpp"

namespace acm {

namespace {

int map_exception(std::ostream& err) {
    try {
        throw;
    } catch (const file_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

std::string format_bool(bool b) { return b ? "1" : "0"; }

void check_basis_flag(const std::string& basis) {
    if (basis != "rotated" && basis != "original")
        throw domain_error("--basis must be 'rotated' or 'original'");
}

HermitianMatrix in_requested_basis(const HermitianMatrix& a, const UnitaryBasis& q,
                                   const std::string& basis) {
    return basis == "original" ? restore_basis(a, q) : a;
}

void write_report_text(const std::string& result_path, const VerificationReport& report) {
    const std::string path = result_path + ".report.txt";
    std::ofstream out(path);
    if (!out) throw file_error("cannot write file: " + path);
    out << to_text(report);
    out.flush();
    if (!out) throw file_error("write failed: " + path);
}

std::string wall_ms_field(double ms) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

std::string sweep_csv_header(int p) {
    std::string header = "trial,n,epsilon,p,delta";
    for (int i = 1; i <= p; ++i) header += ",err" + std::to_string(i);
    for (int i = 1; i <= p; ++i) header += ",bound" + std::to_string(i);
    header += ",guaranteed,wall_time_ms";
    return header;
}

int cmd_pair(const PairCmdOptions& options, std::ostream& out, std::ostream& err) {
    try {
        check_basis_flag(options.basis);
        MatrixFile file = load_matrix_file(options.input);
        if (file.matrices.size() < 2)
            throw file_error(options.input + ": a pair run needs at least 2 matrices");
        if (file.matrices.size() > 2)
            err << "note: using the first two of " << file.matrices.size() << " matrices\n";
        HermitianMatrix h1(file.matrices[0].data);
        HermitianMatrix h2(file.matrices[1].data);

        PairOptions popts;
        popts.force = options.force;
        popts.delta_floor = options.delta_floor;
        PairResult result = approximate_pair(h1, h2, popts);
        VerificationReport report = verify_pair(h1, h2, result, options.delta_floor);

        if (!options.output.empty()) {
            ResultDocument doc;
            doc.n = h1.n();
            doc.matrices = {
                {"approx1", in_requested_basis(result.approx1, result.basis, options.basis).data},
                {"approx2", in_requested_basis(result.approx2, result.basis, options.basis).data}};
            doc.basis = NamedMatrix{"basis", result.basis.q};
            doc.summary = {{"basis", options.basis == "original" ? "\"original\"" : "\"rotated\""},
                           {"delta", format_double(result.delta)},
                           {"err1", format_double(result.err1)},
                           {"bound1", format_double(result.bound1)},
                           {"err2", format_double(result.err2)},
                           {"bound2", format_double(result.bound2)},
                           {"guaranteed", result.guaranteed ? "true" : "false"}};
            doc.report = &report;
            save_result_file(options.output, doc);
            write_report_text(options.output, report);
        }

        out << "delta=" << format_double(result.delta) << " err1=" << format_double(result.err1)
            << " bound1=" << format_double(result.bound1) << " err2=" << format_double(result.err2)
            << " bound2=" << format_double(result.bound2)
            << " guaranteed=" << format_bool(result.guaranteed) << "\n";
        return report.overall ? 0 : 1;
    } catch (...) {
        return map_exception(err);
    }
}

int cmd_family(const FamilyCmdOptions& options, std::ostream& out, std::ostream& err) {
    try {
        check_basis_flag(options.basis);
        MatrixFile file = load_matrix_file(options.input);
        if (file.matrices.size() < 2)
            throw file_error(options.input + ": a family run needs at least 2 matrices");
        if (file.matrices.size() == 2) {
            PairCmdOptions pair_options;
            pair_options.input = options.input;
            pair_options.output = options.output;
            pair_options.basis = options.basis;
            pair_options.force = options.force;
            pair_options.delta_floor = options.delta_floor;
            return cmd_pair(pair_options, out, err);
        }

        std::vector<HermitianMatrix> family;
        family.reserve(file.matrices.size());
        for (const auto& nm : file.matrices) family.emplace_back(nm.data);

        MultiOptions mopts;
        mopts.force = options.force;
        mopts.analytic = options.analytic;
        mopts.delta_floor = options.delta_floor;
        MultiResult result = approximate_family(family, mopts);
        VerificationReport report = verify_family(family, result, options.delta_floor);
        const int p = static_cast<int>(family.size());

        if (!options.output.empty()) {
            ResultDocument doc;
            doc.n = family[0].n();
            for (int i = 0; i < p; ++i)
                doc.matrices.push_back(
                    {"approx" + std::to_string(i + 1),
                     in_requested_basis(result.approx[static_cast<size_t>(i)], result.basis,
                                        options.basis)
                         .data});
            doc.basis = NamedMatrix{"basis", result.basis.q};
            doc.summary = {{"basis", options.basis == "original" ? "\"original\"" : "\"rotated\""},
                           {"delta", format_double(result.input_delta)},
                           {"p", std::to_string(p)}};
            for (int i = 0; i < p; ++i)
                doc.summary.push_back({"err" + std::to_string(i + 1),
                                       format_double(result.errs[static_cast<size_t>(i)])});
            doc.summary.push_back({"bound", format_double(result.bound)});
            doc.summary.push_back({"gamma", format_double(result.gamma)});
            doc.summary.push_back({"guaranteed", result.guaranteed ? "true" : "false"});
            doc.report = &report;
            save_result_file(options.output, doc);
            write_report_text(options.output, report);
        }

        out << "delta=" << format_double(result.input_delta) << " p=" << p;
        for (int i = 0; i < p; ++i)
            out << " err" << (i + 1) << "=" << format_double(result.errs[static_cast<size_t>(i)]);
        out << " bound=" << format_double(result.bound)
            << " gamma=" << format_double(result.gamma)
            << " guaranteed=" << format_bool(result.guaranteed) << "\n";
        return report.overall ? 0 : 1;
    } catch (...) {
        return map_exception(err);
    }
}

int cmd_sweep(const SweepCmdOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.n_list.empty() || options.epsilons.empty())
            throw domain_error("sweep requires at least one n and one epsilon");
        if (options.p < 2) throw domain_error("sweep requires p >= 2");
        if (options.trials < 1) throw domain_error("sweep requires trials >= 1");
        if (options.output.empty()) throw domain_error("sweep requires an output path");

        std::vector<long long> ns = options.n_list;
        std::vector<double> epsilons = options.epsilons;
        std::sort(ns.begin(), ns.end());
        std::sort(epsilons.begin(), epsilons.end());

        std::ofstream csv(options.output);
        if (!csv) throw file_error("cannot write file: " + options.output);
        csv << sweep_csv_header(options.p) << "\n";

        MultiOptions mopts;
        mopts.force = options.force;
        mopts.analytic = options.analytic;
        mopts.delta_floor = options.delta_floor;

        long long failures = 0;
        long long rows = 0;
        for (size_t ni = 0; ni < ns.size(); ++ni) {
            for (size_t ei = 0; ei < epsilons.size(); ++ei) {
                for (int trial = 0; trial < options.trials; ++trial) {
                    const std::uint64_t stream =
                        (static_cast<std::uint64_t>(ni) * 1000003ULL +
                         static_cast<std::uint64_t>(ei)) *
                            1000003ULL +
                        static_cast<std::uint64_t>(trial);
                    const std::uint64_t trial_seed = derive_seed(options.seed, stream);
                    std::vector<HermitianMatrix> family = generate_family(
                        static_cast<Index>(ns[ni]), options.p, epsilons[ei], trial_seed);

                    const auto t0 = std::chrono::steady_clock::now();
                    MultiResult result = approximate_family(family, mopts);
                    const auto t1 = std::chrono::steady_clock::now();
                    const double wall_ms =
                        std::chrono::duration<double, std::milli>(t1 - t0).count();

                    VerificationReport report =
                        verify_family(family, result, options.delta_floor);
                    if (!report.overall) {
                        ++failures;
                        err << "verification failed: trial=" << trial << " n=" << ns[ni]
                            << " epsilon=" << format_double(epsilons[ei]) << "\n";
                    }

                    csv << trial << "," << ns[ni] << "," << format_double(epsilons[ei]) << ","
                        << options.p << "," << format_double(result.input_delta);
                    for (double e : result.errs) csv << "," << format_double(e);
                    for (double b : result.op_bounds) csv << "," << format_double(b);
                    csv << "," << format_bool(result.guaranteed) << "," << wall_ms_field(wall_ms)
                        << "\n";
                    ++rows;
                }
            }
        }
        csv.flush();
        if (!csv) throw file_error("write failed: " + options.output);
        out << "rows=" << rows << " failures=" << failures << " output=" << options.output
            << "\n";
        return failures == 0 ? 0 : 1;
    } catch (...) {
        return map_exception(err);
    }
}

int cmd_gen(const GenCmdOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.output.empty()) throw domain_error("gen requires an output path");
        std::vector<HermitianMatrix> family =
            generate_family(static_cast<Index>(options.n), options.p, options.epsilon,
                            options.seed);
        MatrixFile file;
        file.n = static_cast<Index>(options.n);
        for (size_t i = 0; i < family.size(); ++i)
            file.matrices.push_back({"H" + std::to_string(i + 1), family[i].data});
        save_matrix_file(options.output, file);
        out << "n=" << options.n << " p=" << options.p
            << " epsilon=" << format_double(options.epsilon) << " seed=" << options.seed
            << " output=" << options.output << "\n";
        return 0;
    } catch (...) {
        return map_exception(err);
    }
}

}  // namespace acm
