#include "flrcov/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace flrcov {

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p < end) {
            double v = 0.0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc())
                throw std::runtime_error("bad numeric field in " + path.string());
            row.push_back(v);
            p = next;
            if (p < end) {
                if (*p != ',')
                    throw std::runtime_error("expected comma in " + path.string());
                ++p;
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged rows in " + path.string());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty CSV file " + path.string());
    return rows;
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_surface_csv(const std::filesystem::path& path, const Surface& s) {
    write_matrix_csv(path, s.values);
}

Surface read_surface_csv(const std::filesystem::path& path) {
    Eigen::MatrixXd m = to_matrix(read_csv_rows(path));
    if (m.rows() != m.cols())
        throw std::runtime_error("surface CSV must be square: " + path.string());
    return Surface(Grid(static_cast<int>(m.rows())), std::move(m));
}

void write_sample_csv(const std::filesystem::path& path, const CurveSample& sample) {
    write_matrix_csv(path, sample.data);
}

CurveSample read_sample_csv(const std::filesystem::path& path) {
    Eigen::MatrixXd m = to_matrix(read_csv_rows(path));
    return CurveSample(Grid(static_cast<int>(m.cols())), std::move(m));
}

nlohmann::json kernel_to_json(const KernelSpec& k) {
    nlohmann::json j{{"name", k.name()}, {"l2_integral", k.l2_integral()}};
    j["order"] = k.finite_order() ? nlohmann::json(k.order()) : nlohmann::json("inf");
    j["support"] = k.compact_support() ? nlohmann::json(k.support_bound()) : nlohmann::json("inf");
    if (k.char_constant()) j["char_constant"] = *k.char_constant();
    if (k.family() == KernelFamily::FlatTop) {
        j["k1"] = k.k1();
        j["k2"] = k.k2();
    }
    return j;
}

nlohmann::json report_to_json(const BandwidthReport& r) {
    return nlohmann::json{
        {"h_opt_hat", r.h_opt_hat},
        {"c0_hat", r.c0_hat},
        {"pilot_norm_q", r.pilot_norm_q},
        {"pilot_norm_0", r.pilot_norm_0},
        {"pilot_trace", r.pilot_trace},
        {"h1", r.h1},
        {"pilot_kernel", kernel_to_json(r.pilot_kernel)},
        {"final_kernel", kernel_to_json(r.final_kernel)},
        {"floored", r.floored},
    };
}

nlohmann::json summary_to_json(const LossSummary& s) {
    return nlohmann::json{
        {"min", s.min},         {"q1", s.q1},
        {"median", s.median},   {"q3", s.q3},
        {"max", s.max},         {"mean_bandwidth", s.mean_bandwidth},
        {"reps", s.losses.size()},
    };
}

}  // namespace flrcov
