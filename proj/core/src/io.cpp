#include "svtail/io.hpp"

#include <cmath>
#include <cstdio>
#include <charconv>

#include "svtail/errors.hpp"

namespace svtail {

std::string format_g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

double parse_double(std::string_view text, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidGridError(std::string("t grid: cannot parse ") + what + " from '" +
                               std::string(text) + "'");
    }
    return value;
}

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

void write_json_array(std::ostream& os, const std::vector<double>& values) {
    os << '[';
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ',';
        os << format_g17(values[i]);
    }
    os << ']';
}

}  // namespace

std::vector<double> parse_t_grid(std::string_view text) {
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos) {
        const size_t first = text.find(':');
        const size_t second = text.find(':', first + 1);
        if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
            throw InvalidGridError("t grid: expected start:stop:step, got '" + std::string(text) +
                                   "'");
        }
        const double start = parse_double(text.substr(0, first), "start");
        const double stop = parse_double(text.substr(first + 1, second - first - 1), "stop");
        const double step = parse_double(text.substr(second + 1), "step");
        if (!(step > 0.0)) throw InvalidGridError("t grid: step must be positive");
        if (stop < start) throw InvalidGridError("t grid: stop must be >= start");
        for (long k = 0;; ++k) {
            const double value = start + static_cast<double>(k) * step;
            if (!(value < stop + 0.5 * step)) break;
            grid.push_back(value);
        }
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            const size_t comma = text.find(',', pos);
            const std::string_view item =
                text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - pos);
            grid.push_back(parse_double(item, "value"));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    if (grid.empty()) throw InvalidGridError("t grid is empty");
    for (size_t j = 0; j < grid.size(); ++j) {
        if (!std::isfinite(grid[j]) || grid[j] < 0.0) {
            throw InvalidGridError("t grid values must be finite and nonnegative");
        }
        if (j > 0 && grid[j] <= grid[j - 1]) {
            throw InvalidGridError("t grid must be strictly ascending");
        }
    }
    return grid;
}

void write_tail_curve_csv(std::ostream& os, const TailCurve& curve) {
    os << "t";
    for (const auto& [tag, logs] : curve.bound_logs) os << ',' << to_string(tag) << "_log10_bound";
    os << ",empirical_p,ci_low,ci_high,n_trials\n";
    const double ln10 = std::log(10.0);
    for (size_t j = 0; j < curve.t_grid.size(); ++j) {
        os << format_g17(curve.t_grid[j]);
        for (const auto& [tag, logs] : curve.bound_logs) os << ',' << format_g17(logs[j] / ln10);
        os << ',' << format_g17(curve.empirical_p(j)) << ',' << format_g17(curve.ci_low[j]) << ','
           << format_g17(curve.ci_high[j]) << ',' << curve.n_trials << '\n';
    }
}

void write_tail_curve_json(std::ostream& os, const TailCurve& curve) {
    const double ln10 = std::log(10.0);
    os << "{\n";
    os << "  \"ensemble\": \"" << json_escape(curve.spec.label()) << "\",\n";
    os << "  \"seed\": " << curve.master_seed << ",\n";
    os << "  \"n_trials\": " << curve.n_trials << ",\n";
    os << "  \"confidence\": " << format_g17(curve.confidence) << ",\n";
    os << "  \"t\": ";
    write_json_array(os, curve.t_grid);
    os << ",\n";
    for (const auto& [tag, logs] : curve.bound_logs) {
        std::vector<double> log10s(logs.size());
        for (size_t j = 0; j < logs.size(); ++j) log10s[j] = logs[j] / ln10;
        os << "  \"" << to_string(tag) << "_log10_bound\": ";
        write_json_array(os, log10s);
        os << ",\n";
    }
    std::vector<double> empirical(curve.t_grid.size());
    for (size_t j = 0; j < empirical.size(); ++j) empirical[j] = curve.empirical_p(j);
    os << "  \"empirical_p\": ";
    write_json_array(os, empirical);
    os << ",\n  \"ci_low\": ";
    write_json_array(os, curve.ci_low);
    os << ",\n  \"ci_high\": ";
    write_json_array(os, curve.ci_high);
    os << "\n}\n";
}

void write_report_text(std::ostream& os, const VerificationReport& report) {
    os << "verification report: " << report.ensemble_label << '\n';
    os << "seed = " << report.master_seed << ", trials = " << report.n_trials
       << ", confidence = " << format_g17(report.confidence)
       << ", wall_seconds = " << format_g17(report.wall_seconds) << '\n';
    for (const auto& note : report.notes) os << "note: " << note << '\n';
    long failures = 0;
    for (const auto& cell : report.cells) {
        if (!cell.pass) ++failures;
        os << (cell.pass ? "PASS" : "FAIL") << ' ' << to_string(cell.tag)
           << " t=" << format_g17(cell.t) << " bound=" << format_g17(cell.bound_probability)
           << " ci_low=" << format_g17(cell.ci_low) << '\n';
    }
    os << "tightest margin = " << format_g17(report.tightest_margin) << " at "
       << to_string(report.tightest_tag) << " t=" << format_g17(report.tightest_t) << '\n';
    os << "cells = " << report.cells.size() << ", failures = " << failures << '\n';
    os << "verdict = " << (report.all_pass ? "pass" : "fail") << '\n';
}

void write_report_json(std::ostream& os, const VerificationReport& report) {
    os << "{\n";
    os << "  \"verdict\": \"" << (report.all_pass ? "pass" : "fail") << "\",\n";
    os << "  \"ensemble\": \"" << json_escape(report.ensemble_label) << "\",\n";
    os << "  \"seed\": " << report.master_seed << ",\n";
    os << "  \"n_trials\": " << report.n_trials << ",\n";
    os << "  \"confidence\": " << format_g17(report.confidence) << ",\n";
    os << "  \"wall_seconds\": " << format_g17(report.wall_seconds) << ",\n";
    os << "  \"tightest\": {\"tag\": \"" << to_string(report.tightest_tag)
       << "\", \"t\": " << format_g17(report.tightest_t)
       << ", \"margin\": " << format_g17(report.tightest_margin) << "},\n";
    os << "  \"notes\": [";
    for (size_t i = 0; i < report.notes.size(); ++i) {
        if (i > 0) os << ", ";
        os << '"' << json_escape(report.notes[i]) << '"';
    }
    os << "],\n";
    os << "  \"cells\": [\n";
    for (size_t i = 0; i < report.cells.size(); ++i) {
        const auto& cell = report.cells[i];
        os << "    {\"tag\": \"" << to_string(cell.tag) << "\", \"t\": " << format_g17(cell.t)
           << ", \"bound\": " << format_g17(cell.bound_probability)
           << ", \"ci_low\": " << format_g17(cell.ci_low) << ", \"pass\": "
           << (cell.pass ? "true" : "false") << '}' << (i + 1 < report.cells.size() ? "," : "")
           << '\n';
    }
    os << "  ]\n}\n";
}

}  // namespace svtail
