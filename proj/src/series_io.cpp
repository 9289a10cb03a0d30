#include "inls/series_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace inls {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

void write_series_csv(const std::filesystem::path& path, const TimeSeries& s) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << "t,mass,kinetic,G,energy,variance,weighted_norm_sq,pc_quantity";
    for (const auto& label : s.q_labels) f << ",lq_" << label;
    f << "\n";
    for (const auto& smp : s.samples) {
        f << fmt17(smp.t) << ',' << fmt17(smp.mass) << ',' << fmt17(smp.kinetic) << ','
          << fmt17(smp.G) << ',' << fmt17(smp.energy) << ',' << fmt17(smp.variance) << ','
          << fmt17(smp.weighted_norm_sq) << ',' << fmt17(smp.pc_quantity);
        for (double v : smp.lq) f << ',' << fmt17(v);
        f << "\n";
    }
}

TimeSeries read_series_csv(const std::filesystem::path& path, const ProblemParams& params) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open " + path.string());
    std::string line;
    if (!std::getline(f, line)) throw SchemaError("empty CSV");
    auto header = split_csv_line(line);
    const std::vector<std::string> fixed = {"t",      "mass",     "kinetic",
                                            "G",      "energy",   "variance",
                                            "weighted_norm_sq", "pc_quantity"};
    if (header.size() < fixed.size()) throw SchemaError("missing columns in series CSV");
    for (std::size_t i = 0; i < fixed.size(); ++i)
        if (header[i] != fixed[i])
            throw SchemaError("unexpected column '" + header[i] + "' (want '" + fixed[i] + "')");

    TimeSeries s;
    s.params = params;
    for (std::size_t i = fixed.size(); i < header.size(); ++i) {
        if (header[i].rfind("lq_", 0) != 0)
            throw SchemaError("unexpected trailing column '" + header[i] + "'");
        std::string label = header[i].substr(3);
        s.q_labels.push_back(label);
        s.q_values.push_back(Rat::parse(label).to_double());
    }
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size()) throw SchemaError("row width mismatch");
        ObservableSample smp;
        try {
            smp.t = std::stod(cells[0]);
            smp.mass = std::stod(cells[1]);
            smp.kinetic = std::stod(cells[2]);
            smp.G = std::stod(cells[3]);
            smp.energy = std::stod(cells[4]);
            smp.variance = std::stod(cells[5]);
            smp.weighted_norm_sq = std::stod(cells[6]);
            smp.pc_quantity = std::stod(cells[7]);
            for (std::size_t i = 8; i < cells.size(); ++i) smp.lq.push_back(std::stod(cells[i]));
        } catch (const std::logic_error&) {
            throw SchemaError("non-numeric cell in series CSV");
        }
        smp.h1_norm = std::sqrt(smp.mass + smp.kinetic);
        s.samples.push_back(std::move(smp));
    }
    if (s.samples.empty()) throw SchemaError("series CSV has no rows");
    s.initial_weighted = s.samples.front().weighted_norm_sq;
    return s;
}

void write_field(const std::filesystem::path& path, const ComplexField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    const Grid& g = *f.grid;
    std::uint64_t d = static_cast<std::uint64_t>(g.dim());
    std::uint64_t n = static_cast<std::uint64_t>(g.n());
    double L = g.extent();
    out.write(reinterpret_cast<const char*>(&d), 8);
    out.write(reinterpret_cast<const char*>(&n), 8);
    out.write(reinterpret_cast<const char*>(&L), 8);
    for (const auto& z : f.values) {
        double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), 8);
        out.write(reinterpret_cast<const char*>(&im), 8);
    }
}

ComplexField read_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path.string());
    std::uint64_t d = 0, n = 0;
    double L = 0;
    in.read(reinterpret_cast<char*>(&d), 8);
    in.read(reinterpret_cast<char*>(&n), 8);
    in.read(reinterpret_cast<char*>(&L), 8);
    if (!in || d < 1 || d > 3) throw SchemaError("bad field header in " + path.string());
    auto grid = std::make_shared<const Grid>(static_cast<int>(d), L, static_cast<int>(n));
    ComplexField f = ComplexField::zero(grid);
    for (auto& z : f.values) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        z = {re, im};
    }
    if (!in) throw SchemaError("truncated field file " + path.string());
    return f;
}

}  // namespace inls
