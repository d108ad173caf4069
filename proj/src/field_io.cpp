#include "lielac/field_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lielac {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_sidecar_1d(const std::string& path, const Field1D& f) {
    nlohmann::json meta;
    meta["time"] = f.time;
    meta["periodic"] = f.periodic;
    meta["domain"] = {f.x_lo, f.x_hi()};
    meta["n"] = f.n();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << meta.dump(2) << "\n";
}

} // namespace

void write_field_csv(const std::string& path, const Field1D& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "x,u\n";
    for (int i = 0; i < f.n(); ++i) {
        out << fmt17(f.x(i)) << "," << fmt17(f.values[i]) << "\n";
    }
    write_sidecar_1d(path + ".meta.json", f);
}

void write_field_csv(const std::string& path, const Field2D& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "x,y,u\n";
    for (int ix = 0; ix < f.nx; ++ix) {
        for (int iy = 0; iy < f.ny; ++iy) {
            out << fmt17(f.x(ix)) << "," << fmt17(f.y(iy)) << "," << fmt17(f.at(ix, iy)) << "\n";
        }
    }
    nlohmann::json meta;
    meta["time"] = f.time;
    meta["periodic"] = f.periodic;
    meta["domain"] = {{0.0, 1.0}, {0.0, 1.0}};
    meta["nx"] = f.nx;
    meta["ny"] = f.ny;
    std::ofstream ms(path + ".meta.json");
    if (!ms) throw std::runtime_error("cannot open sidecar for " + path);
    ms << meta.dump(2) << "\n";
}

Field1D read_field1d_csv(const std::string& path) {
    std::ifstream meta_in(path + ".meta.json");
    if (!meta_in) throw std::runtime_error("cannot open sidecar for " + path);
    nlohmann::json meta = nlohmann::json::parse(meta_in);

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(in, line); // header
    Field1D f;
    f.time = meta.at("time").get<double>();
    f.periodic = meta.at("periodic").get<bool>();
    std::vector<double> xs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        xs.push_back(std::stod(line.substr(0, comma)));
        f.values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (xs.size() < 2) throw std::runtime_error("field csv too short: " + path);
    f.x_lo = xs.front();
    f.dx = xs[1] - xs[0];
    return f;
}

Field2D read_field2d_csv(const std::string& path) {
    std::ifstream meta_in(path + ".meta.json");
    if (!meta_in) throw std::runtime_error("cannot open sidecar for " + path);
    nlohmann::json meta = nlohmann::json::parse(meta_in);

    Field2D f = Field2D::zeros(meta.at("nx").get<int>(), meta.at("ny").get<int>(),
                               meta.at("time").get<double>());
    f.periodic = meta.at("periodic").get<bool>();

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(in, line); // header
    std::size_t idx = 0;
    while (std::getline(in, line) && idx < f.values.size()) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        f.values[idx++] = std::stod(line.substr(c2 + 1));
    }
    if (idx != f.values.size()) throw std::runtime_error("field csv truncated: " + path);
    return f;
}

} // namespace lielac
