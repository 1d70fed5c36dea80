#include "catomo/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace catomo::io {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid_csv(const tomo::TomogramGrid& grid, std::ostream& os) {
    os << "# theta1, x1, omega\n";
    for (Eigen::Index j = 0; j < grid.theta_axis.size(); ++j) {
        for (Eigen::Index i = 0; i < grid.x_axis.size(); ++i) {
            os << fmt17(grid.theta_axis[j]) << ',' << fmt17(grid.x_axis[i]) << ','
               << fmt17(grid.values(i, j)) << '\n';
        }
    }
}

tomo::TomogramGrid read_grid_csv(std::istream& is) {
    std::vector<double> thetas, xs, values;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double t = 0.0, x = 0.0, v = 0.0;
        char comma1 = 0, comma2 = 0;
        if (!(row >> t >> comma1 >> x >> comma2 >> v) || comma1 != ',' || comma2 != ',') {
            throw std::runtime_error("read_grid_csv: malformed row: " + line);
        }
        thetas.push_back(t);
        xs.push_back(x);
        values.push_back(v);
    }
    if (values.empty()) throw std::runtime_error("read_grid_csv: no data rows");

    // Rows are theta-major: the x axis is the leading run of the x column.
    std::size_t nx = 1;
    while (nx < thetas.size() && thetas[nx] == thetas[0]) ++nx;
    if (values.size() % nx != 0) throw std::runtime_error("read_grid_csv: ragged grid");
    const std::size_t nt = values.size() / nx;

    tomo::TomogramGrid grid{RealVector(nt), RealVector(nx), RealMatrix(nx, nt),
                            tomo::CatSource(0.0, 0.0, 0), std::nullopt, false};
    for (std::size_t i = 0; i < nx; ++i) grid.x_axis[i] = xs[i];
    for (std::size_t j = 0; j < nt; ++j) {
        grid.theta_axis[j] = thetas[j * nx];
        for (std::size_t i = 0; i < nx; ++i) {
            if (thetas[j * nx + i] != grid.theta_axis[j] || xs[j * nx + i] != grid.x_axis[i]) {
                throw std::runtime_error("read_grid_csv: inconsistent axes");
            }
            grid.values(i, j) = values[j * nx + i];
        }
    }
    return grid;
}

void write_grid_pgm(const tomo::TomogramGrid& grid, std::ostream& os) {
    const Eigen::Index nx = grid.x_axis.size();
    const Eigen::Index nt = grid.theta_axis.size();
    const double max_value = grid.values.size() > 0 ? grid.values.maxCoeff() : 0.0;
    os << "P5\n" << nt << ' ' << nx << "\n255\n";
    // Top row is x_max, like a plot.
    for (Eigen::Index i = nx - 1; i >= 0; --i) {
        for (Eigen::Index j = 0; j < nt; ++j) {
            const double scaled = max_value > 0.0 ? grid.values(i, j) / max_value : 0.0;
            os.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * scaled))));
        }
    }
}

void write_qcurve_csv(const std::vector<analysis::QPoint>& curve, std::ostream& os) {
    os << "# phi, q\n";
    for (const analysis::QPoint& point : curve) {
        if (point.degenerate) continue;
        os << fmt17(point.phi) << ',' << fmt17(point.q) << '\n';
    }
}

}  // namespace catomo::io
