#include "holex/grid_function.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "holex/quadrature.hpp"

namespace holex {

namespace {

constexpr double kMergeTol = 1e-12;

std::vector<double> collect_axis(const std::vector<std::array<double, 5>>& rows, int col) {
    std::vector<double> vals;
    vals.reserve(rows.size());
    for (const auto& r : rows) vals.push_back(r[static_cast<size_t>(col)]);
    std::sort(vals.begin(), vals.end());
    std::vector<double> uniq;
    for (double v : vals)
        if (uniq.empty() || v - uniq.back() > kMergeTol) uniq.push_back(v);
    return uniq;
}

size_t locate(const std::vector<double>& axis, double v, const char* what) {
    const auto it = std::lower_bound(axis.begin(), axis.end(), v - kMergeTol);
    if (it == axis.end() || std::abs(*it - v) > kMergeTol)
        throw std::invalid_argument(std::string("grid: value off the ") + what + " axis");
    return static_cast<size_t>(it - axis.begin());
}

}  // namespace

BoundaryGrid parse_rows(std::vector<std::array<double, 5>> rows) {
    if (rows.empty()) throw std::invalid_argument("grid: no data rows");

    BoundaryGrid g;
    g.xs_ = collect_axis(rows, 0);
    g.ys_ = collect_axis(rows, 1);
    const std::vector<double> thetas = collect_axis(rows, 2);
    g.n_theta_ = static_cast<int>(thetas.size());
    if (g.n_theta_ < 4) throw std::invalid_argument("grid: need at least 4 theta nodes");

    // theta grid must be uniform over a full period
    const double step = 2.0 * std::numbers::pi / g.n_theta_;
    for (int j = 0; j < g.n_theta_; ++j)
        if (std::abs(thetas[static_cast<size_t>(j)] - thetas[0] - step * j) > 1e-9)
            throw std::invalid_argument("grid: theta nodes must be uniform over [0, 2pi)");

    std::vector<std::vector<cplx>> values(g.xs_.size() * g.ys_.size());
    std::vector<int> fill(values.size(), 0);
    for (const auto& r : rows) {
        const size_t ix = locate(g.xs_, r[0], "x");
        const size_t iy = locate(g.ys_, r[1], "y");
        if (r[0] * r[0] + r[1] * r[1] > 1.0 + 1e-9)
            throw std::invalid_argument("grid: (x, y) outside the closed unit disc");
        auto& cell = values[g.node_index(ix, iy)];
        if (cell.empty()) cell.resize(static_cast<size_t>(g.n_theta_));
        const size_t it = locate(thetas, r[2], "theta");
        cell[it] = {r[3], r[4]};
        ++fill[g.node_index(ix, iy)];
    }
    for (size_t i = 0; i < values.size(); ++i)
        if (!values[i].empty() && fill[i] != g.n_theta_)
            throw std::invalid_argument(
                "grid: every sampled (x, y) node needs one row per theta node");
    g.finalize(std::move(values));
    return g;
}

void BoundaryGrid::finalize(std::vector<std::vector<cplx>> raw_values) {
    const Quadrature quad(n_theta_);
    coeffs_.resize(raw_values.size());
    present_.assign(raw_values.size(), 0);
    for (size_t i = 0; i < raw_values.size(); ++i) {
        if (raw_values[i].empty()) continue;
        present_[i] = 1;
        std::vector<cplx> c(static_cast<size_t>(n_theta_));
        for (int m = -n_theta_ / 2; m < n_theta_ - n_theta_ / 2; ++m)
            c[static_cast<size_t>(m + n_theta_ / 2)] = quad.coefficient(raw_values[i], m);
        coeffs_[i] = std::move(c);
    }
}

BoundaryGrid BoundaryGrid::read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("grid: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("grid: empty file");
    auto strip = [](std::string s) {
        s.erase(std::remove_if(s.begin(), s.end(),
                               [](unsigned char c) { return std::isspace(c) != 0; }),
                s.end());
        return s;
    };
    if (strip(line) != "x,y,theta,re_f,im_f")
        throw std::invalid_argument("grid: CSV header must be 'x,y,theta,re_f,im_f'");
    std::vector<std::array<double, 5>> rows;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        std::array<double, 5> r{};
        std::istringstream ss(line);
        std::string tok;
        for (int k = 0; k < 5; ++k) {
            if (!std::getline(ss, tok, ',')) throw std::invalid_argument("grid: short CSV row");
            r[static_cast<size_t>(k)] = std::stod(tok);
        }
        rows.push_back(r);
    }
    return parse_rows(std::move(rows));
}

BoundaryGrid BoundaryGrid::read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("grid: cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("grid: JSON must be an array of row objects");
    std::vector<std::array<double, 5>> rows;
    rows.reserve(j.size());
    for (const auto& item : j) {
        rows.push_back({item.at("x").get<double>(), item.at("y").get<double>(),
                        item.at("theta").get<double>(), item.at("re_f").get<double>(),
                        item.at("im_f").get<double>()});
    }
    return parse_rows(std::move(rows));
}

BoundaryGrid BoundaryGrid::read_file(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_json(path);
    return read_csv(path);
}

BoundaryGrid BoundaryGrid::sample(const BoundaryFunction& f, int nxy, int ntheta) {
    if (nxy < 2 || ntheta < 4) throw std::invalid_argument("grid: sampling too coarse");
    std::vector<std::array<double, 5>> rows;
    const Quadrature quad(ntheta);
    const double step = 2.0 * std::numbers::pi / ntheta;
    for (int ix = 0; ix < nxy; ++ix) {
        const double x = -1.0 + 2.0 * ix / (nxy - 1);
        for (int iy = 0; iy < nxy; ++iy) {
            const double y = -1.0 + 2.0 * iy / (nxy - 1);
            const double r2 = x * x + y * y;
            if (r2 > 1.0) continue;
            const double rho = std::sqrt(std::max(0.0, 1.0 - r2));
            for (int it = 0; it < ntheta; ++it) {
                const cplx w = rho * quad.nodes()[static_cast<size_t>(it)];
                const cplx v = f({x, y}, w);
                rows.push_back({x, y, step * it, v.real(), v.imag()});
            }
        }
    }
    return parse_rows(std::move(rows));
}

void BoundaryGrid::write_csv(const std::string& path) const {
    // Reconstructs theta samples from the stored coefficients.
    std::ofstream out(path);
    if (!out) throw std::runtime_error("grid: cannot write " + path);
    out << "x,y,theta,re_f,im_f\n";
    const Quadrature quad(n_theta_);
    const double step = 2.0 * std::numbers::pi / n_theta_;
    char buf[512];
    for (size_t ix = 0; ix < xs_.size(); ++ix) {
        for (size_t iy = 0; iy < ys_.size(); ++iy) {
            const size_t idx = node_index(ix, iy);
            if (!present_[idx]) continue;
            for (int j = 0; j < n_theta_; ++j) {
                cplx v = 0.0;
                for (int m = -n_theta_ / 2; m < n_theta_ - n_theta_ / 2; ++m)
                    v += coeffs_[idx][static_cast<size_t>(m + n_theta_ / 2)] *
                         quad.root(static_cast<long long>(m) * j);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", xs_[ix],
                              ys_[iy], step * j, v.real(), v.imag());
                out << buf;
            }
        }
    }
}

double BoundaryGrid::interpolation_error_bound() const {
    // Nearest-neighbor variation between sampled nodes plus the top retained
    // theta mode; cells with an absent corner are not evaluable anyway.
    double axis_var = 0.0;
    auto mag0 = [&](size_t i) {
        return std::abs(coeffs_[i][static_cast<size_t>(n_theta_ / 2)]);
    };
    auto update = [&](size_t i, size_t j) {
        if (present_[i] && present_[j])
            axis_var = std::max(axis_var, std::abs(mag0(i) - mag0(j)));
    };
    for (size_t ix = 0; ix + 1 < xs_.size(); ++ix)
        for (size_t iy = 0; iy < ys_.size(); ++iy)
            update(node_index(ix + 1, iy), node_index(ix, iy));
    for (size_t ix = 0; ix < xs_.size(); ++ix)
        for (size_t iy = 0; iy + 1 < ys_.size(); ++iy)
            update(node_index(ix, iy + 1), node_index(ix, iy));
    double tail = 0.0;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (present_[i]) tail = std::max(tail, std::abs(coeffs_[i][0]));  // Nyquist mode
    return axis_var + tail;
}

BoundaryFunction BoundaryGrid::evaluator() const {
    // Value by value capture; the grid object itself stays immutable.
    auto self = std::make_shared<BoundaryGrid>(*this);
    std::ostringstream name;
    name.precision(3);
    name << "grid[" << xs_.size() << "x" << ys_.size() << "x" << n_theta_
         << ", err<=" << interpolation_error_bound() << "]";
    return {name.str(), [self](cplx z, cplx w) -> cplx {
                const auto& xs = self->xs_;
                const auto& ys = self->ys_;
                const double x = z.real(), y = z.imag();
                if (x < xs.front() - 1e-9 || x > xs.back() + 1e-9 || y < ys.front() - 1e-9 ||
                    y > ys.back() + 1e-9)
                    throw std::domain_error("grid evaluator: z outside the sampled rectangle");
                size_t ix = static_cast<size_t>(
                    std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
                size_t iy = static_cast<size_t>(
                    std::upper_bound(ys.begin(), ys.end(), y) - ys.begin());
                ix = std::clamp<size_t>(ix, 1, xs.size() - 1) - 1;
                iy = std::clamp<size_t>(iy, 1, ys.size() - 1) - 1;

                const double theta = std::abs(w) > 0.0 ? std::arg(w) : 0.0;
                auto corner = [&](size_t cx, size_t cy) -> cplx {
                    const size_t idx = self->node_index(cx, cy);
                    if (!self->present_[idx])
                        throw std::domain_error("grid evaluator: incomplete cell near z");
                    const auto& c = self->coeffs_[idx];
                    cplx acc = 0.0;
                    const int half = self->n_theta_ / 2;
                    for (int m = -half; m < self->n_theta_ - half; ++m)
                        acc += c[static_cast<size_t>(m + half)] *
                               std::polar(1.0, m * theta);
                    return acc;
                };
                const double tx = xs[ix + 1] == xs[ix]
                                      ? 0.0
                                      : std::clamp((x - xs[ix]) / (xs[ix + 1] - xs[ix]), 0.0, 1.0);
                const double ty = ys[iy + 1] == ys[iy]
                                      ? 0.0
                                      : std::clamp((y - ys[iy]) / (ys[iy + 1] - ys[iy]), 0.0, 1.0);
                const cplx v00 = corner(ix, iy), v10 = corner(ix + 1, iy);
                const cplx v01 = corner(ix, iy + 1), v11 = corner(ix + 1, iy + 1);
                return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 +
                       tx * ty * v11;
            }};
}

BoundaryFunction boundary_function_from_grid_file(const std::string& path) {
    return BoundaryGrid::read_file(path).evaluator();
}

}  // namespace holex
