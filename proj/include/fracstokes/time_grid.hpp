// Time grids on [0, T] and vector-valued trajectories sampled on them, with
// CSV serialization.  These are the carriers for every discrete operator in
// the library.
#pragma once

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracstokes {

// graded packs nodes near t = 0 (startup singularities of Caputo problems);
// graded_toward_end packs them near t = T (terminal weight singularities).
enum class GridKind { uniform, graded, graded_toward_end };

struct TimeGrid {
    std::vector<double> nodes;  // 0 = t_0 < t_1 < ... < t_N = T
    GridKind kind = GridKind::uniform;
    double grading = 1.0;       // exponent r for the graded kinds

    static TimeGrid uniform(double T, std::size_t segments) {
        TimeGrid g;
        g.kind = GridKind::uniform;
        g.build(T, segments, [](double x) { return x; });
        return g;
    }

    // t_j = T * (j/N)^r
    static TimeGrid graded(double T, std::size_t segments, double r) {
        check_grading(r);
        TimeGrid g;
        g.kind = GridKind::graded;
        g.grading = r;
        g.build(T, segments, [r](double x) { return std::pow(x, r); });
        return g;
    }

    // t_j = T * (1 - (1 - j/N)^r): same clustering, mirrored toward t = T
    static TimeGrid graded_toward_end(double T, std::size_t segments, double r) {
        check_grading(r);
        TimeGrid g;
        g.kind = GridKind::graded_toward_end;
        g.grading = r;
        g.build(T, segments, [r](double x) { return 1.0 - std::pow(1.0 - x, r); });
        return g;
    }

    std::size_t segments() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    double horizon() const { return nodes.empty() ? 0.0 : nodes.back(); }

    void validate() const {
        if (nodes.size() < 3) {
            throw std::invalid_argument("TimeGrid: need at least 2 segments (3 nodes)");
        }
        if (nodes.front() != 0.0) {
            throw std::invalid_argument("TimeGrid: first node must be t = 0");
        }
        for (std::size_t j = 1; j < nodes.size(); ++j) {
            if (!(nodes[j] > nodes[j - 1]) || !std::isfinite(nodes[j])) {
                std::ostringstream msg;
                msg << "TimeGrid: nodes not strictly increasing at index " << j;
                throw std::invalid_argument(msg.str());
            }
        }
    }

  private:
    static void check_grading(double r) {
        if (!(r >= 1.0) || !std::isfinite(r)) {
            std::ostringstream msg;
            msg << "TimeGrid: grading exponent must be >= 1, got " << r;
            throw std::invalid_argument(msg.str());
        }
    }

    template <class Map>
    void build(double T, std::size_t segments, Map&& map) {
        if (!(T > 0.0) || !std::isfinite(T)) {
            std::ostringstream msg;
            msg << "TimeGrid: horizon must be positive and finite, got " << T;
            throw std::invalid_argument(msg.str());
        }
        if (segments < 2) {
            throw std::invalid_argument("TimeGrid: need at least 2 segments");
        }
        nodes.resize(segments + 1);
        for (std::size_t j = 0; j <= segments; ++j) {
            nodes[j] = T * map(static_cast<double>(j) / static_cast<double>(segments));
        }
        nodes.front() = 0.0;
        nodes.back() = T;  // guard against pow() round-off at the endpoints
        validate();
    }
};

struct Trajectory {
    TimeGrid grid;
    std::vector<std::vector<double>> values;  // values[j] is the sample in R^m
    std::string label;

    std::size_t dim() const { return values.empty() ? 0 : values.front().size(); }

    void validate() const {
        grid.validate();
        if (values.size() != grid.nodes.size()) {
            std::ostringstream msg;
            msg << "Trajectory: " << values.size() << " samples for "
                << grid.nodes.size() << " nodes";
            throw std::invalid_argument(msg.str());
        }
        std::size_t m = dim();
        if (m == 0) throw std::invalid_argument("Trajectory: dimension must be >= 1");
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j].size() != m) {
                std::ostringstream msg;
                msg << "Trajectory: inconsistent dimension at node " << j;
                throw std::invalid_argument(msg.str());
            }
            for (double x : values[j]) {
                if (!std::isfinite(x)) {
                    std::ostringstream msg;
                    msg << "Trajectory: non-finite entry at node " << j;
                    throw std::invalid_argument(msg.str());
                }
            }
        }
    }
};

// Builds a trajectory by sampling f : double -> std::vector<double> at nodes.
template <class F>
Trajectory sample_trajectory(const TimeGrid& grid, F&& f, std::string label = {}) {
    Trajectory v;
    v.grid = grid;
    v.label = std::move(label);
    v.values.reserve(grid.nodes.size());
    for (double t : grid.nodes) v.values.push_back(f(t));
    return v;
}

// Scalar convenience: f : double -> double becomes a 1-dimensional trajectory.
template <class F>
Trajectory sample_scalar_trajectory(const TimeGrid& grid, F&& f, std::string label = {}) {
    return sample_trajectory(
        grid, [&f](double t) { return std::vector<double>{f(t)}; }, std::move(label));
}

// CSV format: header "t,v0,v1,...,v{m-1}", one row per node, 17 significant
// digits (lossless double round-trip).
inline void write_csv(std::ostream& os, const Trajectory& v) {
    std::size_t m = v.dim();
    os << "t";
    for (std::size_t k = 0; k < m; ++k) os << ",v" << k;
    os << "\n";
    os << std::setprecision(17);
    for (std::size_t j = 0; j < v.values.size(); ++j) {
        os << v.grid.nodes[j];
        for (double x : v.values[j]) os << "," << x;
        os << "\n";
    }
}

inline Trajectory read_csv(std::istream& is) {
    Trajectory v;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,", 0) != 0) {
        throw std::runtime_error("trajectory CSV: missing 't,v0,...' header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> entries;
        while (std::getline(row, cell, ',')) {
            try {
                entries.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("trajectory CSV: bad number '" + cell + "'");
            }
        }
        if (entries.size() < 2) {
            throw std::runtime_error("trajectory CSV: row needs time plus >= 1 value");
        }
        v.grid.nodes.push_back(entries.front());
        v.values.emplace_back(entries.begin() + 1, entries.end());
    }
    v.validate();
    return v;
}

}  // namespace fracstokes
