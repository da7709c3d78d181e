#pragma once

#include <string>
#include <vector>

namespace radwave {

enum class RegionKind { Sigma1, Sigma2 };

/// Sigma1: r - t >= max(R, delta t) > 0.
/// Sigma2: |x| - t >= max(R, t - 1).
struct Region {
    RegionKind kind = RegionKind::Sigma1;
    double R = 1.0;
    double delta = 2.0;
    int n = 5;

    bool contains(double r, double t) const;
    /// Largest t with (r, t) in the region (negative if none).
    double t_max(double r) const;
    std::string describe() const;
};

/// Sigma1 for dimension n with delta taken from lemma_constants(m).
Region sigma1_region(int n, double R);
Region sigma2_region(int n, double R);

struct RegionPoint {
    double r = 0.0;
    double t = 0.0;
    bool in_region = false;
};

struct RegionGrid {
    Region region;
    std::vector<RegionPoint> points;
    int n_r = 0;
    int n_t = 0;
};

/// n_r radii log-spaced over [R + delta, 100 R]; at each radius n_t times
/// t_j = t_max(r) (j + 1) / n_t, so every point lies in Sigma1.
RegionGrid make_sigma1_grid(const Region& region, int n_r = 64, int n_t = 64);

/// Same layout for Sigma2 with radii over [R + 1, 100 R].
RegionGrid make_sigma2_grid(const Region& region, int n_r = 64, int n_t = 64);

RegionGrid make_grid(const Region& region, int n_r = 64, int n_t = 64);

/// Closes the point set of `grid` with a 2x finer grid in each direction.
RegionGrid refine(const RegionGrid& grid);

/// Is the characteristic triangle below (r, t) inside the region? Checked
/// on a `samples` x `samples` lattice of the triangle.
bool triangle_in_region(const Region& region, double r, double t, int samples = 16);

}  // namespace radwave
