#pragma once

#include <stdexcept>

namespace aggsim {

/// Device cluster: a disk of radius R, with an optional aerial altitude h
/// for aggregators hovering above the cluster center (h = 0 -> terrestrial).
struct ClusterGeometry {
    double R_m = 200.0;
    double h_m = 100.0;

    void validate() const {
        if (!(R_m > 0.0)) throw std::domain_error("geometry.r_m must be > 0");
        if (!(h_m >= 0.0)) throw std::domain_error("geometry.h_m must be >= 0");
    }
};

}  // namespace aggsim
