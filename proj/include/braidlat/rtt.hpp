#pragma once

#include "braidlat/transfer.hpp"

#include <string>

namespace braidlat {

struct RelationResidual {
    std::string name;
    double residual = 0.0;
};

struct RttReport {
    int N = 0, r = 0;
    double q = 0.0, theta = 0.0, theta_p = 0.0, K_pp = 0.0;
    double k_independent_max = 0.0;  // the 36 relations t_ij t'_kl = t'_ij t_kl
    double x_set_max = 0.0;          // six X-sets, three equalities each
    double y_set_max = 0.0;          // six Y-sets, generated by transposition
    double mixed_max = 0.0;          // nine mixed relations
    double wholesale_residual = 0.0; // R^(th-th')(t x t') = (t' x t)R^(th-th')
    std::vector<RelationResidual> details;

    double max_itemized() const {
        return std::max({k_independent_max, x_set_max, y_set_max, mixed_max});
    }
};

// Verifies the exchange-relation catalogue on the order-r monodromy blocks at
// numeric (theta, theta'). The itemized catalogue is the N = 3 set; the
// wholesale identity is checked for any N. theta - theta' must avoid the pole.
RttReport rtt_verify(const ModelParams& p, int r, double theta, double theta_p,
                     std::size_t cap = kDefaultStateCap);

}  // namespace braidlat
