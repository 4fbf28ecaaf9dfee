#pragma once

#include <string>
#include <vector>

#include "stlab/graph.hpp"

namespace stlab {

/// Multiset of path orders a_1 >= ... >= a_k >= 2.
class LinearForest {
  public:
    explicit LinearForest(std::vector<int> orders);

    /// CLI literal: comma-separated terms, each "a" (one P_a) or "axm"
    /// (m copies of P_a). "5,3" = P_5 u P_3; "3x4" = 4*P_3.
    static LinearForest parse(const std::string& text);

    const std::vector<int>& orders() const { return orders_; }
    int path_count() const { return static_cast<int>(orders_.size()); }
    int total_order() const;
    /// h = sum floor(a_i/2) - 1.
    int h() const;
    int odd_count() const;
    /// c = 1 iff all a_i are odd.
    int c() const;
    bool is_k_p3() const;  // all a_i == 3

    Graph build() const;
    std::string to_string() const;

  private:
    std::vector<int> orders_;  // descending
};

}  // namespace stlab
