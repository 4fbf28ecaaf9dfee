#include "stlab/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stlab {

LinearForest::LinearForest(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("linear forest needs at least one path");
    for (int a : orders_)
        if (a < 2) throw std::invalid_argument("path order must be at least 2");
    std::sort(orders_.rbegin(), orders_.rend());
}

LinearForest LinearForest::parse(const std::string& text) {
    std::vector<int> orders;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, ',')) {
        if (term.empty()) throw std::invalid_argument("empty term in forest literal");
        size_t x = term.find('x');
        try {
            if (x == std::string::npos) {
                orders.push_back(std::stoi(term));
            } else {
                int a = std::stoi(term.substr(0, x));
                int m = std::stoi(term.substr(x + 1));
                if (m < 1) throw std::invalid_argument("multiplicity must be positive");
                for (int i = 0; i < m; ++i) orders.push_back(a);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad forest literal term: '" + term + "'");
        }
    }
    return LinearForest(std::move(orders));
}

int LinearForest::total_order() const {
    return std::accumulate(orders_.begin(), orders_.end(), 0);
}

int LinearForest::h() const {
    int s = 0;
    for (int a : orders_) s += a / 2;
    return s - 1;
}

int LinearForest::odd_count() const {
    int c = 0;
    for (int a : orders_) c += a % 2;
    return c;
}

int LinearForest::c() const { return odd_count() == path_count() ? 1 : 0; }

bool LinearForest::is_k_p3() const {
    return std::all_of(orders_.begin(), orders_.end(), [](int a) { return a == 3; });
}

Graph LinearForest::build() const {
    Graph g = Graph::empty(0);
    for (int a : orders_) g = disjoint_union(g, path_graph(a));
    return g;
}

std::string LinearForest::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) os << ",";
        os << orders_[i];
    }
    return os.str();
}

}  // namespace stlab
