#include "stlab/families.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace stlab {

namespace {

long long choose2(long long m) { return m * (m - 1) / 2; }

std::map<std::string, std::string> parse_args(const std::string& inner) {
    std::map<std::string, std::string> out;
    std::stringstream ss(inner);
    std::string term;
    while (std::getline(ss, term, ',')) {
        size_t eq = term.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value in family spec: '" + term + "'");
        out[term.substr(0, eq)] = term.substr(eq + 1);
    }
    return out;
}

int arg_int(const std::map<std::string, std::string>& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) throw std::invalid_argument("family spec missing parameter '" + key + "'");
    return std::stoi(it->second);
}

}  // namespace

Graph attachment_graph(const std::string& name) {
    if (name == "N6") return build(FamilySpec::make_N6());
    if (name.size() >= 2 && name[0] == 'K') {
        int m = std::stoi(name.substr(1));
        return complete_graph(m);
    }
    throw std::invalid_argument("unknown attachment graph '" + name + "'");
}

FamilySpec FamilySpec::make_S(int n, int h) {
    FamilySpec s;
    s.kind = FamilyKind::S;
    s.n = n;
    s.h = h;
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_S_plus(int n, int h) {
    FamilySpec s = make_S(n, h);
    s.kind = FamilyKind::SPlus;
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_L(int t1, int t2, int h) {
    FamilySpec s;
    s.kind = FamilyKind::L;
    s.t1 = t1;
    s.t2 = t2;
    s.h = h;
    s.n = t1 * h + t2 * (h + 1) + 1;
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_F(int n, int k) {
    FamilySpec s;
    s.kind = FamilyKind::F;
    s.n = n;
    s.k = k;
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_F_attach(int n, int k, const std::string& attach_name) {
    FamilySpec s;
    s.kind = FamilyKind::FAttach;
    s.n = n;
    s.k = k;
    s.attach_name = attach_name;
    s.attachment = attachment_graph(attach_name);
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_Hn1(int n) {
    FamilySpec s;
    s.kind = FamilyKind::Hn1;
    s.n = n;
    s.validate();
    return s;
}

FamilySpec FamilySpec::make_N6() {
    FamilySpec s;
    s.kind = FamilyKind::N6;
    s.n = 6;
    return s;
}

FamilySpec FamilySpec::make_complete(int n) {
    FamilySpec s;
    s.kind = FamilyKind::Complete;
    s.n = n;
    s.validate();
    return s;
}

void FamilySpec::validate() const {
    auto fail = [&](const std::string& why) { throw std::invalid_argument("bad family parameters: " + why); };
    switch (kind) {
        case FamilyKind::S:
            if (!(1 <= h && h < n)) fail("S requires 1 <= h < n");
            break;
        case FamilyKind::SPlus:
            if (!(1 <= h && h < n)) fail("S+ requires 1 <= h < n");
            if (n - h < 2) fail("S+ requires n - h >= 2");
            break;
        case FamilyKind::L:
            if (t1 < 0 || t2 < 0) fail("L requires t1, t2 >= 0");
            if (h < 1) fail("L requires h >= 1");
            if (n != t1 * h + t2 * (h + 1) + 1) fail("L requires n = t1*h + t2*(h+1) + 1");
            break;
        case FamilyKind::F:
            if (!(n > k && k >= 1)) fail("F requires n > k >= 1");
            break;
        case FamilyKind::FAttach: {
            if (!attachment) fail("Fatt requires an attachment graph");
            int ha = attachment->order();
            if (ha < 2) fail("attachment must have order >= 2");
            if (!(k >= 1)) fail("Fatt requires k >= 1");
            if (!(n >= k - 1 + ha)) fail("Fatt requires n >= k - 1 + |V(H)|");
            break;
        }
        case FamilyKind::Hn1:
            if (n < 7) fail("Hn1 requires n >= 7");
            break;
        case FamilyKind::N6:
            break;
        case FamilyKind::Complete:
            if (n < 0) fail("K requires n >= 0");
            break;
    }
}

int FamilySpec::order() const { return n; }

FamilySpec FamilySpec::parse(const std::string& text) {
    size_t open = text.find('(');
    std::string head = open == std::string::npos ? text : text.substr(0, open);
    std::map<std::string, std::string> args;
    if (open != std::string::npos) {
        size_t close = text.rfind(')');
        if (close == std::string::npos || close < open) throw std::invalid_argument("unbalanced parentheses in family spec");
        args = parse_args(text.substr(open + 1, close - open - 1));
    }
    if (head == "S") return make_S(arg_int(args, "n"), arg_int(args, "h"));
    if (head == "S+" || head == "Splus") return make_S_plus(arg_int(args, "n"), arg_int(args, "h"));
    if (head == "L") return make_L(arg_int(args, "t1"), arg_int(args, "t2"), arg_int(args, "h"));
    if (head == "F") return make_F(arg_int(args, "n"), arg_int(args, "k"));
    if (head == "Fatt") {
        auto it = args.find("H");
        if (it == args.end()) throw std::invalid_argument("Fatt requires H=");
        return make_F_attach(arg_int(args, "n"), arg_int(args, "k"), it->second);
    }
    if (head == "Hn1") return make_Hn1(arg_int(args, "n"));
    if (head == "N6") return make_N6();
    if (head == "K" || head == "Complete") return make_complete(arg_int(args, "n"));
    throw std::invalid_argument("unknown family kind '" + head + "'");
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::S: os << "S(n=" << n << ",h=" << h << ")"; break;
        case FamilyKind::SPlus: os << "S+(n=" << n << ",h=" << h << ")"; break;
        case FamilyKind::L: os << "L(t1=" << t1 << ",t2=" << t2 << ",h=" << h << ")"; break;
        case FamilyKind::F: os << "F(n=" << n << ",k=" << k << ")"; break;
        case FamilyKind::FAttach: os << "Fatt(n=" << n << ",k=" << k << ",H=" << attach_name << ")"; break;
        case FamilyKind::Hn1: os << "Hn1(n=" << n << ")"; break;
        case FamilyKind::N6: os << "N6"; break;
        case FamilyKind::Complete: os << "K(n=" << n << ")"; break;
    }
    return os.str();
}

// Vertex layout: clique/apex vertices first, then attachment, then matching
// pairs, then the leftover vertex. Tests address vertices by this convention.
Graph build(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::S:
            return join(complete_graph(spec.h), Graph::empty(spec.n - spec.h));
        case FamilyKind::SPlus:
            return join(complete_graph(spec.h), Graph::empty(spec.n - spec.h)).with_edge(spec.h, spec.h + 1);
        case FamilyKind::L: {
            Graph blocks = Graph::empty(0);
            for (int i = 0; i < spec.t1; ++i) blocks = disjoint_union(blocks, complete_graph(spec.h));
            for (int i = 0; i < spec.t2; ++i) blocks = disjoint_union(blocks, complete_graph(spec.h + 1));
            return join(complete_graph(1), blocks);
        }
        case FamilyKind::F: {
            int rem = spec.n - (spec.k - 1);
            int p = rem / 2, s = rem % 2;
            Graph matching = Graph::empty(2 * p + s);
            for (int i = 0; i < p; ++i) matching = matching.with_edge(2 * i, 2 * i + 1);
            return join(complete_graph(spec.k - 1), matching);
        }
        case FamilyKind::FAttach: {
            const Graph& att = *spec.attachment;
            int rem = spec.n - (spec.k - 1) - att.order();
            int p = rem / 2, s = rem % 2;
            Graph rest = att;
            Graph matching = Graph::empty(2 * p + s);
            for (int i = 0; i < p; ++i) matching = matching.with_edge(2 * i, 2 * i + 1);
            rest = disjoint_union(rest, matching);
            return join(complete_graph(spec.k - 1), rest);
        }
        case FamilyKind::Hn1: {
            // u = 0 dominating, v = 1, independents [2, n-2), triangle leaves n-2, n-1.
            const int n = spec.n;
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            for (int v = 2; v < n - 2; ++v) edges.emplace_back(1, v);
            edges.emplace_back(n - 2, n - 1);
            return Graph::from_edges(n, edges);
        }
        case FamilyKind::N6: {
            Graph g = complete_graph(3);
            g = disjoint_union(g, Graph::empty(3));
            for (int i = 0; i < 3; ++i) g = g.with_edge(i, i + 3);
            return g;
        }
        case FamilyKind::Complete:
            return complete_graph(spec.n);
    }
    throw std::logic_error("unreachable");
}

long long edge_count_formula(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::S:
            return choose2(spec.h) + static_cast<long long>(spec.h) * (spec.n - spec.h);
        case FamilyKind::SPlus:
            return choose2(spec.h) + static_cast<long long>(spec.h) * (spec.n - spec.h) + 1;
        case FamilyKind::L: {
            long long t1 = spec.t1, t2 = spec.t2, h = spec.h;
            return (t1 * h * h + t2 * (h + 1) * (h + 1) + spec.n - 1) / 2;
        }
        case FamilyKind::F: {
            long long rem = spec.n - spec.k + 1;
            return choose2(spec.k - 1) + rem * (spec.k - 1) + rem / 2;
        }
        case FamilyKind::FAttach: {
            long long rem = spec.n - spec.k + 1;
            long long p = (spec.n - (spec.k - 1) - spec.attachment->order()) / 2;
            return choose2(spec.k - 1) + rem * (spec.k - 1) + spec.attachment->edge_count() + p;
        }
        case FamilyKind::Hn1:
            return 2LL * spec.n - 4;
        case FamilyKind::N6:
            return 6;
        case FamilyKind::Complete:
            return choose2(spec.n);
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<int>> quotient_cells(const FamilySpec& spec) {
    spec.validate();
    auto range = [](int lo, int hi) {
        std::vector<int> v;
        for (int i = lo; i < hi; ++i) v.push_back(i);
        return v;
    };
    std::vector<std::vector<int>> cells;
    auto push = [&](std::vector<int> cell) {
        if (!cell.empty()) cells.push_back(std::move(cell));
    };
    switch (spec.kind) {
        case FamilyKind::S:
            push(range(0, spec.h));
            push(range(spec.h, spec.n));
            break;
        case FamilyKind::SPlus:
            push(range(0, spec.h));
            push({spec.h, spec.h + 1});
            push(range(spec.h + 2, spec.n));
            break;
        case FamilyKind::L: {
            push({0});
            push(range(1, 1 + spec.t1 * spec.h));
            push(range(1 + spec.t1 * spec.h, spec.n));
            break;
        }
        case FamilyKind::F: {
            int rem = spec.n - (spec.k - 1);
            int p = rem / 2;
            push(range(0, spec.k - 1));
            push(range(spec.k - 1, spec.k - 1 + 2 * p));
            push(range(spec.k - 1 + 2 * p, spec.n));
            break;
        }
        case FamilyKind::FAttach: {
            int ha = spec.attachment->order();
            int base = spec.k - 1;
            push(range(0, base));
            if (spec.attach_name == "N6") {
                push(range(base, base + 3));
                push(range(base + 3, base + 6));
            } else if (!spec.attach_name.empty() && spec.attach_name[0] == 'K') {
                push(range(base, base + ha));
            } else {
                for (int v = base; v < base + ha; ++v) push({v});
            }
            int rem = spec.n - base - ha;
            int p = rem / 2;
            push(range(base + ha, base + ha + 2 * p));
            push(range(base + ha + 2 * p, spec.n));
            break;
        }
        case FamilyKind::Hn1:
            push({0});
            push({1});
            push(range(2, spec.n - 2));
            push({spec.n - 2, spec.n - 1});
            break;
        case FamilyKind::N6:
            push(range(0, 3));
            push(range(3, 6));
            break;
        case FamilyKind::Complete:
            push(range(0, spec.n));
            break;
    }
    return cells;
}

TuranBound turan_edge_bound(const LinearForest& forest, int n) {
    if (forest.path_count() < 2) throw std::invalid_argument("turan_edge_bound needs k >= 2 paths");
    TuranBound out;
    if (forest.is_k_p3()) {
        const int k = forest.path_count();
        if (n < 3 * k) {
            out.bound = choose2(n);
            out.extremal.emplace_back("K(n=" + std::to_string(n) + ")", complete_graph(n));
        } else if (n < 5 * k - 1) {
            out.bound = choose2(3 * k - 1) + (n - 3 * k + 1) / 2;
            int m = n - 3 * k + 1;
            Graph tail = Graph::empty(m);
            for (int i = 0; i + 1 < m; i += 2) tail = tail.with_edge(i, i + 1);
            out.extremal.emplace_back("K" + std::to_string(3 * k - 1) + "+F(n=" + std::to_string(m) + ",k=1)",
                                      disjoint_union(complete_graph(3 * k - 1), tail));
        } else if (n == 5 * k - 1) {
            out.bound = choose2(3 * k - 1) + k;
            int m = 2 * k;
            Graph tail = Graph::empty(m);
            for (int i = 0; i + 1 < m; i += 2) tail = tail.with_edge(i, i + 1);
            out.extremal.emplace_back("K" + std::to_string(3 * k - 1) + "+F(n=" + std::to_string(m) + ",k=1)",
                                      disjoint_union(complete_graph(3 * k - 1), tail));
            out.extremal.emplace_back(FamilySpec::make_F(n, k).to_string(), build(FamilySpec::make_F(n, k)));
        } else {
            out.bound = choose2(k - 1) + static_cast<long long>(n - k + 1) * (k - 1) + (n - k + 1) / 2;
            out.extremal.emplace_back(FamilySpec::make_F(n, k).to_string(), build(FamilySpec::make_F(n, k)));
        }
        return out;
    }
    // At least one a_i != 3: the bound holds for sufficiently large n only, so
    // tightness is reported as asymptotic.
    const int h = forest.h();
    const int c = forest.c();
    out.asymptotic = true;
    out.bound = choose2(h) + static_cast<long long>(h) * (n - h) + c;
    if (n > h + (c == 1 ? 1 : 0)) {
        if (c == 1 && n - h >= 2) {
            FamilySpec s = FamilySpec::make_S_plus(n, h);
            out.extremal.emplace_back(s.to_string(), build(s));
        } else if (c == 0) {
            FamilySpec s = FamilySpec::make_S(n, h);
            out.extremal.emplace_back(s.to_string(), build(s));
        }
    }
    return out;
}

}  // namespace stlab
