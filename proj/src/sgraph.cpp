#include <sigfix/sgraph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace sigfix {

std::string to_string(const Arc& arc) {
    std::ostringstream out;
    out << '(' << arc.source << "->" << arc.target << ',' << to_char(arc.sign) << ')';
    return out.str();
}

// ---------------------------------------------------------------- BitState

BitState BitState::from_string(std::string_view bits) {
    BitState x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("BitState: expected '0' or '1', got '" + std::string(1, bits[i]) + "'");
        }
        x.bits_[i] = bits[i] == '1';
    }
    return x;
}

BitState BitState::from_code(std::uint64_t code, std::size_t n) {
    if (n > 64) throw std::invalid_argument("BitState::from_code: more than 64 bits");
    BitState x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.bits_[i] = (code >> (n - 1 - i)) & 1U;
    }
    return x;
}

bool BitState::at(Vertex v) const {
    if (v < 1 || static_cast<std::size_t>(v) > bits_.size()) {
        throw std::out_of_range("BitState: vertex " + std::to_string(v) + " out of range");
    }
    return (*this)[v];
}

void BitState::set(Vertex v, bool value) {
    if (v < 1 || static_cast<std::size_t>(v) > bits_.size()) {
        throw std::out_of_range("BitState: vertex " + std::to_string(v) + " out of range");
    }
    bits_[static_cast<std::size_t>(v - 1)] = value;
}

BitState BitState::flipped(Vertex v) const {
    BitState y = *this;
    y.set(v, !at(v));
    return y;
}

BitState BitState::complement() const {
    BitState y = *this;
    y.bits_.flip();
    return y;
}

std::uint64_t BitState::code() const {
    if (bits_.size() > 64) throw std::logic_error("BitState::code: more than 64 bits");
    std::uint64_t code = 0;
    for (bool b : bits_) code = (code << 1) | static_cast<std::uint64_t>(b);
    return code;
}

std::string BitState::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::size_t hamming_distance(const BitState& x, const BitState& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t v = 1; v <= x.size(); ++v) {
        d += x[static_cast<Vertex>(v)] != y[static_cast<Vertex>(v)];
    }
    return d;
}

// ------------------------------------------------------- paths and cycles

namespace {

Sign product(const std::vector<Arc>& arcs) {
    Sign s = Sign::positive;
    for (const Arc& a : arcs) s = s * a.sign;
    return s;
}

void check_distinct(std::vector<Vertex> vs, const char* what) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        throw std::invalid_argument(std::string(what) + ": repeated vertex");
    }
}

}  // namespace

SignedCycle::SignedCycle(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw std::invalid_argument("SignedCycle: no arcs");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& next = arcs_[(i + 1) % arcs_.size()];
        if (arcs_[i].target != next.source) {
            throw std::invalid_argument("SignedCycle: arcs do not chain at " + sigfix::to_string(arcs_[i]));
        }
    }
    check_distinct(vertices(), "SignedCycle");
    sign_ = product(arcs_);
}

std::vector<Vertex> SignedCycle::vertices() const {
    std::vector<Vertex> vs;
    vs.reserve(arcs_.size());
    for (const Arc& a : arcs_) vs.push_back(a.source);
    return vs;
}

bool SignedCycle::contains(Vertex v) const {
    return std::any_of(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.source == v; });
}

bool SignedCycle::contains(const Arc& arc) const {
    return std::find(arcs_.begin(), arcs_.end(), arc) != arcs_.end();
}

std::string SignedCycle::to_string() const {
    std::ostringstream out;
    out << to_char(sign_) << '[';
    for (const Arc& a : arcs_) out << a.source << ' ' << to_char(a.sign) << "> ";
    out << arcs_.front().source << ']';
    return out.str();
}

SignedPath::SignedPath(Vertex start) : start_(start) {}

SignedPath::SignedPath(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw std::invalid_argument("SignedPath: use the single-vertex constructor for trivial paths");
    start_ = arcs_.front().source;
    for (std::size_t i = 0; i + 1 < arcs_.size(); ++i) {
        if (arcs_[i].target != arcs_[i + 1].source) {
            throw std::invalid_argument("SignedPath: arcs do not chain at " + sigfix::to_string(arcs_[i]));
        }
    }
    check_distinct(vertices(), "SignedPath");
    sign_ = product(arcs_);
}

std::vector<Vertex> SignedPath::vertices() const {
    std::vector<Vertex> vs{start_};
    for (const Arc& a : arcs_) vs.push_back(a.target);
    return vs;
}

// ----------------------------------------------------------- SignedDigraph

SignedDigraph::SignedDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    vertices_.resize(n);
    for (std::size_t i = 0; i < n; ++i) vertices_[i] = static_cast<Vertex>(i + 1);
    build();
}

SignedDigraph::SignedDigraph(std::size_t n, std::vector<Vertex> vertices, std::vector<Arc> arcs)
    : n_(n), vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("SignedDigraph: repeated vertex in vertex set");
    }
    build();
}

void SignedDigraph::build() {
    present_.assign(n_ + 1, 0);
    for (Vertex v : vertices_) {
        if (v < 1 || static_cast<std::size_t>(v) > n_) {
            throw std::invalid_argument("SignedDigraph: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
        }
        present_[static_cast<std::size_t>(v)] = 1;
    }
    for (const Arc& a : arcs_) {
        if (!has_vertex(a.source) || !has_vertex(a.target)) {
            throw std::invalid_argument("SignedDigraph: arc " + to_string(a) + " has an endpoint outside the vertex set");
        }
    }
    out_ = arcs_;
    std::sort(out_.begin(), out_.end());
    if (auto dup = std::adjacent_find(out_.begin(), out_.end()); dup != out_.end()) {
        throw std::invalid_argument("SignedDigraph: duplicate arc " + to_string(*dup));
    }
    in_ = arcs_;
    std::sort(in_.begin(), in_.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.target, a.source, a.sign) < std::tie(b.target, b.source, b.sign);
    });

    out_begin_.assign(n_ + 1, 0);
    in_begin_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_begin_[static_cast<std::size_t>(a.source)];
        ++in_begin_[static_cast<std::size_t>(a.target)];
    }
    // prefix sums: [begin(v), begin(v+1)) at slots v-1 and v
    std::size_t out_sum = 0, in_sum = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
        std::size_t oc = out_begin_[v], ic = in_begin_[v];
        out_begin_[v - 1] = out_sum;
        in_begin_[v - 1] = in_sum;
        out_sum += oc;
        in_sum += ic;
    }
    out_begin_[n_] = out_sum;
    in_begin_[n_] = in_sum;
}

bool SignedDigraph::has_vertex(Vertex v) const {
    return v >= 1 && static_cast<std::size_t>(v) <= n_ && present_[static_cast<std::size_t>(v)];
}

std::size_t SignedDigraph::slot(Vertex v) const {
    if (!has_vertex(v)) throw std::invalid_argument("SignedDigraph: no vertex " + std::to_string(v));
    return static_cast<std::size_t>(v - 1);
}

bool SignedDigraph::has_arc(const Arc& arc) const {
    return std::binary_search(out_.begin(), out_.end(), arc);
}

std::span<const Arc> SignedDigraph::out_arcs(Vertex v) const {
    std::size_t s = slot(v);
    return {out_.data() + out_begin_[s], out_begin_[s + 1] - out_begin_[s]};
}

std::span<const Arc> SignedDigraph::in_arcs(Vertex v) const {
    std::size_t s = slot(v);
    return {in_.data() + in_begin_[s], in_begin_[s + 1] - in_begin_[s]};
}

std::vector<Vertex> SignedDigraph::in_neighbors(Vertex v) const {
    std::vector<Vertex> result;
    for (const Arc& a : in_arcs(v)) {
        if (result.empty() || result.back() != a.source) result.push_back(a.source);
    }
    return result;
}

std::vector<Vertex> SignedDigraph::in_neighbors(Vertex v, Sign sign) const {
    std::vector<Vertex> result;
    for (const Arc& a : in_arcs(v)) {
        if (a.sign == sign) result.push_back(a.source);
    }
    return result;
}

std::vector<Vertex> SignedDigraph::sources() const {
    std::vector<Vertex> result;
    for (Vertex v : vertices_) {
        if (in_degree(v) == 0) result.push_back(v);
    }
    return result;
}

bool SignedDigraph::operator==(const SignedDigraph& other) const {
    return n_ == other.n_ && vertices_ == other.vertices_ && out_ == other.out_;
}

// -------------------------------------------------------------- components

ComponentDecomposition strong_components(const SignedDigraph& g) {
    const std::size_t n = g.order();
    constexpr int unvisited = -1;
    std::vector<int> index(n + 1, unvisited), low(n + 1, 0);
    std::vector<char> on_stack(n + 1, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> found;
    int counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (Vertex root : g.vertices()) {
        if (index[static_cast<std::size_t>(root)] != unvisited) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& fr = call.back();
            auto v = static_cast<std::size_t>(fr.v);
            if (fr.next == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(fr.v);
                on_stack[v] = 1;
            }
            auto outs = g.out_arcs(fr.v);
            if (fr.next < outs.size()) {
                auto w = static_cast<std::size_t>(outs[fr.next++].target);
                if (index[w] == unvisited) {
                    call.push_back({static_cast<Vertex>(w), 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != fr.v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                auto parent = static_cast<std::size_t>(call.back().v);
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    // Tarjan emits sink components first.
    std::reverse(found.begin(), found.end());
    ComponentDecomposition dec;
    dec.component_of.assign(n + 1, -1);
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Vertex v : found[i]) dec.component_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    dec.components.resize(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        dec.components[i].vertices = std::move(found[i]);
        dec.components[i].initial = true;
        dec.components[i].terminal = true;
    }
    for (const Arc& a : g.arcs()) {
        int cs = dec.index_of(a.source), ct = dec.index_of(a.target);
        if (cs == ct) {
            dec.components[static_cast<std::size_t>(cs)].nontrivial = true;
        } else {
            dec.components[static_cast<std::size_t>(cs)].terminal = false;
            dec.components[static_cast<std::size_t>(ct)].initial = false;
        }
    }
    return dec;
}

bool is_strongly_connected(const SignedDigraph& g) {
    return g.vertex_count() > 0 && strong_components(g).components.size() == 1;
}

// ---------------------------------------------------------- graph calculus

namespace {

std::vector<char> membership(const SignedDigraph& g, std::span<const Vertex> set, const char* op) {
    std::vector<char> in(g.order() + 1, 0);
    for (Vertex v : set) {
        if (!g.has_vertex(v)) throw std::invalid_argument(std::string(op) + ": no vertex " + std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

template <class Keep>
std::vector<Arc> filter_arcs(const SignedDigraph& g, Keep keep) {
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs()) {
        if (keep(a)) arcs.push_back(a);
    }
    return arcs;
}

}  // namespace

SignedDigraph induced(const SignedDigraph& g, std::span<const Vertex> keep) {
    auto in = membership(g, keep, "induced");
    std::vector<Vertex> vs(keep.begin(), keep.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto arcs = filter_arcs(g, [&](const Arc& a) {
        return in[static_cast<std::size_t>(a.source)] && in[static_cast<std::size_t>(a.target)];
    });
    return SignedDigraph(g.order(), std::move(vs), std::move(arcs));
}

SignedDigraph remove_incoming(const SignedDigraph& g, std::span<const Vertex> targets) {
    auto in = membership(g, targets, "remove_incoming");
    auto arcs = filter_arcs(g, [&](const Arc& a) { return !in[static_cast<std::size_t>(a.target)]; });
    return SignedDigraph(g.order(), g.vertices(), std::move(arcs));
}

SignedDigraph without_arc(const SignedDigraph& g, const Arc& arc) {
    if (!g.has_arc(arc)) throw std::invalid_argument("without_arc: no arc " + to_string(arc));
    auto arcs = filter_arcs(g, [&](const Arc& a) { return a != arc; });
    return SignedDigraph(g.order(), g.vertices(), std::move(arcs));
}

SignedDigraph without_vertex(const SignedDigraph& g, Vertex v) {
    const Vertex removed[] = {v};
    return without_vertices(g, removed);
}

SignedDigraph without_vertices(const SignedDigraph& g, std::span<const Vertex> removed) {
    auto out = membership(g, removed, "without_vertices");
    std::vector<Vertex> vs;
    for (Vertex v : g.vertices()) {
        if (!out[static_cast<std::size_t>(v)]) vs.push_back(v);
    }
    auto arcs = filter_arcs(g, [&](const Arc& a) {
        return !out[static_cast<std::size_t>(a.source)] && !out[static_cast<std::size_t>(a.target)];
    });
    return SignedDigraph(g.order(), std::move(vs), std::move(arcs));
}

SignedDigraph symmetrize(const SignedDigraph& g) {
    std::vector<Arc> arcs = g.arcs();
    for (const Arc& a : g.arcs()) {
        Arc rev{a.target, a.source, a.sign};
        if (!g.has_arc(rev)) arcs.push_back(rev);
    }
    return SignedDigraph(g.order(), g.vertices(), std::move(arcs));
}

SignedDigraph consistent_subgraph(const SignedDigraph& g, const BitState& x) {
    if (x.size() != g.order()) throw std::invalid_argument("consistent_subgraph: state length mismatch");
    auto arcs = filter_arcs(g, [&](const Arc& a) {
        bool equal = x[a.source] == x[a.target];
        return (a.sign == Sign::positive) == equal;
    });
    return SignedDigraph(g.order(), g.vertices(), std::move(arcs));
}

SignedDigraph flip_signs(const SignedDigraph& g) {
    std::vector<Arc> arcs = g.arcs();
    for (Arc& a : arcs) a.sign = opposite(a.sign);
    return SignedDigraph(g.order(), g.vertices(), std::move(arcs));
}

// -------------------------------------------------------------------- cycles

namespace {

class CycleSearch {
public:
    CycleSearch(const SignedDigraph& g, const std::function<bool(const SignedCycle&)>& visit)
        : g_(g), visit_(visit), allowed_(g.order() + 1, 0), on_path_(g.order() + 1, 0) {}

    bool run() {
        for (Vertex s : g_.vertices()) {
            start_ = s;
            restrict_to_cycles_through(s);
            if (!extend(s)) return false;
        }
        return true;
    }

private:
    // allowed = vertices >= s lying on a closed walk through s within {>= s}
    void restrict_to_cycles_through(Vertex s) {
        const std::size_t n = g_.order();
        std::vector<char> fwd(n + 1, 0), bwd(n + 1, 0);
        auto sweep = [&](std::vector<char>& mark, bool forward) {
            std::vector<Vertex> todo{s};
            mark[static_cast<std::size_t>(s)] = 1;
            while (!todo.empty()) {
                Vertex v = todo.back();
                todo.pop_back();
                auto arcs = forward ? g_.out_arcs(v) : g_.in_arcs(v);
                for (const Arc& a : arcs) {
                    Vertex w = forward ? a.target : a.source;
                    if (w < s || mark[static_cast<std::size_t>(w)]) continue;
                    mark[static_cast<std::size_t>(w)] = 1;
                    todo.push_back(w);
                }
            }
        };
        sweep(fwd, true);
        sweep(bwd, false);
        for (std::size_t v = 0; v <= n; ++v) allowed_[v] = fwd[v] && bwd[v];
    }

    bool extend(Vertex v) {
        on_path_[static_cast<std::size_t>(v)] = 1;
        for (const Arc& a : g_.out_arcs(v)) {
            if (a.target == start_) {
                path_.push_back(a);
                bool more = visit_(SignedCycle(path_));
                path_.pop_back();
                if (!more) return false;
                continue;
            }
            auto w = static_cast<std::size_t>(a.target);
            if (!allowed_[w] || on_path_[w]) continue;
            path_.push_back(a);
            bool more = extend(a.target);
            path_.pop_back();
            if (!more) return false;
        }
        on_path_[static_cast<std::size_t>(v)] = 0;
        return true;
    }

    const SignedDigraph& g_;
    const std::function<bool(const SignedCycle&)>& visit_;
    Vertex start_ = 0;
    std::vector<char> allowed_;
    std::vector<char> on_path_;
    std::vector<Arc> path_;
};

// Parity labelling of one vertex subset under "positive = equal, negative =
// different", arcs taken in both directions.
bool balanced(const SignedDigraph& g, const std::vector<Vertex>& comp, const std::vector<int>& comp_of, int id) {
    std::vector<int> label(g.order() + 1, -1);
    for (Vertex root : comp) {
        if (label[static_cast<std::size_t>(root)] != -1) continue;
        label[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            auto relax = [&](Vertex w, Sign s) {
                if (comp_of[static_cast<std::size_t>(w)] != id) return true;
                int want = label[static_cast<std::size_t>(v)] ^ (s == Sign::negative ? 1 : 0);
                int& lw = label[static_cast<std::size_t>(w)];
                if (lw == -1) {
                    lw = want;
                    queue.push_back(w);
                    return true;
                }
                return lw == want;
            };
            for (const Arc& a : g.out_arcs(v)) {
                if (!relax(a.target, a.sign)) return false;
            }
            for (const Arc& a : g.in_arcs(v)) {
                if (!relax(a.source, a.sign)) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool for_each_cycle(const SignedDigraph& g, const std::function<bool(const SignedCycle&)>& visit) {
    return CycleSearch(g, visit).run();
}

std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::size_t cap) {
    std::vector<SignedCycle> cycles;
    for_each_cycle(g, [&](const SignedCycle& c) {
        if (cycles.size() == cap) throw CycleCapExceeded(cap);
        cycles.push_back(c);
        return true;
    });
    return cycles;
}

bool has_negative_cycle(const SignedDigraph& g) {
    auto dec = strong_components(g);
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const Component& c = dec.components[i];
        if (c.nontrivial && !balanced(g, c.vertices, dec.component_of, static_cast<int>(i))) return true;
    }
    return false;
}

std::optional<SignedCycle> find_negative_cycle(const SignedDigraph& g) {
    auto dec = strong_components(g);
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const Component& c = dec.components[i];
        if (!c.nontrivial || balanced(g, c.vertices, dec.component_of, static_cast<int>(i))) continue;
        std::optional<SignedCycle> found;
        for_each_cycle(induced(g, c.vertices), [&](const SignedCycle& cyc) {
            if (cyc.is_positive()) return true;
            found = cyc;
            return false;
        });
        if (!found) throw std::logic_error("find_negative_cycle: unbalanced component without negative cycle");
        return found;
    }
    return std::nullopt;
}

bool has_positive_cycle(const SignedDigraph& g) {
    return !for_each_cycle(g, [](const SignedCycle& c) { return !c.is_positive(); });
}

std::vector<Vertex> vertices_on_positive_cycles(const SignedDigraph& g, std::size_t cap) {
    std::vector<char> on(g.order() + 1, 0);
    std::size_t seen = 0;
    for_each_cycle(g, [&](const SignedCycle& c) {
        if (++seen > cap) throw CycleCapExceeded(cap);
        if (c.is_positive()) {
            for (const Arc& a : c.arcs()) on[static_cast<std::size_t>(a.source)] = 1;
        }
        return true;
    });
    std::vector<Vertex> result;
    for (Vertex v : g.vertices()) {
        if (on[static_cast<std::size_t>(v)]) result.push_back(v);
    }
    return result;
}

// ------------------------------------------------------------ reachability

std::optional<SignedPath> find_path(const SignedDigraph& g, std::span<const Vertex> from,
                                    std::span<const Vertex> forbidden, Vertex to) {
    auto blocked = membership(g, forbidden, "reachable");
    auto starts = membership(g, from, "reachable");
    if (!g.has_vertex(to)) throw std::invalid_argument("reachable: no vertex " + std::to_string(to));
    if (blocked[static_cast<std::size_t>(to)]) throw std::invalid_argument("reachable: target is forbidden");
    if (starts[static_cast<std::size_t>(to)]) return SignedPath(to);

    const std::size_t n = g.order();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::optional<Arc>> via(n + 1);
    std::deque<Vertex> queue;
    for (Vertex v : g.vertices()) {
        if (starts[static_cast<std::size_t>(v)] && !blocked[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const Arc& a : g.out_arcs(v)) {
            auto w = static_cast<std::size_t>(a.target);
            if (seen[w] || blocked[w]) continue;
            seen[w] = 1;
            via[w] = a;
            if (a.target == to) {
                std::vector<Arc> arcs;
                for (Vertex u = to; via[static_cast<std::size_t>(u)]; u = via[static_cast<std::size_t>(u)]->source) {
                    arcs.push_back(*via[static_cast<std::size_t>(u)]);
                }
                std::reverse(arcs.begin(), arcs.end());
                return SignedPath(std::move(arcs));
            }
            queue.push_back(a.target);
        }
    }
    return std::nullopt;
}

bool reachable(const SignedDigraph& g, std::span<const Vertex> from, std::span<const Vertex> forbidden, Vertex to) {
    return find_path(g, from, forbidden, to).has_value();
}

}  // namespace sigfix
