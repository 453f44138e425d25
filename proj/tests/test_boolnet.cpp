#include "fixtures.hpp"

#include <sigfix/boolnet.hpp>
#include <sigfix/generate.hpp>

#include <doctest.h>

#include <set>

using namespace sigfix;
using namespace fx;

namespace {

LocalFunction copy_of(Vertex u) { return LocalFunction::from_bits({u}, 0b10); }
LocalFunction not_of(Vertex u) { return LocalFunction::from_bits({u}, 0b01); }

BooleanNetwork identity(std::size_t n) {
    std::vector<LocalFunction> locals;
    for (std::size_t v = 1; v <= n; ++v) locals.push_back(copy_of(static_cast<Vertex>(v)));
    return BooleanNetwork(std::move(locals));
}

BooleanNetwork swap_network() { return BooleanNetwork({copy_of(2), copy_of(1)}); }
BooleanNetwork negation() { return BooleanNetwork({not_of(1)}); }
BooleanNetwork xor_network() {
    return BooleanNetwork({LocalFunction::from_bits({1, 2}, 0b0110), LocalFunction(false)});
}

std::vector<std::string> strings(const std::vector<BitState>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

}  // namespace

TEST_CASE("local function validation") {
    CHECK_THROWS(LocalFunction({1, 1}, {false, true, true, false}));
    CHECK_THROWS(LocalFunction({1}, {false, true, true}));
    CHECK_THROWS(BooleanNetwork({copy_of(3)}));
    auto f = LocalFunction::from_bits({1, 2}, 0b1000);
    CHECK(f.table_string() == "0001");
    CHECK(f.value(3));
    CHECK(!f.value(1));
}

TEST_CASE("evaluation") {
    auto x = BitState::from_string("011");
    CHECK(eval(identity(3), x) == x);
    auto constant = BooleanNetwork({LocalFunction(true), LocalFunction(false)});
    CHECK(eval(constant, BitState::from_string("01")).to_string() == "10");
    CHECK(eval(swap_network(), BitState::from_string("01")).to_string() == "10");
    CHECK(swap_network().apply(0b01) == 0b10);
}

TEST_CASE("discrete derivative") {
    for (std::uint64_t code = 0; code < 4; ++code) {
        auto x = BitState::from_code(code, 2);
        CHECK(derivative(swap_network(), 1, 2, x) == 1);
        CHECK(derivative(BooleanNetwork({not_of(2), copy_of(1)}), 1, 2, x) == -1);
        CHECK(derivative(xor_network(), 1, 2, x) == (x[1] ? -1 : 1));
    }
}

TEST_CASE("interaction graph") {
    CHECK(interaction_graph(BooleanNetwork({not_of(2), copy_of(1)})) == graph(2, {{2, 1, neg}, {1, 2, pos}}));
    auto g = interaction_graph(xor_network());
    CHECK(g == graph(2, {{1, 1, pos}, {1, 1, neg}, {2, 1, pos}, {2, 1, neg}}));
    CHECK(g.sources() == std::vector<Vertex>{2});
    CHECK(interaction_graph(identity(3)) == graph(3, {{1, 1, pos}, {2, 2, pos}, {3, 3, pos}}));
    // an input the table ignores gives no arc
    CHECK(interaction_graph(BooleanNetwork({LocalFunction::from_bits({1}, 0b11)})) == graph(1, {}));
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(negation()).empty());
    CHECK(strings(fixed_points(swap_network())) == std::vector<std::string>{"00", "11"});
    auto constant = BooleanNetwork({LocalFunction(true), LocalFunction(false)});
    CHECK(strings(fixed_points(constant)) == std::vector<std::string>{"10"});
    CHECK(fixed_point_codes(swap_network()) == std::vector<std::uint64_t>{0, 3});
}

TEST_CASE("local order") {
    auto x = BitState::from_string("01");
    CHECK(leq_v(figure1(5), 2, BitState::from_string("00000"), BitState::from_string("00000")));
    CHECK(leq_v(single_arc(), 2, BitState::from_string("00"), BitState::from_string("10")));
    CHECK(!leq_v(single_arc(neg), 2, BitState::from_string("00"), BitState::from_string("10")));
    CHECK(leq_v(single_arc(neg), 2, x, x));
}

TEST_CASE("canalizing arcs") {
    auto conj = BooleanNetwork({LocalFunction::from_bits({1, 2}, 0b1000), copy_of(2)});
    CHECK(is_canalized(conj, {2, 1, pos}));
    CHECK(!is_canalized(xor_network(), {2, 1, pos}));
    CHECK(is_canalized(BooleanNetwork({not_of(2), copy_of(1)}), {2, 1, neg}));
    CHECK_THROWS(is_canalized(swap_network(), {1, 1, pos}));
}

TEST_CASE("pinning") {
    auto x = BitState::from_string("10");
    CHECK(pin(swap_network(), std::span<const Vertex>{}, x) == swap_network());
    std::vector<Vertex> one{1}, two{2};
    CHECK(strings(fixed_points(pin(identity(2), one, x))) == std::vector<std::string>{"10", "11"});
    CHECK(strings(fixed_points(pin(swap_network(), two, BitState::from_string("00")))) ==
          std::vector<std::string>{"00"});
}

TEST_CASE("asynchronous attractors") {
    auto neg_att = attractors(negation());
    REQUIRE(neg_att.size() == 1);
    CHECK(strings(neg_att[0].states) == std::vector<std::string>{"0", "1"});
    CHECK(!neg_att[0].is_fixed_point());

    auto id = attractors(identity(2));
    CHECK(id.size() == 4);
    for (const auto& a : id) CHECK(a.is_fixed_point());

    auto sw = attractors(swap_network());
    REQUIRE(sw.size() == 2);
    CHECK(strings(sw[0].states) == std::vector<std::string>{"00"});
    CHECK(strings(sw[1].states) == std::vector<std::string>{"11"});
}

TEST_CASE("attractor fixed points are the fixed points") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_graph(4, 0.3, 0.5, seed);
        ConsistentNetworks cn(g);
        if (!cn.realizable()) continue;
        auto f = cn.sample(seed);
        std::vector<BitState> from_attractors;
        for (const auto& a : attractors(f)) {
            if (a.is_fixed_point()) from_attractors.push_back(a.states[0]);
        }
        CHECK(from_attractors == fixed_points(f));
    }
}

TEST_CASE("signature tables") {
    // every table of arity k falls in exactly one signature class
    for (std::size_t k = 1; k <= 4; ++k) {
        std::size_t total = 0, empty = 0, signatures = 1;
        for (std::size_t i = 0; i < k; ++i) signatures *= 4;
        for (std::size_t s = 0; s < signatures; ++s) {
            const auto& tables = tables_with_signature(k, s);
            total += tables.size();
            empty += tables.empty();
            for (auto t : tables) CHECK(table_signature(t, k) == s);
        }
        CHECK(total == (std::size_t{1} << (std::size_t{1} << k)));
        const std::size_t expected_empty[] = {0, 1, 6, 15, 28};
        CHECK(empty == expected_empty[k]);
    }
    CHECK(tables_with_signature(1, 1) == std::vector<std::uint16_t>{0b10});
    CHECK(tables_with_signature(1, 2) == std::vector<std::uint16_t>{0b01});
    CHECK(tables_with_signature(1, 3).empty());
    CHECK(table_canalizes(0b1000, 2, 1, Sign::positive));
    CHECK(!table_canalizes(0b0110, 2, 1, Sign::positive));
}

TEST_CASE("consistent networks") {
    CHECK(ConsistentNetworks(positive_loop()).count() == 1);
    CHECK(ConsistentNetworks(positive_loop()).at(0) == identity(1));
    CHECK(ConsistentNetworks(graph(1, {})).count() == 2);
    auto two = enumerate_consistent(positive_two_cycle());
    REQUIRE(two.size() == 1);
    CHECK(two[0] == swap_network());
    CHECK(strings(fixed_points(two[0])) == std::vector<std::string>{"00", "11"});

    auto both = graph(1, {{1, 1, pos}, {1, 1, neg}});
    ConsistentNetworks cn(both);
    CHECK(!cn.realizable());
    CHECK(cn.unrealizable_vertex() == 1);
    CHECK(cn.count() == 0);
    CHECK_THROWS_AS(cn.sample(1), UnrealizableGraph);

    CHECK_THROWS_AS(ConsistentNetworks(graph(5, {{1, 5, pos}, {2, 5, pos}, {3, 5, pos}, {4, 5, pos}}), 3),
                    LimitExceeded);
}

TEST_CASE("every consistent network has the graph as interaction graph") {
    for (std::size_t n = 1; n <= 2; ++n) {
        for_each_simple_graph(n, [&](std::uint64_t, const SignedDigraph& g) {
            ConsistentNetworks cn(g);
            std::uint64_t seen = 0;
            std::set<std::string> distinct;
            cn.for_each([&](const BooleanNetwork& f) {
                CHECK(interaction_graph(f) == g);
                CHECK(f == cn.at(seen));
                std::string key;
                for (std::size_t v = 1; v <= n; ++v) key += f.local(static_cast<Vertex>(v)).table_string() + "|";
                distinct.insert(key);
                ++seen;
                return true;
            });
            CHECK(seen == cn.count());
            CHECK(distinct.size() == seen);
            return true;
        });
    }
}

TEST_CASE("sampling") {
    CHECK(sample_consistent(positive_loop(), 5) == identity(1));
    CHECK(sample_consistent(figure1(5), 99) == sample_consistent(figure1(5), 99));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(interaction_graph(sample_consistent(figure1(5), seed)) == figure1(5));
    }
}

TEST_CASE("maximum fixed points") {
    CHECK(max_fixed_points(positive_two_cycle()) == 2);
    CHECK(max_fixed_points(negative_loop()) == 0);
    CHECK(max_fixed_points(figure1(5)) == 1);
}

TEST_CASE("antipodal fixed points") {
    auto na = check_antipodal_fixed_points(positive_two_cycle(), swap_network());
    CHECK(na.verdict == InstanceVerdict::not_applicable);
    CHECK(std::string(to_string(na.verdict)) == "not-applicable");

    std::uint64_t applicable = 0;
    for_each_simple_graph(3, [&](std::uint64_t, const SignedDigraph& g) {
        if (!analyze(g).unique_negative_strong) return true;
        for (const auto& f : enumerate_consistent(g)) {
            auto r = check_antipodal_fixed_points(g, f);
            if (r.verdict == InstanceVerdict::not_applicable) continue;
            ++applicable;
            CHECK(r.verdict == InstanceVerdict::holds);
            REQUIRE(r.witness);
            auto fps = fixed_points(f);
            CHECK(std::find(fps.begin(), fps.end(), *r.witness) != fps.end());
            CHECK(std::find(fps.begin(), fps.end(), r.witness->complement()) != fps.end());
        }
        return true;
    });
    CHECK(applicable > 0);
}

TEST_CASE("separation of fixed points") {
    CHECK(separate_fixed_points(negation(), true).holds);
    CHECK(separate_fixed_points(BooleanNetwork({LocalFunction(true)}), true).pairs.empty());
    CHECK(separate_fixed_points(identity(1), true).pairs.size() == 1);
    auto r = separate_fixed_points(swap_network(), true);
    CHECK(r.holds);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].x.to_string() == "00");
    CHECK(r.pairs[0].y.to_string() == "11");
    REQUIRE(r.pairs[0].cycle);
    CHECK(*r.pairs[0].cycle == SignedCycle({{1, 2, pos}, {2, 1, pos}}));
}
