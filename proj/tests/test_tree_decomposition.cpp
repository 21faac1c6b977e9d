#include <doctest.h>

#include <random>
#include <sstream>

#include "elps/generators.hpp"
#include "elps/parser.hpp"
#include "elps/tree_decomposition.hpp"
#include "fixtures.hpp"

using namespace elps;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Graph g;
    g.init(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (static_cast<double>(gen() >> 11) * 0x1.0p-53 < p)
                g.add_edge(u, v);
    g.finish();
    return g;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Graph g;
    g.init(n);
    for (std::uint32_t v = 1; v < n; ++v)
        g.add_edge(v, static_cast<std::uint32_t>(gen() % v));
    g.finish();
    return g;
}

Graph clique(std::size_t n) {
    Graph g;
    g.init(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    g.finish();
    return g;
}

}  // namespace

TEST_CASE("trees decompose at width one") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph t = random_tree(12, seed);
        TreeDecomposition td = decompose(t);
        CHECK(validate(td, t));
        CHECK(td.width() == 1);
        TreeDecomposition nice = make_nice(td);
        CHECK(validate(nice, t));
        CHECK(nice.width() == 1);
    }
}

TEST_CASE("empty graph decomposes to a single empty bag") {
    Graph g;
    TreeDecomposition td = decompose(g);
    CHECK(td.nodes.size() == 1);
    CHECK(td.width() == -1);
    TreeDecomposition nice = make_nice(td);
    CHECK(validate(nice, g));
    CHECK(nice.width() == -1);
    CHECK(nice.nodes[nice.root].type == NodeType::Leaf);
}

TEST_CASE("two-student epistemic primal graph has width one") {
    Program p = parse_program(fixtures::kSch2);
    Graph ep = epistemic_primal_graph(p);
    TreeDecomposition td = decompose(ep);
    CHECK(validate(td, ep));
    CHECK(td.width() == 1);
    TreeDecomposition nice = make_nice(td);
    CHECK(validate(nice, ep));
    CHECK(nice.width() == 1);
}

TEST_CASE("single bag becomes an intr/rem chain") {
    Graph g = clique(2);
    TreeDecomposition td = decompose(g);
    TreeDecomposition nice = make_nice(td);
    REQUIRE(validate(nice, g));
    CHECK(nice.is_nice());
    // a width-1 chain: leaf, two intr, then rem steps to the empty root
    int leafs = 0, intrs = 0, rems = 0;
    for (const TdNode& n : nice.nodes) {
        leafs += n.type == NodeType::Leaf;
        intrs += n.type == NodeType::Intr;
        rems += n.type == NodeType::Rem;
    }
    CHECK(leafs == 1);
    CHECK(intrs == 2);
    CHECK(rems == 2);
    CHECK(nice.nodes[nice.root].bag.empty());
}

TEST_CASE("already nice decompositions keep their width") {
    Graph g = random_graph(15, 0.2, 17);
    TreeDecomposition nice = make_nice(decompose(g));
    TreeDecomposition again = make_nice(nice);
    CHECK(validate(again, g));
    CHECK(again.width() == nice.width());
}

TEST_CASE("validate reports missing vertices, edges and disconnections") {
    Graph g = clique(3);
    TreeDecomposition missing_vertex;
    missing_vertex.nodes.push_back(TdNode{{0, 1}, -1, {}, NodeType::Plain, 0, -1});
    missing_vertex.root = 0;
    TdDiagnostics d1 = validate(missing_vertex, g);
    CHECK_FALSE(d1.ok);
    CHECK(d1.violated == 1);

    TreeDecomposition missing_edge;
    missing_edge.nodes.push_back(TdNode{{0, 1}, -1, {0}, NodeType::Plain, 0, -1});
    missing_edge.nodes.push_back(TdNode{{2}, 0, {}, NodeType::Plain, 0, -1});
    missing_edge.nodes[0].children = {1};
    missing_edge.root = 0;
    TdDiagnostics d2 = validate(missing_edge, g);
    CHECK_FALSE(d2.ok);
    CHECK(d2.violated == 2);

    Graph path;
    path.init(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.finish();
    TreeDecomposition broken;
    broken.nodes.resize(3);
    broken.nodes[0].bag = {0, 1};
    broken.nodes[1].bag = {1, 2};
    broken.nodes[2].bag = {0, 2};
    broken.nodes[0].children = {1};
    broken.nodes[1].children = {2};
    broken.nodes[1].parent = 0;
    broken.nodes[2].parent = 1;
    broken.root = 0;
    TdDiagnostics d3 = validate(broken, path);
    CHECK_FALSE(d3.ok);
    CHECK(d3.violated == 3);

    TreeDecomposition fine = decompose(path);
    TdDiagnostics d4 = validate(fine, path);
    CHECK(d4.ok);
    CHECK(d4.width == 1);
}

TEST_CASE("random graphs validate and keep width through make_nice") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(5 + seed % 30, 0.1, 1000 + seed);
        for (Heuristic h : {Heuristic::MinFill, Heuristic::MinDegree}) {
            TreeDecomposition td = decompose(g, h);
            REQUIRE(validate(td, g));
            TreeDecomposition nice = make_nice(td);
            REQUIRE(validate(nice, g));
            CHECK(nice.is_nice());
            CHECK(nice.width() == td.width());
            CHECK(static_cast<int>(g.vertex_count) - 1 >= td.width());
        }
    }
}

TEST_CASE("cliques decompose at exactly n-1") {
    for (std::size_t n : {2u, 4u, 7u}) {
        Graph g = clique(n);
        CHECK(decompose(g).width() == static_cast<int>(n) - 1);
    }
}

TEST_CASE("post order is a total order") {
    Graph g = random_graph(20, 0.15, 5);
    TreeDecomposition nice = make_nice(decompose(g));
    std::vector<char> seen(nice.nodes.size(), 0);
    for (const TdNode& n : nice.nodes) {
        REQUIRE(n.post_order >= 0);
        REQUIRE(n.post_order < static_cast<int>(nice.nodes.size()));
        CHECK_FALSE(seen[n.post_order]);
        seen[n.post_order] = 1;
    }
    // children precede parents
    for (const TdNode& n : nice.nodes)
        for (int c : n.children)
            CHECK(nice.nodes[c].post_order < n.post_order);
}

TEST_CASE("scholarship widths stay flat as students are added") {
    for (std::size_t n = 1; n <= 8; ++n) {
        Program p = parse_program(generate_scholarship(n));
        CHECK(decompose(epistemic_primal_graph(p)).width() == 1);
        CHECK(decompose(primal_graph(p)).width() <= 2);
    }
}

TEST_CASE("exchange format round trip") {
    Graph g = random_graph(8, 0.3, 42);
    TreeDecomposition td = make_nice(decompose(g));
    std::stringstream buffer;
    write_td(buffer, td, g.vertex_count);
    TreeDecomposition back = read_td(buffer);
    REQUIRE(back.nodes.size() == td.nodes.size());
    CHECK(validate(back, g).ok);
    CHECK(back.width() == td.width());
}
