#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "elps/graphs.hpp"
#include "elps/parser.hpp"
#include "fixtures.hpp"

using namespace elps;

namespace {

AtomSet ids(const Program& p, std::initializer_list<const char*> names) {
    AtomSet out;
    for (const char* n : names)
        out.push_back(p.atom_table().id_of(n));
    sort_unique(out);
    return out;
}

bool atoms_adjacent(const Graph& g, const Program& p, const char* a, const char* b) {
    AtomId ia = p.atom_table().id_of(a), ib = p.atom_table().id_of(b);
    std::uint32_t va = 0, vb = 0;
    for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
        if (g.label[v] == ia)
            va = v;
        if (g.label[v] == ib)
            vb = v;
    }
    return g.has_edge(va, vb);
}

}  // namespace

TEST_CASE("primal graph of the scholarship block") {
    Program p = parse_program(fixtures::kSch1);
    Graph g = primal_graph(p);
    CHECK(g.vertex_count == 5);
    CHECK(atoms_adjacent(g, p, "eligible", "highGPA"));
    CHECK(atoms_adjacent(g, p, "interview", "eligible"));
    CHECK(atoms_adjacent(g, p, "interview", "ineligible"));
    CHECK(atoms_adjacent(g, p, "eligible", "ineligible"));
    CHECK(atoms_adjacent(g, p, "lowGPA", "highGPA"));
    CHECK(atoms_adjacent(g, p, "ineligible", "lowGPA"));
    CHECK_FALSE(atoms_adjacent(g, p, "interview", "highGPA"));
    // independent pairwise scan: an edge iff some rule contains both atoms
    std::size_t expected_edges = 0;
    for (AtomId a = 0; a < 5; ++a)
        for (AtomId b = a + 1; b < 5; ++b) {
            bool together = std::any_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) {
                return sorted_contains(r.atoms(), a) && sorted_contains(r.atoms(), b);
            });
            expected_edges += together;
            CHECK(g.has_edge(a, b) == together);
        }
    CHECK(g.edge_count() == expected_edges);
}

TEST_CASE("one rule forms a clique") {
    Program p = parse_program("a | b | c.");
    Graph g = primal_graph(p);
    CHECK(g.vertex_count == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("primal graph of the empty program") {
    Graph g = primal_graph(parse_program(fixtures::kEmpty));
    CHECK(g.vertex_count == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("non-epistemic reachability on two students") {
    Program p = parse_program(fixtures::kSch2);
    CHECK(conn(p, ids(p, {"eligible_mike"})) ==
          ids(p, {"eligible_mike", "highGPA_mike", "lowGPA_mike", "interview_mike"}));
    CHECK(conn(p, ids(p, {"eligible_mike", "ineligible_mike"})) ==
          ids(p, {"eligible_mike", "ineligible_mike", "highGPA_mike", "lowGPA_mike",
                  "interview_mike"}));
    CHECK(conn(p, {}).empty());
    CHECK_THROWS_AS(conn(p, ids(p, {"highGPA_mike"})), ScopeError);
}

TEST_CASE("conn is monotone") {
    Program p = parse_program(fixtures::kSch2);
    AtomSet small = ids(p, {"eligible_mike"});
    AtomSet big = ids(p, {"eligible_mike", "ineligible_mike", "eligible_mark"});
    CHECK(sorted_subset(conn(p, small), conn(p, big)));
}

TEST_CASE("epistemic primal graph of two students") {
    Program p = parse_program(fixtures::kSch2);
    Graph g = epistemic_primal_graph(p);
    CHECK(g.vertex_count == 4);
    CHECK(g.edge_count() == 2);
    CHECK(atoms_adjacent(g, p, "eligible_mike", "ineligible_mike"));
    CHECK(atoms_adjacent(g, p, "eligible_mark", "ineligible_mark"));
    CHECK_FALSE(atoms_adjacent(g, p, "eligible_mike", "eligible_mark"));
}

TEST_CASE("epistemic primal graph degenerate cases") {
    Graph loop = epistemic_primal_graph(parse_program(fixtures::kLoop));
    CHECK(loop.vertex_count == 1);
    CHECK(loop.edge_count() == 0);
    Graph none = epistemic_primal_graph(parse_program("a :- ~b."));
    CHECK(none.vertex_count == 0);
}

TEST_CASE("every epistemic edge has a witnessing path") {
    Program p = parse_program(fixtures::kSharing);
    Graph g = epistemic_primal_graph(p);
    for (std::uint32_t u = 0; u < g.vertex_count; ++u)
        for (std::uint32_t v : g.adj[u]) {
            if (v < u)
                continue;
            // endpoints must see each other through non-epistemic vertices only
            AtomSet reach = conn(p, {g.label[u]});
            AtomSet closure = reach;
            // a direct edge or a shared non-epistemic neighbor witnesses the path
            Graph primal = primal_graph(p);
            bool direct = atoms_adjacent(primal, p, p.atom_name(g.label[u]).c_str(),
                                         p.atom_name(g.label[v]).c_str());
            bool through = !sorted_intersection(closure, conn(p, {g.label[v]})).empty();
            CHECK((direct || through));
        }
}

TEST_CASE("epistemic literal atoms of one rule form a clique") {
    Program p = parse_program("x :- not a, not b, not c.  y :- not a, d.");
    Graph g = epistemic_primal_graph(p);
    CHECK(g.vertex_count == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("atom-disjoint rule groups decompose both graphs") {
    Program joint = parse_program("a :- not b.  c :- not d.");
    Graph primal = primal_graph(joint);
    CHECK(primal.edge_count() == 2);
    Graph ep = epistemic_primal_graph(joint);
    CHECK(ep.vertex_count == 2);
    CHECK(ep.edge_count() == 0);
}

TEST_CASE("incidence graph sizes") {
    Program loop = parse_program(fixtures::kLoop);
    Graph g = incidence_graph(loop);
    CHECK(g.vertex_count == 2);
    CHECK(g.edge_count() == 1);
    CHECK(incidence_graph(parse_program(fixtures::kEmpty)).vertex_count == 0);
    Graph sch = incidence_graph(parse_program(fixtures::kSch1));
    CHECK(sch.vertex_count == 10);
    CHECK(sch.edge_count() == 11);
}

TEST_CASE("graph dump format") {
    Program p = parse_program(fixtures::kChoice);
    std::ostringstream out;
    write_graph(out, primal_graph(p));
    CHECK(out.str() == "p tw 2 1\n1 2\n");
}
