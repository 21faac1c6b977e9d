#include <doctest.h>

#include <random>

#include "elps/generators.hpp"
#include "elps/parser.hpp"
#include "elps/reducts.hpp"
#include "fixtures.hpp"

using namespace elps;

namespace {

Cwi cwi_of(const Program& p, const std::vector<std::pair<const char*, Truth>>& assignments,
           Truth rest = Truth::Unknown) {
    Cwi out(p.atom_table().size(), rest);
    for (auto [name, value] : assignments)
        out.set(p.atom_table().id_of(name), value);
    return out;
}

// random full CWI, deterministic per seed
Cwi random_cwi(std::size_t n_atoms, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Cwi out(n_atoms);
    static constexpr Truth kStatuses[3] = {Truth::True, Truth::False, Truth::Unknown};
    for (AtomId a = 0; a < n_atoms; ++a)
        out.set(a, kStatuses[gen() % 3]);
    return out;
}

}  // namespace

TEST_CASE("reduct with all epistemic atoms unknown turns the interview rule into a fact") {
    Program p = parse_program(fixtures::kSch1);
    PlainProgram q = epistemic_reduct(p, cwi_of(p, {{"interview", Truth::True}}));
    REQUIRE(q.rules().size() == 5);
    const PlainRule& interview = q.rules()[3];
    CHECK(interview.head == AtomSet{p.atom_table().id_of("interview")});
    CHECK(interview.body.empty());
}

TEST_CASE("reduct keeps the literal whose inner atom is held true") {
    Program p = parse_program(fixtures::kSch1);
    PlainProgram q = epistemic_reduct(p, cwi_of(p, {{"eligible", Truth::True}}));
    const PlainRule& interview = q.rules()[3];
    REQUIRE(interview.body.size() == 1);
    CHECK(interview.body[0].atom == p.atom_table().id_of("eligible"));
    CHECK(interview.body[0].negations == 1);
}

TEST_CASE("reduct of an epistemic-free program is the program itself") {
    Program p = parse_program("a :- b, ~c.  d | e :- a.");
    PlainProgram q = epistemic_reduct(p, Cwi(p.atom_table().size(), Truth::Unknown));
    REQUIRE(q.rules().size() == 2);
    CHECK(q.rules()[0].head == p.rules()[0].head);
    CHECK(q.rules()[1].head == p.rules()[1].head);
    CHECK(q.rules()[0].body.size() == 2);
}

TEST_CASE("negative occurrence of a dropped epistemic literal deletes the rule") {
    Program p = parse_program("x :- ~not a.  y :- ~not b.");
    // a true: ~not a -> ~~a, rule stays; b unknown: ~not b -> ~true, rule goes
    PlainProgram q = epistemic_reduct(p, cwi_of(p, {{"a", Truth::True}, {"b", Truth::Unknown}}));
    REQUIRE(q.rules().size() == 1);
    CHECK(q.rules()[0].head == AtomSet{p.atom_table().id_of("x")});
    REQUIRE(q.rules()[0].body.size() == 1);
    CHECK(q.rules()[0].body[0].negations == 2);
}

TEST_CASE("triple negation collapses") {
    Program p = parse_program("x :- ~not ~a.");
    PlainProgram q = epistemic_reduct(p, cwi_of(p, {{"a", Truth::False}}));
    REQUIRE(q.rules().size() == 1);
    REQUIRE(q.rules()[0].body.size() == 1);
    CHECK(q.rules()[0].body[0].negations == 1);
}

TEST_CASE("reduct scope violation") {
    Program p = parse_program(fixtures::kLoop);
    CHECK_THROWS_AS(epistemic_reduct(p, Cwi(p.atom_table().size(), Truth::Unset)), ScopeError);
}

TEST_CASE("gl reduct on the even loop") {
    Program p = parse_program("a :- ~b.  b :- ~a.");
    PlainProgram plain = epistemic_reduct(p, Cwi(p.atom_table().size(), Truth::Unknown));
    AtomId a = p.atom_table().id_of("a");
    PlainProgram reduct = gl_reduct(plain, {a});
    REQUIRE(reduct.rules().size() == 1);
    CHECK(reduct.rules()[0].head == AtomSet{a});
    CHECK(reduct.rules()[0].body.empty());
}

TEST_CASE("gl reduct with double negation") {
    PlainProgram p(std::make_shared<AtomTable>(), {PlainRule{{0}, {{0, 2}}}}, {0});
    PlainProgram kept = gl_reduct(p, {0});
    REQUIRE(kept.rules().size() == 1);
    CHECK(kept.rules()[0].body.empty());
    PlainProgram dropped = gl_reduct(p, {});
    CHECK(dropped.rules().empty());
}

TEST_CASE("gl reduct leaves positive programs unchanged") {
    Program p = parse_program("a :- b.  c | d :- a.");
    PlainProgram plain = epistemic_reduct(p, Cwi(p.atom_table().size(), Truth::Unknown));
    PlainProgram reduct = gl_reduct(plain, {0, 1});
    CHECK(reduct.rules().size() == plain.rules().size());
    CHECK_FALSE(reduct.has_negation());
}

TEST_CASE("satisfies basics") {
    Program p = parse_program("a :- ~b.");
    AtomId a = p.atom_table().id_of("a");
    CHECK(satisfies({a}, p.rules()[0]));
    CHECK_FALSE(satisfies({}, p.rules()[0]));
}

TEST_CASE("satisfies rejects epistemic literals") {
    Program p = parse_program(fixtures::kLoop);
    CHECK_THROWS_AS(satisfies({}, p.rules()[0]), ScopeError);
}

TEST_CASE("unsupported fact falsifies the sch1 reduct") {
    Program p = parse_program(fixtures::kSch1);
    PlainProgram q = epistemic_reduct(p, cwi_of(p, {{"interview", Truth::True}}));
    AtomSet m{p.atom_table().id_of("highGPA"), p.atom_table().id_of("eligible")};
    sort_unique(m);
    CHECK_FALSE(satisfies(m, q));
}

TEST_CASE("reduct properties over a random corpus") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomProgramParams params;
        params.n_atoms = 5;
        params.n_rules = 5;
        params.p_epistemic = 0.4;
        params.p_neg = 0.4;
        params.seed = seed;
        Program p = parse_program(generate_random(params));
        Cwi i = random_cwi(p.atom_table().size(), seed * 31 + 7);
        PlainProgram plain = epistemic_reduct(p, i);
        CHECK(plain.rules().size() <= p.rules().size());

        std::mt19937_64 gen(seed);
        for (int trial = 0; trial < 8; ++trial) {
            AtomSet m;
            for (AtomId a = 0; a < p.atom_table().size(); ++a)
                if (gen() & 1)
                    m.push_back(a);
            PlainProgram reduct = gl_reduct(plain, m);
            CHECK(reduct.rules().size() <= plain.rules().size());
            CHECK_FALSE(reduct.has_negation());
            // any model of the program also models its own reduct
            if (satisfies(m, plain))
                CHECK(satisfies(m, reduct));
        }
    }
}
