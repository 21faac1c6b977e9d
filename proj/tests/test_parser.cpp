#include <doctest.h>

#include "elps/generators.hpp"
#include "elps/parser.hpp"
#include "fixtures.hpp"

using namespace elps;

namespace {

bool same_program(const Program& a, const Program& b) {
    if (a.atom_table().size() != b.atom_table().size() || a.rules().size() != b.rules().size())
        return false;
    for (AtomId i = 0; i < a.atom_table().size(); ++i)
        if (a.atom_name(i) != b.atom_name(i))
            return false;
    for (std::size_t r = 0; r < a.rules().size(); ++r)
        if (a.rules()[r].head != b.rules()[r].head || a.rules()[r].body != b.rules()[r].body)
            return false;
    return true;
}

}  // namespace

TEST_CASE("single epistemic self-loop rule") {
    Program p = parse_program(fixtures::kLoop);
    REQUIRE(p.atom_table().size() == 1);
    REQUIRE(p.rules().size() == 1);
    const Rule& r = p.rules()[0];
    CHECK(r.head == AtomSet{0});
    REQUIRE(r.body.size() == 1);
    CHECK(r.body[0].atom == 0);
    CHECK_FALSE(r.body[0].outer_neg);
    CHECK(r.body[0].epistemic);
    CHECK_FALSE(r.body[0].inner_neg);
}

TEST_CASE("empty input") {
    Program p = parse_program(fixtures::kEmpty);
    CHECK(p.atom_table().size() == 0);
    CHECK(p.rules().size() == 0);
}

TEST_CASE("scholarship block") {
    Program p = parse_program(fixtures::kSch1);
    CHECK(p.atom_table().size() == 5);
    CHECK(p.rules().size() == 5);
    AtomSet expected{p.atom_table().id_of("eligible"), p.atom_table().id_of("ineligible")};
    sort_unique(expected);
    CHECK(p.elit() == expected);
    // interning follows first textual occurrence
    CHECK(p.atom_name(0) == "eligible");
    CHECK(p.atom_name(1) == "highGPA");
}

TEST_CASE("all six body shapes") {
    Program p = parse_program("x :- a, ~b, not c, not ~d, ~not e, ~not ~f.");
    const auto& body = p.rules()[0].body;
    REQUIRE(body.size() == 6);
    auto find = [&](const char* name) {
        AtomId id = p.atom_table().id_of(name);
        for (const BodyLiteral& lit : body)
            if (lit.atom == id)
                return lit;
        FAIL("literal not found");
        return BodyLiteral{};
    };
    CHECK(find("a") == BodyLiteral{p.atom_table().id_of("a"), false, false, false});
    CHECK(find("b") == BodyLiteral{p.atom_table().id_of("b"), true, false, false});
    CHECK(find("c") == BodyLiteral{p.atom_table().id_of("c"), false, true, false});
    CHECK(find("d") == BodyLiteral{p.atom_table().id_of("d"), false, true, true});
    CHECK(find("e") == BodyLiteral{p.atom_table().id_of("e"), true, true, false});
    CHECK(find("f") == BodyLiteral{p.atom_table().id_of("f"), true, true, true});
}

TEST_CASE("atoms with argument lists are opaque") {
    Program p = parse_program("interview(mike) :- not eligible(mike).");
    CHECK(p.atom_table().contains("interview(mike)"));
    CHECK(p.atom_table().contains("eligible(mike)"));
    // whitespace inside the argument list does not split atoms
    Program q = parse_program("f( a , b1 ).");
    CHECK(q.atom_table().contains("f(a,b1)"));
}

TEST_CASE("constraints, facts and the empty rule") {
    Program p = parse_program(":- a.  b.  .");
    REQUIRE(p.rules().size() == 3);
    CHECK(p.rules()[0].head.empty());
    CHECK(p.rules()[1].body.empty());
    CHECK(p.rules()[2].head.empty());
    CHECK(p.rules()[2].body.empty());
}

TEST_CASE("duplicate rules are preserved") {
    Program p = parse_program("a :- b.  a :- b.");
    CHECK(p.rules().size() == 2);
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
    try {
        parse_program("a :- b.\nc :- | d.");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 6);
    }
}

TEST_CASE("reserved word not") {
    CHECK_THROWS_AS(parse_program("not :- a."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- b, not."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- not not b."), ParseError);
}

TEST_CASE("inner tilde needs the epistemic operator") {
    CHECK_THROWS_AS(parse_program("a :- ~~b."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- ~ ~ b."), ParseError);
}

TEST_CASE("uppercase start and bad constants rejected") {
    CHECK_THROWS_AS(parse_program("Abc."), ParseError);
    CHECK_THROWS_AS(parse_program("f(X)."), ParseError);
}

TEST_CASE("comments and whitespace") {
    Program p = parse_program("% comment line\n  a :- % inline\n     not b .");
    CHECK(p.rules().size() == 1);
    CHECK(p.atom_table().size() == 2);
}

TEST_CASE("print/parse round trip") {
    auto roundtrips = [](const std::string& text) {
        Program once = parse_program(text);
        Program twice = parse_program(print_program(once));
        return same_program(once, twice);
    };
    CHECK(roundtrips(fixtures::kSch1));
    CHECK(roundtrips(fixtures::kSch2));
    CHECK(roundtrips(fixtures::kLoop));
    CHECK(roundtrips(fixtures::kChoice));
    CHECK(roundtrips(fixtures::kSharing));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RandomProgramParams params;
        params.n_atoms = 5;
        params.n_rules = 6;
        params.p_epistemic = 0.5;
        params.p_neg = 0.4;
        params.seed = seed;
        CHECK(roundtrips(generate_random(params)));
    }
}
