#include "doctest.h"

#include "fincat/category.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace fincat;
using testsupport::make_cat;

namespace {

CatPtr walking_arrow() {
    return make_cat("arrow", {"A", "B"}, {{"f", "A", "B"}});
}

CatPtr two_groupoid() {
    return make_cat("grp2", {"A", "B"}, {{"s", "A", "B"}, {"t", "B", "A"}},
                    {{"t", "s", "idA"}, {"s", "t", "idB"}});
}

// u, v : X -> Y equalized by f : Y -> Z.
CatPtr equalized_pair() {
    return make_cat("eqpair", {"X", "Y", "Z"},
                    {{"u", "X", "Y"}, {"v", "X", "Y"}, {"f", "Y", "Z"}, {"w", "X", "Z"}},
                    {{"f", "u", "w"}, {"f", "v", "w"}});
}

CatPtr poset_chain() {
    return make_cat("chain", {"A", "B", "C"},
                    {{"ab", "A", "B"}, {"bc", "B", "C"}, {"ac", "A", "C"}},
                    {{"bc", "ab", "ac"}});
}

} // namespace

TEST_CASE("terminal category satisfies all laws") {
    auto t = terminal_category();
    CHECK(validate_category(*t).pass);
    CHECK(oracles::violated_laws(*t).empty());
}

TEST_CASE("fixtures satisfy all laws and agree with the definitional checker") {
    for (const auto& c : {walking_arrow(), two_groupoid(), equalized_pair(), poset_chain()}) {
        CHECK(validate_category(*c).pass);
        CHECK(oracles::violated_laws(*c).empty());
    }
}

TEST_CASE("wrong-codomain composite fails closure and names the pair") {
    FinCategory bad = *walking_arrow();
    bad.compose[{"idB", "f"}] = "idB"; // composite should have dom A
    Verdict v = validate_category(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.law == "closure");
    CHECK(v.witness.find("idB") != std::string::npos);
    CHECK(v.witness.find("f") != std::string::npos);
    CHECK(oracles::violated_laws(bad).count("closure"));
}

TEST_CASE("dangling references are a structural error, not a law failure") {
    FinCategory bad = *walking_arrow();
    bad.compose[{"idB", "ghost"}] = "f";
    Verdict v = validate_category(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.law == "structure");
    CHECK(oracles::violated_laws(bad).count("structure"));
}

TEST_CASE("missing composite is a totality failure") {
    FinCategory bad = *poset_chain();
    bad.compose.erase({"bc", "ab"});
    Verdict v = validate_category(bad);
    CHECK_FALSE(v.pass);
    CHECK(v.law == "totality");
}

TEST_CASE("broken associativity is reported with the triple") {
    // redirect bc∘ab to a second parallel morphism so that (idC,bc,ab) breaks
    auto c = make_cat("assoc", {"A", "B", "C"},
                      {{"ab", "A", "B"}, {"bc", "B", "C"}, {"ac", "A", "C"}, {"ac2", "A", "C"}},
                      {{"bc", "ab", "ac"}});
    FinCategory bad = *c;
    bad.compose[{"idC", "bc"}] = "bc";
    bad.compose[{"bc", "ab"}] = "ac";
    bad.compose[{"idC", "ac"}] = "ac2"; // breaks both identity and associativity
    Verdict v = validate_category(bad);
    CHECK_FALSE(v.pass);
    auto laws = oracles::violated_laws(bad);
    CHECK(laws.count(v.law));
}

TEST_CASE("identities are mono") {
    auto t = terminal_category();
    CHECK(is_mono(*t, "idT"));
}

TEST_CASE("a morphism equalizing two distinct pre-compositions is not mono") {
    auto c = equalized_pair();
    CHECK_FALSE(is_mono(*c, "f"));
    CHECK(is_mono(*c, "u"));
}

TEST_CASE("in a poset-shaped category every morphism is mono") {
    auto c = poset_chain();
    for (const auto& m : c->morphisms) CHECK(is_mono(*c, m.id));
}

TEST_CASE("identity is its own inverse") {
    auto t = terminal_category();
    CHECK(is_isomorphism(*t, "idT") == std::optional<std::string>("idT"));
}

TEST_CASE("the sole non-identity arrow has no inverse") {
    auto c = walking_arrow();
    CHECK_FALSE(is_isomorphism(*c, "f").has_value());
}

TEST_CASE("groupoid swap has the expected two-sided inverse") {
    auto c = two_groupoid();
    auto inv = is_isomorphism(*c, "s");
    REQUIRE(inv.has_value());
    CHECK(*inv == "t");
    // definitional re-check of the two compositions
    CHECK(c->composite("s", *inv) == std::optional<std::string>("idB"));
    CHECK(c->composite(*inv, "s") == std::optional<std::string>("idA"));
    CHECK(iso_exists(*c, "A", "B"));
}

TEST_CASE("predicates are deterministic") {
    auto c = equalized_pair();
    CHECK(is_mono(*c, "f") == is_mono(*c, "f"));
    Verdict a = validate_category(*c);
    Verdict b = validate_category(*c);
    CHECK(a.pass == b.pass);
    CHECK(a.law == b.law);
}
