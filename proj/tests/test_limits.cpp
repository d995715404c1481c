#include <set>

#include "doctest.h"

#include "fincat/limits.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace fincat;
using testsupport::make_cat;
using testsupport::with_u;

namespace {

ConcreteCategory concrete_terminal(std::vector<std::string> carrier = {"t"}) {
    return with_u(terminal_category(), {{"T", std::move(carrier)}}, {});
}

ConcreteCategory two_groupoid_c() {
    auto c = make_cat("grp2", {"A", "B"}, {{"s", "A", "B"}, {"t", "B", "A"}},
                      {{"t", "s", "idA"}, {"s", "t", "idB"}});
    return with_u(c, {{"A", {"x"}}, {"B", {"y"}}},
                  {{"s", {{"x", "y"}}}, {"t", {{"y", "x"}}}});
}

ConcreteCategory z2_group() {
    auto c = make_cat("z2", {"X"}, {{"sg", "X", "X"}}, {{"sg", "sg", "idX"}});
    return with_u(c, {{"X", {"0", "1"}}}, {{"sg", {{"0", "1"}, {"1", "0"}}}});
}

ConcreteCategory subsets_of_a() {
    ConcreteBuilder b("sub_a");
    b.add_object("E", {});
    b.add_object("Sa", {"a"});
    b.add_morphism("e", "E", "Sa", {});
    REQUIRE(b.close());
    return b.result();
}

// Whiskered comparison: phi ∘ H as component lookup.
bool equals_whiskered(const NatTrans& phi, const Functor& h, const NatTrans& psi) {
    for (const auto& [x, hx] : h.obj_map)
        if (phi.at.at(hx) != psi.at.at(x)) return false;
    return true;
}

// Brute-force factorization oracle: all functors into the inserter with
// P∘H = h and phi∘H = psi.
std::vector<Functor> inserter_factor_oracle(const InserterResult& r, const Functor& h,
                                            const NatTrans& psi) {
    std::vector<Functor> out;
    for (const auto& cand : enumerate_functors(h.source, r.ins)) {
        if (!validate_functor(cand).pass) continue;
        if (!functors_equal(compose_functors(cand, r.projection), h)) continue;
        if (!equals_whiskered(r.phi, cand, psi)) continue;
        out.push_back(cand);
    }
    return out;
}

std::vector<Functor> equifier_factor_oracle(const EquifierResult& r, const Functor& h) {
    std::vector<Functor> out;
    for (const auto& cand : enumerate_functors(h.source, r.eq))
        if (validate_functor(cand).pass &&
            functors_equal(compose_functors(cand, r.inclusion), h))
            out.push_back(cand);
    return out;
}

} // namespace

TEST_CASE("empty product is the terminal category with empty carrier") {
    auto p = product({});
    CHECK(p.concrete.cat->objects.size() == 1);
    CHECK(p.concrete.u.carrier.begin()->second.empty());
    CHECK(validate_category(*p.concrete.cat).pass);
    CHECK(validate_concrete(p.concrete).pass);
}

TEST_CASE("binary product has componentwise size and tagged carriers") {
    auto k1 = two_groupoid_c();
    auto k2 = z2_group();
    auto p = product({k1, k2});
    CHECK(p.concrete.cat->objects.size() ==
          k1.cat->objects.size() * k2.cat->objects.size());
    CHECK(p.concrete.cat->morphisms.size() ==
          k1.cat->morphisms.size() * k2.cat->morphisms.size());
    CHECK(validate_category(*p.concrete.cat).pass);
    CHECK(validate_concrete(p.concrete).pass);

    const auto& car = p.concrete.u.carrier.at("A|X");
    CHECK(car == std::vector<std::string>{"1@x", "2@0", "2@1"});

    for (const auto& proj : p.projections) CHECK(validate_functor(proj).pass);
}

TEST_CASE("product of faithful structures is faithful") {
    auto k1 = two_groupoid_c();
    auto k2 = z2_group();
    REQUIRE(is_faithful_u(k1));
    REQUIRE(is_faithful_u(k2));
    auto p = product({k1, k2});
    CHECK(is_faithful_u(p.concrete));
}

TEST_CASE("product preserves coherence and concrete monos on fixtures") {
    auto k = subsets_of_a();
    REQUIRE(is_coherent(k).pass);
    REQUIRE(has_concrete_monos(k));
    auto p = product({k, k});
    CHECK(is_coherent(p.concrete).pass);
    CHECK(has_concrete_monos(p.concrete));
    CHECK(oracles::coherent_oracle(p.concrete));
}

TEST_CASE("comma of identities on the terminal category is terminal") {
    auto t = terminal_category();
    auto r = comma(identity_functor(t), identity_functor(t));
    CHECK(r.comma->objects.size() == 1);
    CHECK(r.comma->morphisms.size() == 1);
    CHECK(validate_category(*r.comma).pass);
}

TEST_CASE("comma Id↓Id is the arrow category: one object per morphism") {
    auto k = two_groupoid_c().cat;
    auto r = comma(identity_functor(k), identity_functor(k));
    CHECK(r.comma->objects.size() == k->morphisms.size());
    CHECK(validate_category(*r.comma).pass);
    CHECK(validate_functor(r.proj_src).pass);
    CHECK(validate_functor(r.proj_dst).pass);
}

TEST_CASE("comma of constant functors is a product sliced by a hom-set") {
    auto k = make_cat("disc2", {"A", "B"}, {});
    auto l = z2_group().cat;
    Functor f, g;
    f.source = g.source = k;
    f.target = g.target = l;
    for (const auto& o : k->objects) {
        f.obj_map[o] = "X";
        g.obj_map[o] = "X";
    }
    for (const auto& m : k->morphisms) {
        f.mor_map[m.id] = "idX";
        g.mor_map[m.id] = "idX";
    }
    auto r = comma(f, g);
    // |obj| = |K| * |K| * |hom(X,X)|
    CHECK(r.comma->objects.size() == 2 * 2 * 2);
    CHECK(validate_category(*r.comma).pass);
}

TEST_CASE("inserter of identities collects endomorphisms") {
    auto t = terminal_category();
    auto rt = inserter(identity_functor(t), identity_functor(t));
    CHECK(rt.ins->objects.size() == 1);
    CHECK(validate_category(*rt.ins).pass);

    auto k = two_groupoid_c().cat;
    auto rk = inserter(identity_functor(k), identity_functor(k));
    std::size_t endos = 0;
    for (const auto& m : k->morphisms)
        if (m.dom == m.cod) ++endos;
    CHECK(rk.ins->objects.size() == endos);
    CHECK(validate_category(*rk.ins).pass);
}

TEST_CASE("inserter projection is faithful and phi is natural") {
    auto k = two_groupoid_c();
    auto r = inserter(identity_functor(k.cat), identity_functor(k.cat));
    CHECK(validate_functor(r.projection).pass);
    CHECK(is_faithful(r.projection));
    CHECK(validate_nat(r.phi).pass);

    auto conc = inserter_concrete(r, k);
    CHECK(validate_concrete(conc).pass);
    CHECK(is_faithful_u(conc));
}

TEST_CASE("inserter objects are exactly the equal-index comma objects") {
    auto k = two_groupoid_c().cat;
    auto l = z2_group().cat;
    auto fs = enumerate_functors(k, l);
    REQUIRE(fs.size() >= 2);
    const Functor& f = fs.front();
    const Functor& g = fs.back();
    auto ci = comma(f, g);
    auto ri = inserter(f, g);
    std::size_t equal_index = 0;
    for (const auto& o : ci.comma->objects)
        if (ci.proj_src.obj_map.at(o) == ci.proj_dst.obj_map.at(o)) ++equal_index;
    CHECK(ri.ins->objects.size() == equal_index);
    CHECK(validate_category(*ri.ins).pass);
    CHECK(validate_nat(ri.phi).pass);
}

TEST_CASE("equifier of equal transformations is the whole category") {
    auto k = two_groupoid_c().cat;
    Functor id = identity_functor(k);
    NatTrans n = identity_nat(id);
    auto r = equifier(n, n);
    CHECK(r.eq->objects.size() == k->objects.size());
    CHECK(r.eq->morphisms.size() == k->morphisms.size());
    CHECK(is_full(r.inclusion));
    CHECK(is_faithful(r.inclusion));
}

TEST_CASE("equifier of everywhere-distinct transformations is empty") {
    auto k = z2_group().cat;
    Functor id = identity_functor(k);
    NatTrans phi = identity_nat(id);
    NatTrans psi = phi;
    psi.at["X"] = "sg";
    REQUIRE(validate_nat(psi).pass);
    auto r = equifier(phi, psi);
    CHECK(r.eq->objects.empty());
    CHECK(validate_category(*r.eq).pass);
}

TEST_CASE("equifier object set matches the componentwise comparison") {
    auto k = z2_group().cat;
    Functor id = identity_functor(k);
    auto nats = enumerate_nats(id, id);
    for (const auto& phi : nats)
        for (const auto& psi : nats) {
            auto r = equifier(phi, psi);
            std::set<std::string> expect;
            for (const auto& o : k->objects)
                if (phi.at.at(o) == psi.at.at(o)) expect.insert(o);
            std::set<std::string> got(r.eq->objects.begin(), r.eq->objects.end());
            CHECK(got == expect);
        }
}

TEST_CASE("equifier inclusion is replete: isomorphic objects agree on membership") {
    // two isomorphic objects; transformations agreeing on one must agree on the other
    auto k = two_groupoid_c().cat;
    Functor id = identity_functor(k);
    auto nats = enumerate_nats(id, id);
    for (const auto& phi : nats)
        for (const auto& psi : nats) {
            auto r = equifier(phi, psi);
            std::set<std::string> kept(r.eq->objects.begin(), r.eq->objects.end());
            for (const auto& a : r.eq->objects)
                for (const auto& b : k->objects)
                    if (iso_exists(*k, a, b)) CHECK(kept.count(b));
        }
}

TEST_CASE("factorizing the projection itself gives the identity on the inserter") {
    auto k = two_groupoid_c().cat;
    Functor id = identity_functor(k);
    auto r = inserter(id, id);
    Functor h = inserter_factorize(r, id, id, r.projection, r.phi);
    CHECK(functors_equal(h, identity_functor(r.ins)));
}

TEST_CASE("factorizing a point picks the named inserter object") {
    auto k = two_groupoid_c().cat;
    auto t = terminal_category();
    Functor id = identity_functor(k);
    auto r = inserter(id, id);
    Functor pick;
    pick.source = t;
    pick.target = k;
    pick.obj_map = {{"T", "A"}};
    pick.mor_map = {{"idT", "idA"}};
    NatTrans psi;
    psi.f = compose_functors(pick, id);
    psi.g = compose_functors(pick, id);
    psi.at = {{"T", "idA"}};
    Functor h = inserter_factorize(r, id, id, pick, psi);
    CHECK(validate_functor(h).pass);
    CHECK(h.obj_map.at("T") == "A|idA");
}

TEST_CASE("inserter factorization matches the unique brute-force functor") {
    auto k = two_groupoid_c().cat;
    auto t = terminal_category();
    Functor id = identity_functor(k);
    auto r = inserter(id, id);

    std::vector<std::pair<Functor, NatTrans>> cases;
    {
        NatTrans psi;
        Functor pick;
        pick.source = t;
        pick.target = k;
        pick.obj_map = {{"T", "B"}};
        pick.mor_map = {{"idT", "idB"}};
        psi.f = compose_functors(pick, id);
        psi.g = compose_functors(pick, id);
        psi.at = {{"T", "idB"}};
        cases.emplace_back(pick, psi);
    }
    cases.emplace_back(r.projection, r.phi);

    for (const auto& [h, psi] : cases) {
        Functor built = inserter_factorize(r, id, id, h, psi);
        CHECK(validate_functor(built).pass);
        auto all = inserter_factor_oracle(r, h, psi);
        REQUIRE(all.size() == 1);
        CHECK(functors_equal(all.front(), built));
    }
}

TEST_CASE("equifier factorization corestricts and matches brute force") {
    auto k = z2_group().cat;
    Functor id = identity_functor(k);
    NatTrans phi = identity_nat(id);
    auto r = equifier(phi, phi);
    Functor h = equifier_factorize(r, phi, phi, r.inclusion);
    CHECK(functors_equal(h, identity_functor(r.eq)));

    auto all = equifier_factor_oracle(r, r.inclusion);
    REQUIRE(all.size() == 1);
    CHECK(functors_equal(all.front(), h));
}

TEST_CASE("equifier factorization rejects disagreeing functors naming the object") {
    auto k = z2_group().cat;
    Functor id = identity_functor(k);
    NatTrans phi = identity_nat(id);
    NatTrans psi = phi;
    psi.at["X"] = "sg";
    auto r = equifier(phi, psi); // empty
    try {
        equifier_factorize(r, phi, psi, id);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("X") != std::string::npos);
    }
}

TEST_CASE("pullback of a category with itself contains the diagonal") {
    auto k = two_groupoid_c();
    auto r = pullback(k, k);
    std::set<std::string> objs(r.pb.cat->objects.begin(), r.pb.cat->objects.end());
    for (const auto& o : k.cat->objects) CHECK(objs.count(o + "|" + o));
    CHECK(validate_category(*r.pb.cat).pass);
    CHECK(validate_concrete(r.pb).pass);
}

TEST_CASE("transportable pair: comparison functor is an equivalence") {
    auto base = concrete_terminal({"a"});
    Universe u;
    u.groups = {{"a", "b"}};
    auto closed = make_transportable(base, u);
    auto cmp = compare_pb_psb(closed, closed);
    CHECK(cmp.verdict.pass);
    CHECK(validate_functor(cmp.comparison).pass);
}

TEST_CASE("non-transportable control pair: empty pullback, nonempty pseudopullback") {
    auto k1 = concrete_terminal({"a"});
    auto k2 = concrete_terminal({"b"});
    auto cmp = compare_pb_psb(k1, k2);
    CHECK(cmp.pb.pb.cat->objects.empty());
    CHECK(cmp.psb.psb.cat->objects.size() == 1);
    CHECK_FALSE(cmp.verdict.pass);
}
