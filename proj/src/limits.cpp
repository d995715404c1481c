#include "fincat/limits.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat {

std::string product_tag(std::size_t component, const std::string& element) {
    return std::to_string(component + 1) + "@" + element;
}

namespace {

std::string tag_elem(std::size_t i, const std::string& e) { return product_tag(i, e); }

} // namespace

ProductResult product(const std::vector<ConcreteCategory>& ks) {
    ProductResult out;
    if (ks.empty()) {
        auto t = terminal_category("prod");
        SetFunctor u;
        u.carrier["T"] = {};
        u.action["idT"] = {};
        out.concrete = {t, std::move(u)};
        return out;
    }

    auto cat = std::make_shared<FinCategory>();
    cat->name = "prod";
    SetFunctor u;

    // object tuples, lexicographic in component declaration order
    std::vector<std::vector<std::string>> obj_tuples;
    std::vector<std::string> cur;
    std::function<void(std::size_t)> objs = [&](std::size_t i) {
        if (i == ks.size()) {
            obj_tuples.push_back(cur);
            return;
        }
        for (const auto& o : ks[i].cat->objects) {
            cur.push_back(o);
            objs(i + 1);
            cur.pop_back();
        }
    };
    objs(0);

    for (const auto& t : obj_tuples) {
        std::string name = join(t, "|");
        cat->objects.push_back(name);
        std::vector<std::string> car;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (const auto& e : ks[i].u.carrier.at(t[i])) car.push_back(tag_elem(i, e));
        std::sort(car.begin(), car.end());
        u.carrier[name] = car;
    }

    // morphism tuples
    std::vector<std::vector<const Morphism*>> mor_tuples;
    std::vector<const Morphism*> curm;
    std::function<void(std::size_t)> mors = [&](std::size_t i) {
        if (i == ks.size()) {
            mor_tuples.push_back(curm);
            return;
        }
        for (const auto& m : ks[i].cat->morphisms) {
            curm.push_back(&m);
            mors(i + 1);
            curm.pop_back();
        }
    };
    mors(0);

    auto tuple_mor_name = [](const std::vector<const Morphism*>& t) {
        std::vector<std::string> ids;
        ids.reserve(t.size());
        for (auto* m : t) ids.push_back(m->id);
        return join(ids, "|");
    };

    for (const auto& t : mor_tuples) {
        std::vector<std::string> doms, cods;
        for (auto* m : t) {
            doms.push_back(m->dom);
            cods.push_back(m->cod);
        }
        std::string id = tuple_mor_name(t);
        cat->morphisms.push_back({id, join(doms, "|"), join(cods, "|")});
        std::map<std::string, std::string> act;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (const auto& [e, img] : ks[i].u.action.at(t[i]->id))
                act[tag_elem(i, e)] = tag_elem(i, img);
        u.action[id] = act;
    }

    for (const auto& t : obj_tuples) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < t.size(); ++i) ids.push_back(ks[i].cat->identity.at(t[i]));
        cat->identity[join(t, "|")] = join(ids, "|");
    }

    for (const auto& g : mor_tuples)
        for (const auto& f : mor_tuples) {
            bool composable = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (f[i]->cod != g[i]->dom) { composable = false; break; }
            if (!composable) continue;
            std::vector<std::string> comp;
            for (std::size_t i = 0; i < g.size(); ++i)
                comp.push_back(ks[i].cat->compose.at({g[i]->id, f[i]->id}));
            cat->compose[{tuple_mor_name(g), tuple_mor_name(f)}] = join(comp, "|");
        }

    out.concrete = {cat, std::move(u)};

    for (std::size_t i = 0; i < ks.size(); ++i) {
        Functor p;
        p.source = cat;
        p.target = ks[i].cat;
        for (const auto& t : obj_tuples) p.obj_map[join(t, "|")] = t[i];
        for (const auto& t : mor_tuples) p.mor_map[tuple_mor_name(t)] = t[i]->id;
        out.projections.push_back(std::move(p));
    }
    return out;
}

Universe tagged_universe(const std::vector<Universe>& components) {
    Universe out;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (const auto& g : components[i].groups) {
            std::vector<std::string> tagged;
            tagged.reserve(g.size());
            for (const auto& e : g) tagged.push_back(tag_elem(i, e));
            out.groups.push_back(std::move(tagged));
        }
    return out;
}

CommaResult comma(const Functor& f, const Functor& g) {
    if (f.target != g.target) fail_precondition("comma: functors have different targets");
    const FinCategory& k1 = *f.source;
    const FinCategory& k2 = *g.source;
    const FinCategory& l = *f.target;

    auto cat = std::make_shared<FinCategory>();
    cat->name = "comma";

    struct Obj {
        std::string name, k, k2, h;
    };
    std::vector<Obj> objects;
    for (const auto& a : k1.objects)
        for (const auto& b : k2.objects)
            for (const auto& h : l.hom(f.obj_map.at(a), g.obj_map.at(b))) {
                objects.push_back({a + "|" + b + "|" + h, a, b, h});
                cat->objects.push_back(objects.back().name);
            }

    struct Mor {
        std::string id, k, k2;
        std::size_t src, dst;
    };
    std::vector<Mor> mors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (const auto& m1 : k1.hom(objects[i].k, objects[j].k))
                for (const auto& m2 : k2.hom(objects[i].k2, objects[j].k2)) {
                    // square: g(m2) ∘ h = h' ∘ f(m1)
                    auto lhs = l.composite(g.mor_map.at(m2), objects[i].h);
                    auto rhs = l.composite(objects[j].h, f.mor_map.at(m1));
                    if (!lhs || !rhs || *lhs != *rhs) continue;
                    std::string id = m1 + "|" + m2 + "|" + objects[i].name + "|" + objects[j].name;
                    mors.push_back({id, m1, m2, i, j});
                    cat->morphisms.push_back({id, objects[i].name, objects[j].name});
                }

    for (std::size_t i = 0; i < objects.size(); ++i)
        cat->identity[objects[i].name] = k1.identity.at(objects[i].k) + "|" +
                                         k2.identity.at(objects[i].k2) + "|" + objects[i].name +
                                         "|" + objects[i].name;

    for (const auto& g2 : mors)
        for (const auto& f2 : mors) {
            if (f2.dst != g2.src) continue;
            std::string c1 = k1.compose.at({g2.k, f2.k});
            std::string c2 = k2.compose.at({g2.k2, f2.k2});
            cat->compose[{g2.id, f2.id}] = c1 + "|" + c2 + "|" + objects[f2.src].name + "|" +
                                           objects[g2.dst].name;
        }

    CommaResult out;
    out.comma = cat;
    out.proj_src.source = cat;
    out.proj_src.target = f.source;
    out.proj_dst.source = cat;
    out.proj_dst.target = g.source;
    for (const auto& o : objects) {
        out.proj_src.obj_map[o.name] = o.k;
        out.proj_dst.obj_map[o.name] = o.k2;
    }
    for (const auto& m : mors) {
        out.proj_src.mor_map[m.id] = m.k;
        out.proj_dst.mor_map[m.id] = m.k2;
    }
    return out;
}

InserterResult inserter(const Functor& f, const Functor& g) {
    if (f.source != g.source || f.target != g.target)
        fail_precondition("inserter: functors are not parallel");
    const FinCategory& k = *f.source;
    const FinCategory& l = *f.target;

    auto cat = std::make_shared<FinCategory>();
    cat->name = "ins";

    struct Obj {
        std::string name, k, s;
    };
    std::vector<Obj> objects;
    for (const auto& a : k.objects)
        for (const auto& s : l.hom(f.obj_map.at(a), g.obj_map.at(a))) {
            objects.push_back({a + "|" + s, a, s});
            cat->objects.push_back(objects.back().name);
        }

    struct Mor {
        std::string id, k;
        std::size_t src, dst;
    };
    std::vector<Mor> mors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (const auto& m : k.hom(objects[i].k, objects[j].k)) {
                auto lhs = l.composite(g.mor_map.at(m), objects[i].s);
                auto rhs = l.composite(objects[j].s, f.mor_map.at(m));
                if (!lhs || !rhs || *lhs != *rhs) continue;
                std::string id = m + "|" + objects[i].name + "|" + objects[j].name;
                mors.push_back({id, m, i, j});
                cat->morphisms.push_back({id, objects[i].name, objects[j].name});
            }

    for (std::size_t i = 0; i < objects.size(); ++i)
        cat->identity[objects[i].name] =
            k.identity.at(objects[i].k) + "|" + objects[i].name + "|" + objects[i].name;

    for (const auto& g2 : mors)
        for (const auto& f2 : mors) {
            if (f2.dst != g2.src) continue;
            std::string c = k.compose.at({g2.k, f2.k});
            cat->compose[{g2.id, f2.id}] =
                c + "|" + objects[f2.src].name + "|" + objects[g2.dst].name;
        }

    InserterResult out;
    out.ins = cat;
    out.projection.source = cat;
    out.projection.target = f.source;
    for (const auto& o : objects) out.projection.obj_map[o.name] = o.k;
    for (const auto& m : mors) out.projection.mor_map[m.id] = m.k;

    out.phi.f = compose_functors(out.projection, f);
    out.phi.g = compose_functors(out.projection, g);
    for (const auto& o : objects) out.phi.at[o.name] = o.s;
    return out;
}

ConcreteCategory inserter_concrete(const InserterResult& r, const ConcreteCategory& source) {
    SetFunctor u;
    for (const auto& [o, k] : r.projection.obj_map) u.carrier[o] = source.u.carrier.at(k);
    for (const auto& [m, k] : r.projection.mor_map) u.action[m] = source.u.action.at(k);
    return {r.ins, std::move(u)};
}

EquifierResult equifier(const NatTrans& phi, const NatTrans& psi) {
    if (!functors_equal(phi.f, psi.f) || !functors_equal(phi.g, psi.g))
        fail_precondition("equifier: transformations are not parallel");
    const FinCategory& k = *phi.f.source;

    auto cat = std::make_shared<FinCategory>();
    cat->name = "eq";
    std::set<std::string> kept;
    for (const auto& o : k.objects)
        if (phi.at.at(o) == psi.at.at(o)) {
            kept.insert(o);
            cat->objects.push_back(o);
        }
    for (const auto& m : k.morphisms)
        if (kept.count(m.dom) && kept.count(m.cod)) cat->morphisms.push_back(m);
    for (const auto& o : cat->objects) cat->identity[o] = k.identity.at(o);
    for (const auto& [pair, h] : k.compose) {
        const Morphism* g2 = k.find(pair.first);
        const Morphism* f2 = k.find(pair.second);
        if (kept.count(f2->dom) && kept.count(f2->cod) && kept.count(g2->cod))
            cat->compose[pair] = h;
    }

    EquifierResult out;
    out.eq = cat;
    out.inclusion.source = cat;
    out.inclusion.target = phi.f.source;
    for (const auto& o : cat->objects) out.inclusion.obj_map[o] = o;
    for (const auto& m : cat->morphisms) out.inclusion.mor_map[m.id] = m.id;
    return out;
}

ConcreteCategory equifier_concrete(const EquifierResult& r, const ConcreteCategory& source) {
    return {r.eq, restrict_u(source.u, *r.eq)};
}

Functor inserter_factorize(const InserterResult& r, const Functor& f, const Functor& g,
                           const Functor& h, const NatTrans& psi) {
    if (h.target != f.source) fail_precondition("inserter_factorize: h does not land in the source");
    Verdict nat = validate_nat(psi);
    if (!nat.pass) fail_precondition("inserter_factorize: psi is not natural (" + nat.witness + ")");
    if (!functors_equal(psi.f, compose_functors(h, f)) ||
        !functors_equal(psi.g, compose_functors(h, g)))
        fail_precondition("inserter_factorize: psi is not of shape f∘h => g∘h");

    Functor out;
    out.source = h.source;
    out.target = r.ins;
    for (const auto& x : h.source->objects)
        out.obj_map[x] = h.obj_map.at(x) + "|" + psi.at.at(x);
    for (const auto& m : h.source->morphisms)
        out.mor_map[m.id] =
            h.mor_map.at(m.id) + "|" + out.obj_map.at(m.dom) + "|" + out.obj_map.at(m.cod);
    return out;
}

Functor equifier_factorize(const EquifierResult& r, const NatTrans& phi, const NatTrans& psi,
                           const Functor& h) {
    if (h.target != phi.f.source)
        fail_precondition("equifier_factorize: h does not land in the ambient category");
    for (const auto& x : h.source->objects)
        if (phi.at.at(h.obj_map.at(x)) != psi.at.at(h.obj_map.at(x)))
            fail_precondition("equifier_factorize: transformations disagree at the image of " + x);
    Functor out;
    out.source = h.source;
    out.target = r.eq;
    out.obj_map = h.obj_map;
    out.mor_map = h.mor_map;
    return out;
}

std::vector<std::map<std::string, std::string>>
all_bijections(const std::vector<std::string>& from, const std::vector<std::string>& to) {
    std::vector<std::map<std::string, std::string>> out;
    if (from.size() != to.size()) return out;
    std::vector<std::string> sorted_from = from;
    std::sort(sorted_from.begin(), sorted_from.end());
    std::vector<std::string> perm = to;
    std::sort(perm.begin(), perm.end());
    do {
        std::map<std::string, std::string> f;
        for (std::size_t i = 0; i < sorted_from.size(); ++i) f[sorted_from[i]] = perm[i];
        out.push_back(std::move(f));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PullbackResult pullback(const ConcreteCategory& k1, const ConcreteCategory& k2) {
    auto cat = std::make_shared<FinCategory>();
    cat->name = "pb";
    SetFunctor u;

    struct Obj {
        std::string name, a1, a2;
    };
    std::vector<Obj> objects;
    for (const auto& a : k1.cat->objects)
        for (const auto& b : k2.cat->objects) {
            if (k1.u.carrier.at(a) != k2.u.carrier.at(b)) continue;
            objects.push_back({a + "|" + b, a, b});
            cat->objects.push_back(objects.back().name);
            u.carrier[objects.back().name] = k1.u.carrier.at(a);
        }

    struct Mor {
        std::string id, f1, f2;
        std::size_t src, dst;
    };
    std::vector<Mor> mors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (const auto& m1 : k1.cat->hom(objects[i].a1, objects[j].a1))
                for (const auto& m2 : k2.cat->hom(objects[i].a2, objects[j].a2)) {
                    if (k1.u.action.at(m1) != k2.u.action.at(m2)) continue;
                    std::string id = m1 + "|" + m2;
                    mors.push_back({id, m1, m2, i, j});
                    cat->morphisms.push_back({id, objects[i].name, objects[j].name});
                    u.action[id] = k1.u.action.at(m1);
                }

    for (const auto& o : objects)
        cat->identity[o.name] = k1.cat->identity.at(o.a1) + "|" + k2.cat->identity.at(o.a2);
    for (const auto& g2 : mors)
        for (const auto& f2 : mors) {
            if (f2.dst != g2.src) continue;
            cat->compose[{g2.id, f2.id}] = k1.cat->compose.at({g2.f1, f2.f1}) + "|" +
                                           k2.cat->compose.at({g2.f2, f2.f2});
        }

    PullbackResult out;
    out.pb = {cat, std::move(u)};
    out.p1.source = cat;
    out.p1.target = k1.cat;
    out.p2.source = cat;
    out.p2.target = k2.cat;
    for (const auto& o : objects) {
        out.p1.obj_map[o.name] = o.a1;
        out.p2.obj_map[o.name] = o.a2;
    }
    for (const auto& m : mors) {
        out.p1.mor_map[m.id] = m.f1;
        out.p2.mor_map[m.id] = m.f2;
    }
    return out;
}

PseudopullbackResult pseudopullback(const ConcreteCategory& k1, const ConcreteCategory& k2) {
    auto cat = std::make_shared<FinCategory>();
    cat->name = "psb";
    SetFunctor u;
    PseudopullbackResult out;

    struct Obj {
        std::string name, a1, a2;
        std::map<std::string, std::string> bij;
    };
    std::vector<Obj> objects;
    for (const auto& a : k1.cat->objects)
        for (const auto& b : k2.cat->objects) {
            auto bijections = all_bijections(k1.u.carrier.at(a), k2.u.carrier.at(b));
            for (std::size_t t = 0; t < bijections.size(); ++t) {
                std::string name = a + "|" + b + "|b" + std::to_string(t);
                objects.push_back({name, a, b, bijections[t]});
                cat->objects.push_back(name);
                u.carrier[name] = k1.u.carrier.at(a);
                out.bijection_of[name] = bijections[t];
            }
        }

    struct Mor {
        std::string id, f1, f2;
        std::size_t src, dst;
    };
    std::vector<Mor> mors;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (const auto& m1 : k1.cat->hom(objects[i].a1, objects[j].a1))
                for (const auto& m2 : k2.cat->hom(objects[i].a2, objects[j].a2)) {
                    // gamma ∘ U1(f1) = U2(f2) ∘ beta
                    bool ok = true;
                    for (const auto& e : k1.u.carrier.at(objects[i].a1)) {
                        const auto& lhs = objects[j].bij.at(k1.u.action.at(m1).at(e));
                        const auto& rhs = k2.u.action.at(m2).at(objects[i].bij.at(e));
                        if (lhs != rhs) { ok = false; break; }
                    }
                    if (!ok) continue;
                    std::string id =
                        m1 + "|" + m2 + "|" + objects[i].name + "|" + objects[j].name;
                    mors.push_back({id, m1, m2, i, j});
                    cat->morphisms.push_back({id, objects[i].name, objects[j].name});
                    u.action[id] = k1.u.action.at(m1);
                }

    for (std::size_t i = 0; i < objects.size(); ++i)
        cat->identity[objects[i].name] = k1.cat->identity.at(objects[i].a1) + "|" +
                                         k2.cat->identity.at(objects[i].a2) + "|" +
                                         objects[i].name + "|" + objects[i].name;
    for (const auto& g2 : mors)
        for (const auto& f2 : mors) {
            if (f2.dst != g2.src) continue;
            cat->compose[{g2.id, f2.id}] = k1.cat->compose.at({g2.f1, f2.f1}) + "|" +
                                           k2.cat->compose.at({g2.f2, f2.f2}) + "|" +
                                           objects[f2.src].name + "|" + objects[g2.dst].name;
        }

    out.psb = {cat, std::move(u)};
    out.p1.source = cat;
    out.p1.target = k1.cat;
    out.p2.source = cat;
    out.p2.target = k2.cat;
    for (const auto& o : objects) {
        out.p1.obj_map[o.name] = o.a1;
        out.p2.obj_map[o.name] = o.a2;
    }
    for (const auto& m : mors) {
        out.p1.mor_map[m.id] = m.f1;
        out.p2.mor_map[m.id] = m.f2;
    }
    return out;
}

CompareResult compare_pb_psb(const ConcreteCategory& k1, const ConcreteCategory& k2) {
    CompareResult out{pullback(k1, k2), pseudopullback(k1, k2), {}, Verdict::ok()};

    out.comparison.source = out.pb.pb.cat;
    out.comparison.target = out.psb.psb.cat;
    for (const auto& o : out.pb.pb.cat->objects) {
        const std::string& a1 = out.pb.p1.obj_map.at(o);
        const std::string& a2 = out.pb.p2.obj_map.at(o);
        // the pseudopullback object over (a1, a2) whose bijection is the identity
        std::string image;
        for (const auto& [name, bij] : out.psb.bijection_of) {
            if (out.psb.p1.obj_map.at(name) != a1 || out.psb.p2.obj_map.at(name) != a2) continue;
            bool is_id = true;
            for (const auto& [e, img] : bij)
                if (e != img) { is_id = false; break; }
            if (is_id) { image = name; break; }
        }
        out.comparison.obj_map[o] = image;
    }
    for (const auto& m : out.pb.pb.cat->morphisms)
        out.comparison.mor_map[m.id] = out.pb.p1.mor_map.at(m.id) + "|" +
                                       out.pb.p2.mor_map.at(m.id) + "|" +
                                       out.comparison.obj_map.at(m.dom) + "|" +
                                       out.comparison.obj_map.at(m.cod);

    Verdict v = validate_functor(out.comparison);
    if (!v.pass) {
        out.verdict = v;
        return out;
    }
    out.verdict = is_equivalence(out.comparison)
                      ? Verdict::ok()
                      : Verdict::fail("equivalence", "comparison functor is not an equivalence");
    return out;
}

} // namespace fincat
