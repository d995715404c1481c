#include "fincat/functor.hpp"

#include <algorithm>
#include <functional>

namespace fincat {

Verdict validate_functor(const Functor& f) {
    if (!f.source || !f.target) return Verdict::fail("structure", "null source or target");
    const FinCategory& s = *f.source;
    const FinCategory& t = *f.target;
    for (const auto& o : s.objects) {
        auto it = f.obj_map.find(o);
        if (it == f.obj_map.end()) return Verdict::fail("structure", "no image for object " + o);
        if (!t.has_object(it->second))
            return Verdict::fail("structure", "object image " + it->second + " not in target");
    }
    for (const auto& m : s.morphisms) {
        auto it = f.mor_map.find(m.id);
        if (it == f.mor_map.end()) return Verdict::fail("structure", "no image for morphism " + m.id);
        const Morphism* im = t.find(it->second);
        if (!im) return Verdict::fail("structure", "morphism image " + it->second + " not in target");
        if (im->dom != f.obj_map.at(m.dom) || im->cod != f.obj_map.at(m.cod))
            return Verdict::fail("typing", m.id + " -> " + im->id);
    }
    for (const auto& [obj, id] : s.identity)
        if (f.mor_map.at(id) != t.identity.at(f.obj_map.at(obj)))
            return Verdict::fail("identities", obj);
    for (const auto& [pair, h] : s.compose) {
        auto img = t.composite(f.mor_map.at(pair.first), f.mor_map.at(pair.second));
        if (!img || *img != f.mor_map.at(h))
            return Verdict::fail("composition", "(" + pair.first + "," + pair.second + ")");
    }
    return Verdict::ok();
}

Verdict validate_nat(const NatTrans& t) {
    if (t.f.source != t.g.source || t.f.target != t.g.target)
        return Verdict::fail("structure", "functors are not parallel");
    const FinCategory& s = *t.f.source;
    const FinCategory& l = *t.f.target;
    for (const auto& k : s.objects) {
        auto it = t.at.find(k);
        if (it == t.at.end()) return Verdict::fail("structure", "no component at " + k);
        const Morphism* m = l.find(it->second);
        if (!m) return Verdict::fail("structure", "component at " + k + " not in target");
        if (m->dom != t.f.obj_map.at(k) || m->cod != t.g.obj_map.at(k))
            return Verdict::fail("typing", "component at " + k);
    }
    // Naturality: G(k) ∘ phi_A = phi_B ∘ F(k) for every k : A -> B.
    for (const auto& m : s.morphisms) {
        auto lhs = l.composite(t.g.mor_map.at(m.id), t.at.at(m.dom));
        auto rhs = l.composite(t.at.at(m.cod), t.f.mor_map.at(m.id));
        if (!lhs || !rhs || *lhs != *rhs)
            return Verdict::fail("naturality", "square at " + m.id);
    }
    return Verdict::ok();
}

Functor identity_functor(const CatPtr& c) {
    Functor f;
    f.source = c;
    f.target = c;
    for (const auto& o : c->objects) f.obj_map[o] = o;
    for (const auto& m : c->morphisms) f.mor_map[m.id] = m.id;
    return f;
}

Functor compose_functors(const Functor& f, const Functor& g) {
    if (f.target != g.source)
        fail_precondition("compose_functors: target of first is not source of second");
    Functor h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& [a, b] : f.obj_map) h.obj_map[a] = g.obj_map.at(b);
    for (const auto& [a, b] : f.mor_map) h.mor_map[a] = g.mor_map.at(b);
    return h;
}

bool functors_equal(const Functor& a, const Functor& b) {
    return a.source == b.source && a.target == b.target && a.obj_map == b.obj_map &&
           a.mor_map == b.mor_map;
}

bool nats_equal(const NatTrans& a, const NatTrans& b) {
    return functors_equal(a.f, b.f) && functors_equal(a.g, b.g) && a.at == b.at;
}

NatTrans whisker(const NatTrans& phi, const Functor& h) {
    if (h.target != phi.f.source) fail_precondition("whisker: functor does not land in nat's source");
    NatTrans out;
    out.f = compose_functors(h, phi.f);
    out.g = compose_functors(h, phi.g);
    for (const auto& [x, hx] : h.obj_map) out.at[x] = phi.at.at(hx);
    return out;
}

NatTrans identity_nat(const Functor& f) {
    NatTrans t;
    t.f = f;
    t.g = f;
    for (const auto& [a, b] : f.obj_map) t.at[a] = f.target->identity.at(b);
    return t;
}

bool is_full(const Functor& f) {
    for (const auto& a : f.source->objects)
        for (const auto& b : f.source->objects) {
            auto pre = f.source->hom(a, b);
            for (const auto& g : f.target->hom(f.obj_map.at(a), f.obj_map.at(b))) {
                bool hit = false;
                for (const auto& p : pre)
                    if (f.mor_map.at(p) == g) { hit = true; break; }
                if (!hit) return false;
            }
        }
    return true;
}

bool is_faithful(const Functor& f) {
    for (const auto& a : f.source->objects)
        for (const auto& b : f.source->objects) {
            auto pre = f.source->hom(a, b);
            for (std::size_t i = 0; i < pre.size(); ++i)
                for (std::size_t j = i + 1; j < pre.size(); ++j)
                    if (f.mor_map.at(pre[i]) == f.mor_map.at(pre[j])) return false;
        }
    return true;
}

bool is_essentially_surjective(const Functor& f) {
    CatView v(*f.target);
    for (const auto& y : f.target->objects) {
        bool hit = false;
        for (const auto& x : f.source->objects) {
            int a = v.obj_idx.at(f.obj_map.at(x));
            int b = v.obj_idx.at(y);
            for (int m : v.hom[a][b])
                if (inverse_idx(v, m) >= 0) { hit = true; break; }
            if (hit) break;
        }
        if (!hit) return false;
    }
    return true;
}

bool is_equivalence(const Functor& f) {
    return is_full(f) && is_faithful(f) && is_essentially_surjective(f);
}

namespace {

// Backtracking enumeration: objects are assigned in source order, then
// morphisms in source order; composition and identity constraints are
// checked as soon as both operands are assigned.
struct FunctorSearch {
    const FinCategory& s;
    const FinCategory& t;
    CatPtr sp, tp;
    std::size_t cap;
    std::vector<Functor> out;
    std::map<std::string, std::string> obj_map;
    std::map<std::string, std::string> mor_map;

    bool consistent_so_far(const std::string& just_set) {
        // identity preservation
        for (const auto& [obj, id] : s.identity) {
            if (!mor_map.count(id) || !obj_map.count(obj)) continue;
            if (mor_map.at(id) != t.identity.at(obj_map.at(obj))) return false;
        }
        // composition preservation on pairs whose images are all assigned
        for (const auto& [pair, h] : s.compose) {
            if (pair.first != just_set && pair.second != just_set && h != just_set) continue;
            auto g = mor_map.find(pair.first);
            auto f = mor_map.find(pair.second);
            auto hh = mor_map.find(h);
            if (g == mor_map.end() || f == mor_map.end() || hh == mor_map.end()) continue;
            auto img = t.composite(g->second, f->second);
            if (!img || *img != hh->second) return false;
        }
        return true;
    }

    void assign_morphisms(std::size_t i) {
        if (out.size() >= cap) return;
        if (i == s.morphisms.size()) {
            Functor f;
            f.source = sp;
            f.target = tp;
            f.obj_map = obj_map;
            f.mor_map = mor_map;
            out.push_back(std::move(f));
            return;
        }
        const Morphism& m = s.morphisms[i];
        for (const auto& cand : t.hom(obj_map.at(m.dom), obj_map.at(m.cod))) {
            mor_map[m.id] = cand;
            if (consistent_so_far(m.id)) assign_morphisms(i + 1);
            mor_map.erase(m.id);
            if (out.size() >= cap) return;
        }
    }

    void assign_objects(std::size_t i) {
        if (out.size() >= cap) return;
        if (i == s.objects.size()) {
            assign_morphisms(0);
            return;
        }
        for (const auto& cand : t.objects) {
            obj_map[s.objects[i]] = cand;
            assign_objects(i + 1);
            obj_map.erase(s.objects[i]);
            if (out.size() >= cap) return;
        }
    }
};

} // namespace

std::vector<Functor> enumerate_functors(const CatPtr& source, const CatPtr& target, std::size_t cap) {
    FunctorSearch search{*source, *target, source, target, cap, {}, {}, {}};
    search.assign_objects(0);
    return search.out;
}

std::vector<NatTrans> enumerate_nats(const Functor& f, const Functor& g, std::size_t cap) {
    if (f.source != g.source || f.target != g.target)
        fail_precondition("enumerate_nats: functors are not parallel");
    std::vector<NatTrans> out;
    const FinCategory& s = *f.source;
    const FinCategory& l = *f.target;
    std::map<std::string, std::string> at;

    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (out.size() >= cap) return;
        if (i == s.objects.size()) {
            NatTrans t{f, g, at};
            if (validate_nat(t).pass) out.push_back(std::move(t));
            return;
        }
        const std::string& k = s.objects[i];
        for (const auto& cand : l.hom(f.obj_map.at(k), g.obj_map.at(k))) {
            at[k] = cand;
            // prune: check naturality on morphisms between already-assigned objects
            bool ok = true;
            for (const auto& m : s.morphisms) {
                if (!at.count(m.dom) || !at.count(m.cod)) continue;
                auto lhs = l.composite(g.mor_map.at(m.id), at.at(m.dom));
                auto rhs = l.composite(at.at(m.cod), f.mor_map.at(m.id));
                if (!lhs || !rhs || *lhs != *rhs) { ok = false; break; }
            }
            if (ok) go(i + 1);
            at.erase(k);
            if (out.size() >= cap) return;
        }
    };
    go(0);
    return out;
}

} // namespace fincat
