#include "fincat/concrete.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat {

bool Universe::contains(const std::string& e) const { return group_of(e) >= 0; }

int Universe::group_of(const std::string& e) const {
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (std::find(groups[i].begin(), groups[i].end(), e) != groups[i].end())
            return static_cast<int>(i);
    return -1;
}

std::vector<std::string> Universe::all() const {
    std::vector<std::string> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

Universe default_universe(const ConcreteCategory& k, int fresh) {
    std::set<std::string> pool;
    for (const auto& [obj, els] : k.u.carrier) pool.insert(els.begin(), els.end());
    for (int i = 0; fresh > 0; ++i) {
        std::string cand = "w" + std::to_string(i);
        if (pool.insert(cand).second) --fresh;
    }
    Universe u;
    u.groups.emplace_back(pool.begin(), pool.end());
    return u;
}

Verdict validate_concrete(const ConcreteCategory& k) {
    const FinCategory& c = *k.cat;
    for (const auto& obj : c.objects) {
        auto it = k.u.carrier.find(obj);
        if (it == k.u.carrier.end()) return Verdict::fail("structure", "no carrier for " + obj);
        std::set<std::string> seen(it->second.begin(), it->second.end());
        if (seen.size() != it->second.size())
            return Verdict::fail("structure", "duplicate carrier element at " + obj);
    }
    for (const auto& m : c.morphisms) {
        auto it = k.u.action.find(m.id);
        if (it == k.u.action.end()) return Verdict::fail("structure", "no action for " + m.id);
        const auto& dom_els = k.u.carrier.at(m.dom);
        const auto& cod_els = k.u.carrier.at(m.cod);
        if (it->second.size() != dom_els.size())
            return Verdict::fail("structure", "action of " + m.id + " is not total");
        for (const auto& e : dom_els) {
            auto jt = it->second.find(e);
            if (jt == it->second.end())
                return Verdict::fail("structure", "action of " + m.id + " undefined at " + e);
            if (std::find(cod_els.begin(), cod_els.end(), jt->second) == cod_els.end())
                return Verdict::fail("structure", "action of " + m.id + " leaves the carrier at " + e);
        }
    }
    for (const auto& [obj, id] : c.identity)
        for (const auto& e : k.u.carrier.at(obj))
            if (k.u.action.at(id).at(e) != e)
                return Verdict::fail("functoriality", "identity action at " + obj);
    for (const auto& [pair, h] : c.compose) {
        const Morphism* f = c.find(pair.second);
        for (const auto& e : k.u.carrier.at(f->dom)) {
            const std::string& mid = k.u.action.at(pair.second).at(e);
            if (k.u.action.at(pair.first).at(mid) != k.u.action.at(h).at(e))
                return Verdict::fail("functoriality",
                                     "composite action (" + pair.first + "," + pair.second + ") at " + e);
        }
    }
    return Verdict::ok();
}

bool is_faithful_u(const ConcreteCategory& k) {
    const FinCategory& c = *k.cat;
    for (std::size_t i = 0; i < c.morphisms.size(); ++i)
        for (std::size_t j = i + 1; j < c.morphisms.size(); ++j) {
            const auto& a = c.morphisms[i];
            const auto& b = c.morphisms[j];
            if (a.dom != b.dom || a.cod != b.cod) continue;
            if (k.u.action.at(a.id) == k.u.action.at(b.id)) return false;
        }
    return true;
}

bool has_concrete_monos(const ConcreteCategory& k) {
    const FinCategory& c = *k.cat;
    CatView v(c);
    for (const auto& m : c.morphisms) {
        const auto& act = k.u.action.at(m.id);
        std::set<std::string> image;
        for (const auto& [e, img] : act)
            if (!image.insert(img).second) return false;
        if (!is_mono_idx(v, v.mor_idx.at(m.id))) return false;
    }
    return true;
}

namespace {

// Enumerates all f : dom_els -> UB with U(g)∘f = U(h), i.e. the product of
// the U(g)-preimages of U(h)(a) over a in UA, and calls `visit` per choice.
// Returns false when visit signalled failure.
bool each_commuting_function(const std::vector<std::string>& dom_els,
                             const std::map<std::string, std::string>& h_act,
                             const std::map<std::string, std::string>& g_act,
                             const std::vector<std::string>& mid_els,
                             const std::function<bool(const std::map<std::string, std::string>&)>& visit) {
    std::vector<std::vector<std::string>> candidates(dom_els.size());
    for (std::size_t i = 0; i < dom_els.size(); ++i) {
        const std::string& target = h_act.at(dom_els[i]);
        for (const auto& b : mid_els)
            if (g_act.at(b) == target) candidates[i].push_back(b);
        if (candidates[i].empty()) return true; // no commuting function at all
    }
    std::map<std::string, std::string> f;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == dom_els.size()) return visit(f);
        for (const auto& b : candidates[i]) {
            f[dom_els[i]] = b;
            if (!go(i + 1)) return false;
        }
        f.erase(dom_els[i]);
        return true;
    };
    return go(0);
}

} // namespace

Verdict is_coherent(const ConcreteCategory& k) {
    const FinCategory& c = *k.cat;
    Verdict result = Verdict::ok();
    for (const auto& h : c.morphisms) {
        for (const auto& g : c.morphisms) {
            if (h.cod != g.cod) continue;
            const auto& dom_els = k.u.carrier.at(h.dom);
            const auto& mid_els = k.u.carrier.at(g.dom);
            auto lifts = c.hom(h.dom, g.dom);
            bool ok = each_commuting_function(
                dom_els, k.u.action.at(h.id), k.u.action.at(g.id), mid_els,
                [&](const std::map<std::string, std::string>& f) {
                    for (const auto& cand : lifts)
                        if (k.u.action.at(cand) == f) return true;
                    result = Verdict::fail("coherence", "triangle h=" + h.id + " g=" + g.id +
                                                            " f=[" + show_map(f) + "]");
                    return false;
                });
            if (!ok) return result;
        }
    }
    return result;
}

std::vector<std::map<std::string, std::string>>
universe_bijections(const std::vector<std::string>& carrier, const Universe& universe) {
    std::vector<std::map<std::string, std::string>> out;
    std::vector<std::string> sorted = carrier;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, std::string> f;
    std::set<std::string> used;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == sorted.size()) {
            out.push_back(f);
            return;
        }
        int g = universe.group_of(sorted[i]);
        if (g < 0) return; // carrier element outside the universe: no bijection
        for (const auto& cand : universe.groups[g]) {
            if (used.count(cand)) continue;
            used.insert(cand);
            f[sorted[i]] = cand;
            go(i + 1);
            f.erase(sorted[i]);
            used.erase(cand);
        }
    };
    go(0);
    return out;
}

Verdict is_transportable(const ConcreteCategory& k, const Universe& universe) {
    const FinCategory& c = *k.cat;
    for (const auto& [obj, els] : k.u.carrier)
        for (const auto& e : els)
            if (!universe.contains(e))
                fail_precondition("universe does not contain carrier element " + e + " of " + obj);

    CatView v(c);
    // isos out of each object, precomputed
    std::map<std::string, std::vector<const Morphism*>> isos_out;
    for (const auto& m : c.morphisms)
        if (inverse_idx(v, v.mor_idx.at(m.id)) >= 0) isos_out[m.dom].push_back(&m);

    for (const auto& a : c.objects) {
        for (const auto& f : universe_bijections(k.u.carrier.at(a), universe)) {
            int count = 0;
            for (const Morphism* m : isos_out[a])
                if (k.u.action.at(m->id) == f) ++count;
            if (count != 1)
                return Verdict::fail("transportability",
                                     "object " + a + " bijection [" + show_map(f) + "] has " +
                                         std::to_string(count) + " lifts");
        }
    }
    return Verdict::ok();
}

namespace {

std::string suffix_of(const std::map<std::string, std::string>& bij) {
    if (bij.empty()) return "_";
    std::vector<std::string> images;
    for (const auto& [src, img] : bij) images.push_back(img);
    return join(images, ".");
}

} // namespace

ConcreteCategory make_transportable(const ConcreteCategory& k, const Universe& universe) {
    if (!is_faithful_u(k)) fail_precondition("make_transportable requires a faithful underlying functor");
    const FinCategory& c = *k.cat;
    for (const auto& [obj, els] : k.u.carrier)
        for (const auto& e : els)
            if (!universe.contains(e))
                fail_precondition("universe does not contain carrier element " + e + " of " + obj);

    CatView v(c);

    // Skeleton: one representative per iso-class, first in declaration order.
    std::vector<std::string> reps;
    std::map<std::string, std::string> rep_of;
    for (const auto& obj : c.objects) {
        bool placed = false;
        for (const auto& r : reps)
            if (iso_exists(c, r, obj)) {
                rep_of[obj] = r;
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(obj);
            rep_of[obj] = obj;
        }
    }

    // Underlying permutations of the automorphisms of each representative.
    std::map<std::string, std::vector<std::map<std::string, std::string>>> aut_perms;
    for (const auto& r : reps) {
        for (const auto& m : c.hom(r, r))
            if (is_isomorphism(c, m)) aut_perms[r].push_back(k.u.action.at(m));
    }

    // Orbit-canonical bijections per representative.
    struct NewObj {
        std::string name;
        std::string rep;
        std::map<std::string, std::string> bij; // rep carrier -> new carrier
    };
    std::vector<NewObj> objs;
    for (const auto& r : reps) {
        auto bijections = universe_bijections(k.u.carrier.at(r), universe);
        if (bijections.empty() && !k.u.carrier.at(r).empty())
            fail_precondition("universe too small to host any renaming of " + r);
        std::set<std::string> seen;
        for (const auto& f : bijections) {
            // canonical representative of the orbit {f ∘ p : p automorphism image}
            std::map<std::string, std::string> canon = f;
            for (const auto& p : aut_perms[r]) {
                std::map<std::string, std::string> g;
                for (const auto& [e, img] : p) g[e] = f.at(img);
                if (g < canon) canon = g;
            }
            std::string key = show_map(canon);
            if (seen.insert(key).second)
                objs.push_back({r + "@" + suffix_of(canon), r, canon});
        }
    }

    auto result = std::make_shared<FinCategory>();
    result->name = c.name + ".t";
    SetFunctor u;

    for (const auto& o : objs) {
        result->objects.push_back(o.name);
        std::vector<std::string> car;
        for (const auto& [e, img] : o.bij) car.push_back(img);
        std::sort(car.begin(), car.end());
        u.carrier[o.name] = car;
    }

    // One transported morphism per (original morphism between representatives,
    // renamed source, renamed target).
    struct NewMor {
        std::string id;
        std::string base;
        std::size_t src, dst;
    };
    std::vector<NewMor> mors;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            for (const auto& m : c.hom(objs[i].rep, objs[j].rep))
                mors.push_back({m + "|" + objs[i].name + "|" + objs[j].name, m, i, j});

    for (const auto& m : mors) {
        result->morphisms.push_back({m.id, objs[m.src].name, objs[m.dst].name});
        std::map<std::string, std::string> act;
        std::map<std::string, std::string> inv_src;
        for (const auto& [e, img] : objs[m.src].bij) inv_src[img] = e;
        for (const auto& [x, e] : inv_src)
            act[x] = objs[m.dst].bij.at(k.u.action.at(m.base).at(e));
        u.action[m.id] = act;
    }

    for (std::size_t i = 0; i < objs.size(); ++i) {
        std::string id = c.identity.at(objs[i].rep) + "|" + objs[i].name + "|" + objs[i].name;
        result->identity[objs[i].name] = id;
    }

    for (const auto& g : mors)
        for (const auto& f : mors) {
            if (f.dst != g.src) continue;
            std::string base = c.compose.at({g.base, f.base});
            std::string id = base + "|" + objs[f.src].name + "|" + objs[g.dst].name;
            result->compose[{g.id, f.id}] = id;
        }

    return ConcreteCategory{result, std::move(u)};
}

SetFunctor restrict_u(const SetFunctor& u, const FinCategory& sub) {
    SetFunctor out;
    for (const auto& o : sub.objects) out.carrier[o] = u.carrier.at(o);
    for (const auto& m : sub.morphisms) out.action[m.id] = u.action.at(m.id);
    return out;
}

void ConcreteBuilder::add_object(const std::string& obj, std::vector<std::string> carrier) {
    std::sort(carrier.begin(), carrier.end());
    objects_.push_back(obj);
    carriers_[obj] = std::move(carrier);
    std::string id = "id." + obj;
    std::map<std::string, std::string> act;
    for (const auto& e : carriers_.at(obj)) act[e] = e;
    identity_[obj] = id;
    mors_.push_back({id, obj, obj, std::move(act)});
}

int ConcreteBuilder::find_same(const std::string& dom, const std::string& cod,
                               const std::map<std::string, std::string>& action) const {
    for (std::size_t i = 0; i < mors_.size(); ++i)
        if (mors_[i].dom == dom && mors_[i].cod == cod && mors_[i].action == action)
            return static_cast<int>(i);
    return -1;
}

bool ConcreteBuilder::add_morphism(const std::string& id, const std::string& dom,
                                   const std::string& cod,
                                   std::map<std::string, std::string> action) {
    if (find_same(dom, cod, action) >= 0) return false;
    mors_.push_back({id, dom, cod, std::move(action)});
    return true;
}

bool ConcreteBuilder::close(std::size_t max_morphisms) {
    // Worklist closure; composites that coincide with a known function are
    // identified with it, so the result is a genuine subcategory of Set.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t g = 0; g < mors_.size(); ++g)
            for (std::size_t f = 0; f < mors_.size(); ++f) {
                if (mors_[f].cod != mors_[g].dom) continue;
                if (compose_.count({mors_[g].id, mors_[f].id})) continue;
                std::map<std::string, std::string> act;
                for (const auto& [e, mid] : mors_[f].action) act[e] = mors_[g].action.at(mid);
                int existing = find_same(mors_[f].dom, mors_[g].cod, act);
                if (existing < 0) {
                    if (mors_.size() >= max_morphisms) return false;
                    std::string id = "c" + std::to_string(serial_++);
                    mors_.push_back({id, mors_[f].dom, mors_[g].cod, std::move(act)});
                    existing = static_cast<int>(mors_.size()) - 1;
                }
                compose_[{mors_[g].id, mors_[f].id}] = mors_[existing].id;
                changed = true;
            }
    }
    return true;
}

ConcreteCategory ConcreteBuilder::result() const {
    auto cat = std::make_shared<FinCategory>();
    cat->name = name_;
    cat->objects = objects_;
    SetFunctor u;
    for (const auto& [obj, car] : carriers_) u.carrier[obj] = car;
    for (const auto& m : mors_) {
        cat->morphisms.push_back({m.id, m.dom, m.cod});
        u.action[m.id] = m.action;
    }
    cat->identity = identity_;
    cat->compose = compose_;
    return {cat, std::move(u)};
}

} // namespace fincat
