#include "fincat/functor_analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat {

namespace {

std::set<std::string> image_of(const std::map<std::string, std::string>& f) {
    std::set<std::string> out;
    for (const auto& [a, b] : f) out.insert(b);
    return out;
}

} // namespace

Verdict validate_witness(const Functor& h, const ConcreteCategory& k1,
                         const ConcreteCategory& k2, const SubconcretenessWitness& w) {
    if (h.source != k1.cat || h.target != k2.cat)
        return Verdict::fail("structure", "functor does not match the concrete categories");
    for (const auto& a : k1.cat->objects) {
        auto it = w.alpha.find(a);
        if (it == w.alpha.end()) return Verdict::fail("structure", "no component at " + a);
        const auto& dom = k2.u.carrier.at(h.obj_map.at(a));
        const auto& cod = k1.u.carrier.at(a);
        if (it->second.size() != dom.size())
            return Verdict::fail("structure", "component at " + a + " is not total");
        std::set<std::string> seen;
        for (const auto& e : dom) {
            auto jt = it->second.find(e);
            if (jt == it->second.end())
                return Verdict::fail("structure", "component at " + a + " undefined at " + e);
            if (std::find(cod.begin(), cod.end(), jt->second) == cod.end())
                return Verdict::fail("structure", "component at " + a + " leaves the carrier");
            if (!seen.insert(jt->second).second)
                return Verdict::fail("mono", "component at " + a + " is not injective");
        }
    }
    // naturality: U1(f) ∘ alpha_A = alpha_B ∘ U2(h f)
    for (const auto& m : k1.cat->morphisms) {
        const auto& aa = w.alpha.at(m.dom);
        const auto& ab = w.alpha.at(m.cod);
        const auto& u1f = k1.u.action.at(m.id);
        const auto& u2hf = k2.u.action.at(h.mor_map.at(m.id));
        for (const auto& [e, img] : aa)
            if (u1f.at(img) != ab.at(u2hf.at(e)))
                return Verdict::fail("naturality", "square at " + m.id + " element " + e);
    }
    // reflection: (U1 f)(a) in image(alpha_B) implies a in image(alpha_A)
    for (const auto& m : k1.cat->morphisms) {
        auto im_a = image_of(w.alpha.at(m.dom));
        auto im_b = image_of(w.alpha.at(m.cod));
        for (const auto& [e, img] : k1.u.action.at(m.id))
            if (im_b.count(img) && !im_a.count(e))
                return Verdict::fail("reflection", "element " + e + " along " + m.id);
    }
    return Verdict::ok();
}

bool is_concrete(const Functor& h, const ConcreteCategory& k1, const ConcreteCategory& k2) {
    if (h.source != k1.cat || h.target != k2.cat) return false;
    for (const auto& a : k1.cat->objects)
        if (k2.u.carrier.at(h.obj_map.at(a)) != k1.u.carrier.at(a)) return false;
    for (const auto& m : k1.cat->morphisms)
        if (k2.u.action.at(h.mor_map.at(m.id)) != k1.u.action.at(m.id)) return false;
    return true;
}

SubconcretenessWitness concrete_witness(const Functor& h, const ConcreteCategory& k2) {
    SubconcretenessWitness w;
    for (const auto& [a, ha] : h.obj_map) {
        auto& comp = w.alpha[a];
        for (const auto& e : k2.u.carrier.at(ha)) comp[e] = e;
    }
    return w;
}

SubconcretenessWitness compose_witnesses(const Functor& h1, const SubconcretenessWitness& w1,
                                         const Functor& h2, const SubconcretenessWitness& w2,
                                         const ConcreteCategory& k3) {
    // h2∘h1 : K1 -> K3; alpha_A = w1_A ∘ w2_{h1 A}
    SubconcretenessWitness w;
    for (const auto& [a, h1a] : h1.obj_map) {
        auto& comp = w.alpha[a];
        const auto& outer = w2.alpha.at(h1a);
        const auto& inner = w1.alpha.at(a);
        for (const auto& e : k3.u.carrier.at(h2.obj_map.at(h1a))) comp[e] = inner.at(outer.at(e));
    }
    return w;
}

SubconcretenessWitness projection_witness(const ProductResult& prod, std::size_t index) {
    SubconcretenessWitness w;
    const Functor& p = prod.projections.at(index);
    for (const auto& [obj, comp_obj] : p.obj_map) {
        auto& comp = w.alpha[obj];
        // carrier of the component, injected by tagging
        for (const auto& e : prod.concrete.u.carrier.at(obj)) {
            std::string prefix = std::to_string(index + 1) + "@";
            if (e.rfind(prefix, 0) == 0) comp[e.substr(prefix.size())] = e;
        }
        (void)comp_obj;
    }
    return w;
}

WitnessSearch find_subconcrete_witness(const Functor& h, const ConcreteCategory& k1,
                                       const ConcreteCategory& k2, unsigned long long budget) {
    WitnessSearch out;
    const auto& objects = k1.cat->objects;

    // precompute candidate injections per object, in canonical order
    std::vector<std::vector<std::map<std::string, std::string>>> injections(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const auto& dom = k2.u.carrier.at(h.obj_map.at(objects[i]));
        const auto& cod = k1.u.carrier.at(objects[i]);
        std::map<std::string, std::string> f;
        std::set<std::string> used;
        std::function<void(std::size_t)> go = [&](std::size_t j) {
            if (j == dom.size()) {
                injections[i].push_back(f);
                return;
            }
            for (const auto& cand : cod) {
                if (used.count(cand)) continue;
                used.insert(cand);
                f[dom[j]] = cand;
                go(j + 1);
                f.erase(dom[j]);
                used.erase(cand);
            }
        };
        go(0);
        if (injections[i].empty() && !dom.empty()) return out; // none possible
    }

    std::map<std::string, std::size_t> obj_index;
    for (std::size_t i = 0; i < objects.size(); ++i) obj_index[objects[i]] = i;

    SubconcretenessWitness w;
    bool exhausted = false;

    // check the constraints that mention only assigned objects
    auto consistent = [&](std::size_t upto) {
        for (const auto& m : k1.cat->morphisms) {
            std::size_t di = obj_index.at(m.dom);
            std::size_t ci = obj_index.at(m.cod);
            if (di > upto || ci > upto) continue;
            const auto& aa = w.alpha.at(m.dom);
            const auto& ab = w.alpha.at(m.cod);
            const auto& u1f = k1.u.action.at(m.id);
            const auto& u2hf = k2.u.action.at(h.mor_map.at(m.id));
            for (const auto& [e, img] : aa)
                if (u1f.at(img) != ab.at(u2hf.at(e))) return false;
            auto im_a = image_of(aa);
            auto im_b = image_of(ab);
            for (const auto& [e, img] : u1f)
                if (im_b.count(img) && !im_a.count(e)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (out.nodes++ > budget) {
            exhausted = true;
            return false;
        }
        if (i == objects.size()) return true;
        for (const auto& cand : injections[i]) {
            w.alpha[objects[i]] = cand;
            if (consistent(i) && assign(i + 1)) return true;
            if (exhausted) return false;
        }
        w.alpha.erase(objects[i]);
        return false;
    };

    if (assign(0)) {
        out.status = SearchStatus::found;
        out.witness = w;
        return out;
    }
    out.status = exhausted ? SearchStatus::unknown : SearchStatus::none;
    return out;
}

SignatureMorphism induced_signature_morphism(const Functor& h, const ConcreteCategory& k1,
                                             const ConcreteCategory& k2,
                                             const SubconcretenessWitness& w, int max_arity,
                                             unsigned long long budget) {
    Verdict wv = validate_witness(h, k1, k2, w);
    if (!wv.pass) fail_precondition("induced_signature_morphism: invalid witness: " + wv.witness);

    SignatureMorphism sm;
    sm.source = enumerate_sigma(k2, max_arity, budget);
    sm.target = enumerate_sigma(k1, max_arity, budget);

    // the full unary symbol of the source signature
    std::string full_unary;
    for (const auto& sym : sm.source.symbols) {
        if (sym.arity != 1) continue;
        bool full = true;
        for (const auto& obj : k2.cat->objects) {
            const auto& car = k2.u.carrier.at(obj);
            if (sym.interp.at(obj).size() != car.size()) { full = false; break; }
        }
        if (full) { full_unary = sym.name; break; }
    }
    if (full_unary.empty())
        fail_precondition("induced_signature_morphism: source signature has no full unary symbol");

    for (const auto& sym : sm.source.symbols) {
        RelationSymbol image;
        image.arity = sym.arity;
        image.name = sym.name + ".img";
        for (const auto& a : k1.cat->objects) {
            auto& set = image.interp[a];
            const auto& comp = w.alpha.at(a);
            for (const auto& t : sym.interp.at(h.obj_map.at(a))) {
                std::vector<std::string> mapped;
                mapped.reserve(t.size());
                for (const auto& e : t) mapped.push_back(comp.at(e));
                set.insert(std::move(mapped));
            }
        }
        Verdict v = validate_symbol(k1, image);
        if (!v.pass) {
            sm.anomalies.push_back(sym.name + ": " + v.law + " " + v.witness);
            continue;
        }
        // locate the image inside the enumerated target signature
        std::string found;
        for (const auto& cand : sm.target.symbols)
            if (cand.arity == image.arity && cand.interp == image.interp) {
                found = cand.name;
                break;
            }
        if (found.empty()) {
            sm.anomalies.push_back(sym.name + ": image not present in the target signature");
            continue;
        }
        sm.symbol_map[sym.name] = found;
        if (sym.name == full_unary) sm.carrier_symbol = found;
    }
    return sm;
}

SigmaStructure reduct_structure(const SignatureMorphism& sm, const SigmaStructure& m) {
    SigmaStructure out;
    out.name = m.name + ".r";
    std::set<std::string> carrier;
    for (const auto& t : m.relations.at(sm.carrier_symbol)) carrier.insert(t.front());
    out.carrier.assign(carrier.begin(), carrier.end());
    for (const auto& sym : sm.source.symbols) {
        auto& set = out.relations[sym.name];
        auto it = sm.symbol_map.find(sym.name);
        if (it == sm.symbol_map.end()) continue; // anomalous symbol: left empty
        for (const auto& t : m.relations.at(it->second)) {
            bool inside = true;
            for (const auto& e : t)
                if (!carrier.count(e)) { inside = false; break; }
            if (inside) set.insert(t);
        }
    }
    return out;
}

ReductResult reduct_functor(const SignatureMorphism& sm, const EmbCategory& source) {
    ReductResult out;
    out.source_emb = source;
    out.target_emb.sigma = sm.source;
    for (const auto& s : source.structures) out.target_emb.structures.push_back(reduct_structure(sm, s));

    out.source_cat = emb_to_category(source);
    out.target_cat = emb_to_category(out.target_emb);

    out.functor.source = out.source_cat.cat;
    out.functor.target = out.target_cat.cat;
    for (std::size_t i = 0; i < source.structures.size(); ++i)
        out.functor.obj_map[source.structures[i].name] = out.target_emb.structures[i].name;
    for (const auto& m : out.source_cat.cat->morphisms) {
        const auto& act = out.source_cat.u.action.at(m.id);
        const std::string& rdom = out.functor.obj_map.at(m.dom);
        const std::string& rcod = out.functor.obj_map.at(m.cod);
        // restriction of the embedding to the reduct carrier
        std::map<std::string, std::string> restricted;
        for (const auto& e : out.target_cat.u.carrier.at(rdom)) restricted[e] = act.at(e);
        for (const auto& cand : out.target_cat.cat->hom(rdom, rcod))
            if (out.target_cat.u.action.at(cand) == restricted) {
                out.functor.mor_map[m.id] = cand;
                break;
            }
    }

    for (std::size_t i = 0; i < source.structures.size(); ++i) {
        auto& comp = out.carrier_inclusion.alpha[source.structures[i].name];
        for (const auto& e : out.target_emb.structures[i].carrier) comp[e] = e;
    }
    return out;
}

Verdict is_coherent_functor(const Functor& h, const ConcreteCategory& k1,
                            const ConcreteCategory& k2, const SubconcretenessWitness& w) {
    Verdict wv = validate_witness(h, k1, k2, w);
    if (!wv.pass) fail_precondition("is_coherent_functor: invalid witness: " + wv.witness);

    // carrier of the composite U2∘h at each object / morphism of K1
    auto carrier = [&](const std::string& a) -> const std::vector<std::string>& {
        return k2.u.carrier.at(h.obj_map.at(a));
    };
    auto action = [&](const std::string& m) -> const std::map<std::string, std::string>& {
        return k2.u.action.at(h.mor_map.at(m));
    };

    for (const auto& h1 : k1.cat->morphisms)
        for (const auto& g : k1.cat->morphisms) {
            if (h1.cod != g.cod) continue;
            const auto& dom_els = carrier(h1.dom);
            const auto& mid_els = carrier(g.dom);
            const auto& h_act = action(h1.id);
            const auto& g_act = action(g.id);

            std::vector<std::vector<std::string>> candidates(dom_els.size());
            bool possible = true;
            for (std::size_t i = 0; i < dom_els.size(); ++i) {
                for (const auto& b : mid_els)
                    if (g_act.at(b) == h_act.at(dom_els[i])) candidates[i].push_back(b);
                if (candidates[i].empty()) { possible = false; break; }
            }
            if (!possible) continue;

            auto lifts = k1.cat->hom(h1.dom, g.dom);
            std::map<std::string, std::string> f;
            std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
                if (i == dom_els.size()) {
                    for (const auto& cand : lifts)
                        if (action(cand) == f) return true;
                    return false;
                }
                for (const auto& b : candidates[i]) {
                    f[dom_els[i]] = b;
                    if (!go(i + 1)) return false;
                    f.erase(dom_els[i]);
                }
                return true;
            };
            if (!go(0)) {
                std::string witness = "triangle h=" + h1.id + " g=" + g.id + " f=[" + show_map(f) + "]";
                return Verdict::fail("coherence", witness);
            }
        }
    return Verdict::ok();
}

Verdict is_transportable_functor(const Functor& h, const ConcreteCategory& k1,
                                 const ConcreteCategory& k2) {
    CatView v2(*k2.cat);
    for (const auto& a : k1.cat->objects) {
        const std::string& ha = h.obj_map.at(a);
        for (const auto& m : k2.cat->morphisms) {
            if (m.dom != ha) continue;
            if (inverse_idx(v2, v2.mor_idx.at(m.id)) < 0) continue;
            bool lifted = false;
            for (const auto& cand : k1.cat->morphisms) {
                if (cand.dom != a) continue;
                if (h.mor_map.at(cand.id) != m.id) continue;
                if (is_isomorphism(*k1.cat, cand.id)) { lifted = true; break; }
            }
            if (!lifted)
                return Verdict::fail("transportability",
                                     "isomorphism " + m.id + " out of " + ha + " has no lift at " + a);
        }
    }
    return Verdict::ok();
}

} // namespace fincat
