#include "fincat/category.hpp"

#include <algorithm>
#include <set>

namespace fincat {

const Morphism* FinCategory::find(const std::string& mor_id) const {
    for (const auto& m : morphisms)
        if (m.id == mor_id) return &m;
    return nullptr;
}

bool FinCategory::has_object(const std::string& obj) const {
    return std::find(objects.begin(), objects.end(), obj) != objects.end();
}

std::optional<std::string> FinCategory::composite(const std::string& g, const std::string& f) const {
    auto it = compose.find({g, f});
    if (it == compose.end()) return std::nullopt;
    return it->second;
}

bool FinCategory::is_identity(const std::string& mor_id) const {
    for (const auto& [obj, id] : identity)
        if (id == mor_id) return true;
    return false;
}

std::vector<std::string> FinCategory::hom(const std::string& dom, const std::string& cod) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.dom == dom && m.cod == cod) out.push_back(m.id);
    return out;
}

CatView::CatView(const FinCategory& c) : cat(c) {
    const int no = static_cast<int>(c.objects.size());
    const int nm = static_cast<int>(c.morphisms.size());
    for (int i = 0; i < no; ++i) obj_idx.emplace(c.objects[i], i);
    for (int i = 0; i < nm; ++i) mor_idx.emplace(c.morphisms[i].id, i);
    dom_of.resize(nm);
    cod_of.resize(nm);
    hom.assign(no, std::vector<std::vector<int>>(no));
    for (int i = 0; i < nm; ++i) {
        dom_of[i] = obj_idx.at(c.morphisms[i].dom);
        cod_of[i] = obj_idx.at(c.morphisms[i].cod);
        hom[dom_of[i]][cod_of[i]].push_back(i);
    }
    comp.assign(static_cast<std::size_t>(nm) * nm, -1);
    for (const auto& [pair, h] : c.compose) {
        auto gi = mor_idx.find(pair.first);
        auto fi = mor_idx.find(pair.second);
        auto hi = mor_idx.find(h);
        if (gi == mor_idx.end() || fi == mor_idx.end() || hi == mor_idx.end()) continue;
        comp[static_cast<std::size_t>(gi->second) * nm + fi->second] = hi->second;
    }
}

Verdict validate_category(const FinCategory& c) {
    // Structural pass: every reference must resolve before laws are checked.
    std::set<std::string> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size())
        return Verdict::fail("structure", "duplicate object identifier");
    std::set<std::string> mors;
    for (const auto& m : c.morphisms) {
        if (!mors.insert(m.id).second)
            return Verdict::fail("structure", "duplicate morphism identifier " + m.id);
        if (!objs.count(m.dom))
            return Verdict::fail("structure", "morphism " + m.id + " has unknown dom " + m.dom);
        if (!objs.count(m.cod))
            return Verdict::fail("structure", "morphism " + m.id + " has unknown cod " + m.cod);
    }
    for (const auto& obj : c.objects) {
        auto it = c.identity.find(obj);
        if (it == c.identity.end())
            return Verdict::fail("structure", "object " + obj + " has no identity");
        const Morphism* m = c.find(it->second);
        if (!m)
            return Verdict::fail("structure", "identity of " + obj + " names unknown morphism " + it->second);
        if (m->dom != obj || m->cod != obj)
            return Verdict::fail("structure", "identity of " + obj + " is not an endomorphism: " + m->id);
    }
    for (const auto& [obj, id] : c.identity)
        if (!objs.count(obj))
            return Verdict::fail("structure", "identity entry for unknown object " + obj);
    for (const auto& [pair, h] : c.compose) {
        const Morphism* g = c.find(pair.first);
        const Morphism* f = c.find(pair.second);
        if (!g || !f || !c.find(h))
            return Verdict::fail("structure", "compose entry (" + pair.first + "," + pair.second +
                                                  ") = " + h + " names unknown morphisms");
        if (f->cod != g->dom)
            return Verdict::fail("structure", "compose entry (" + pair.first + "," + pair.second +
                                                  ") pairs non-composable morphisms");
    }

    CatView v(c);
    const int nm = v.n_mor();

    // Totality and closure on composable pairs.
    std::vector<std::vector<int>> out_of(v.n_obj()); // morphisms by dom
    for (int f = 0; f < nm; ++f) out_of[v.dom_of[f]].push_back(f);
    for (int f = 0; f < nm; ++f)
        for (int g : out_of[v.cod_of[f]]) {
            int h = v.composite(g, f);
            const auto& gm = c.morphisms[g];
            const auto& fm = c.morphisms[f];
            if (h < 0)
                return Verdict::fail("totality", "no composite for (" + gm.id + "," + fm.id + ")");
            if (v.dom_of[h] != v.dom_of[f] || v.cod_of[h] != v.cod_of[g])
                return Verdict::fail("closure", "(" + gm.id + "," + fm.id + ") = " + c.morphisms[h].id);
        }

    // Identity laws.
    for (int f = 0; f < nm; ++f) {
        const auto& fm = c.morphisms[f];
        int id_dom = v.mor_idx.at(c.identity.at(fm.dom));
        int id_cod = v.mor_idx.at(c.identity.at(fm.cod));
        if (v.composite(f, id_dom) != f)
            return Verdict::fail("identity", fm.id + " o " + c.morphisms[id_dom].id);
        if (v.composite(id_cod, f) != f)
            return Verdict::fail("identity", c.morphisms[id_cod].id + " o " + fm.id);
    }

    // Associativity over all composable triples.
    for (int f = 0; f < nm; ++f)
        for (int g : out_of[v.cod_of[f]]) {
            int gf = v.composite(g, f);
            if (gf < 0) continue; // reported by totality
            for (int h : out_of[v.cod_of[g]]) {
                int hg = v.composite(h, g);
                if (hg < 0) continue;
                if (v.composite(h, gf) != v.composite(hg, f))
                    return Verdict::fail("associativity", "(" + c.morphisms[h].id + "," +
                                                              c.morphisms[g].id + "," +
                                                              c.morphisms[f].id + ")");
            }
        }

    return Verdict::ok();
}

bool is_mono_idx(const CatView& v, int f) {
    int a = v.dom_of[f];
    for (int x = 0; x < v.n_obj(); ++x) {
        const auto& par = v.hom[x][a];
        for (std::size_t i = 0; i < par.size(); ++i)
            for (std::size_t j = i + 1; j < par.size(); ++j)
                if (v.composite(f, par[i]) == v.composite(f, par[j])) return false;
    }
    return true;
}

int inverse_idx(const CatView& v, int f) {
    int a = v.dom_of[f], b = v.cod_of[f];
    int id_a = v.mor_idx.at(v.cat.identity.at(v.cat.objects[a]));
    int id_b = v.mor_idx.at(v.cat.identity.at(v.cat.objects[b]));
    for (int g : v.hom[b][a])
        if (v.composite(f, g) == id_b && v.composite(g, f) == id_a) return g;
    return -1;
}

bool is_mono(const FinCategory& c, const std::string& mor_id) {
    CatView v(c);
    return is_mono_idx(v, v.mor_idx.at(mor_id));
}

std::optional<std::string> is_isomorphism(const FinCategory& c, const std::string& mor_id) {
    CatView v(c);
    int g = inverse_idx(v, v.mor_idx.at(mor_id));
    if (g < 0) return std::nullopt;
    return c.morphisms[g].id;
}

bool iso_exists(const FinCategory& c, const std::string& a, const std::string& b) {
    CatView v(c);
    int ai = v.obj_idx.at(a), bi = v.obj_idx.at(b);
    for (int m : v.hom[ai][bi])
        if (inverse_idx(v, m) >= 0) return true;
    return false;
}

CatPtr terminal_category(const std::string& name) {
    auto c = std::make_shared<FinCategory>();
    c->name = name;
    c->objects = {"T"};
    c->morphisms = {{"idT", "T", "T"}};
    c->identity = {{"T", "idT"}};
    c->compose = {{{"idT", "idT"}, "idT"}};
    return c;
}

} // namespace fincat
