#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/concrete.hpp"

namespace testsupport {

// Compact category fixture: identities are generated as "id"+object and
// identity composites are filled in automatically; `comps` lists the
// remaining (g, f, g∘f) entries.
inline fincat::CatPtr make_cat(const std::string& name, const std::vector<std::string>& objects,
                               const std::vector<fincat::Morphism>& morphisms,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& comps = {}) {
    auto c = std::make_shared<fincat::FinCategory>();
    c->name = name;
    c->objects = objects;
    for (const auto& o : objects) {
        c->morphisms.push_back({"id" + o, o, o});
        c->identity[o] = "id" + o;
    }
    for (const auto& m : morphisms) c->morphisms.push_back(m);
    for (const auto& m : c->morphisms) {
        c->compose[{c->identity.at(m.cod), m.id}] = m.id;
        c->compose[{m.id, c->identity.at(m.dom)}] = m.id;
    }
    for (const auto& [g, f, h] : comps) c->compose[{g, f}] = h;
    return c;
}

inline fincat::ConcreteCategory with_u(
    fincat::CatPtr cat,
    const std::map<std::string, std::vector<std::string>>& carriers,
    const std::map<std::string, std::map<std::string, std::string>>& actions) {
    fincat::SetFunctor u;
    u.carrier = carriers;
    for (const auto& [obj, els] : carriers) {
        auto& v = u.carrier[obj];
        std::sort(v.begin(), v.end());
    }
    u.action = actions;
    for (const auto& [obj, id] : cat->identity) {
        auto& act = u.action[id];
        for (const auto& e : u.carrier.at(obj)) act[e] = e;
    }
    return {std::move(cat), std::move(u)};
}

} // namespace testsupport
