/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cenda/identities.hpp"

#include <stdexcept>

#include "cenda/weyl.hpp"

namespace cenda {

std::optional<IdentityTag> identity_from_string(const std::string& s) {
    if (s == "C2") return IdentityTag::C2;
    if (s == "C3") return IdentityTag::C3;
    if (s == "conf-ass") return IdentityTag::ConfAss;
    if (s == "conf-ass1") return IdentityTag::ConfAss1;
    if (s == "eq2.2.1") return IdentityTag::Eq221;
    if (s == "eq2.2.2") return IdentityTag::Eq222;
    if (s == "eq2.2.3") return IdentityTag::Eq223;
    if (s == "eq2.2.4") return IdentityTag::Eq224;
    if (s == "anti-iso") return IdentityTag::AntiIso;
    if (s == "commutativity") return IdentityTag::Commutativity;
    return std::nullopt;
}

std::string identity_name(IdentityTag t) {
    switch (t) {
        case IdentityTag::C2: return "C2";
        case IdentityTag::C3: return "C3";
        case IdentityTag::ConfAss: return "conf-ass";
        case IdentityTag::ConfAss1: return "conf-ass1";
        case IdentityTag::Eq221: return "eq2.2.1";
        case IdentityTag::Eq222: return "eq2.2.2";
        case IdentityTag::Eq223: return "eq2.2.3";
        case IdentityTag::Eq224: return "eq2.2.4";
        case IdentityTag::AntiIso: return "anti-iso";
        case IdentityTag::Commutativity: return "commutativity";
    }
    return "?";
}

unsigned identity_arity(IdentityTag t) {
    switch (t) {
        case IdentityTag::C2:
        case IdentityTag::C3:
        case IdentityTag::AntiIso:
        case IdentityTag::Commutativity: return 2;
        default: return 3;
    }
}

unsigned identity_index_count(IdentityTag t) {
    switch (t) {
        case IdentityTag::C2:
        case IdentityTag::C3:
        case IdentityTag::AntiIso:
        case IdentityTag::Commutativity: return 1;
        default: return 2;
    }
}

// ---------------------------------------------------------------- ProductCache

namespace {

// Compact canonical serialization used only as the interning key; avoids
// stream formatting in the hot path.
std::string cache_key(const ConformalElement& e) {
    std::string s;
    s.reserve(96);
    s += std::to_string(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            for (const auto& [exp, c] : e.entry(i, j).terms()) {
                s += '|';
                s += std::to_string(i * e.size() + j);
                s += ',';
                s += std::to_string(exp.first);
                s += ',';
                s += std::to_string(exp.second);
                s += ':';
                s += c.str();
            }
    return s;
}

}  // namespace

std::size_t ProductCache::intern(const ConformalElement& e) {
    std::string key = cache_key(e);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    pool_.push_back(e);
    zero_.push_back(e.is_zero() ? 1 : 0);
    if (zero_.back()) zero_ids_.emplace(e.size(), pool_.size() - 1);
    index_.emplace(std::move(key), pool_.size() - 1);
    return pool_.size() - 1;
}

std::size_t ProductCache::zero_id(std::size_t n) {
    auto it = zero_ids_.find(n);
    if (it != zero_ids_.end()) return it->second;
    return intern(ConformalElement::zero(n));
}

std::size_t ProductCache::nprod_id(std::size_t a, std::size_t b, unsigned n) {
    if (zero_[a] || zero_[b]) return zero_id(pool_[a].size());
    // locality() evaluates the tail products once per pair, so indices at or
    // beyond the bound resolve without arithmetic
    if (n >= locality(a, b)) return zero_id(pool_[a].size());
    auto key = std::make_tuple(a, b, n);
    auto it = prod_.find(key);
    if (it != prod_.end()) return it->second;
    std::size_t id = intern(n_product(pool_[a], pool_[b], n));
    prod_.emplace(key, id);
    return id;
}

const ConformalElement& ProductCache::nprod(std::size_t a, std::size_t b, unsigned n) {
    return pool_[nprod_id(a, b, n)];
}

unsigned ProductCache::locality(std::size_t a, std::size_t b) {
    if (zero_[a] || zero_[b]) return 0;
    auto key = std::make_pair(a, b);
    auto it = loc_.find(key);
    if (it != loc_.end()) return it->second;
    unsigned l = locality_bound(pool_[a], pool_[b]);
    loc_.emplace(key, l);
    return l;
}

std::size_t ProductCache::curly_id(std::size_t a, std::size_t b, unsigned n) {
    if (zero_[a] || zero_[b]) return zero_id(pool_[a].size());
    const unsigned bound = locality(a, b);
    if (n >= bound) return zero_id(pool_[a].size());  // every summand vanishes
    auto key = std::make_tuple(a, b, n);
    auto it = curly_.find(key);
    if (it != curly_.end()) return it->second;
    ConformalElement acc = ConformalElement::zero(pool_[a].size());
    for (unsigned s = 0; n + s < bound; ++s) {
        ConformalElement term = nprod(a, b, n + s).mul_D_power(s).scaled(inv_factorial(s));
        if ((n + s) % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    std::size_t id = intern(acc);
    curly_.emplace(key, id);
    return id;
}

const ConformalElement& ProductCache::curly(std::size_t a, std::size_t b, unsigned n) {
    return pool_[curly_id(a, b, n)];
}

// ---------------------------------------------------------------- evaluators

namespace {

CheckReport verdict(IdentityTag tag, const std::vector<unsigned>& indices, const ConformalElement& lhs,
                    const ConformalElement& rhs) {
    CheckReport r;
    r.identity = identity_name(tag);
    r.indices = indices;
    if (lhs == rhs) return r;
    r.ok = false;
    r.lhs = lhs.str_inline();
    r.rhs = rhs.str_inline();
    return r;
}

}  // namespace

CheckReport check_identity_cached(IdentityTag tag, ProductCache& cache, const std::vector<std::size_t>& ids,
                                  const std::vector<unsigned>& indices) {
    if (ids.size() != identity_arity(tag))
        throw std::invalid_argument("check_identity: expected " + std::to_string(identity_arity(tag)) + " elements");
    if (indices.size() != identity_index_count(tag))
        throw std::invalid_argument("check_identity: expected " + std::to_string(identity_index_count(tag)) +
                                    " indices");

    const std::size_t N = cache.element(ids[0]).size();
    for (std::size_t id : ids)
        if (cache.element(id).size() != N) throw std::invalid_argument("check_identity: element size mismatch");

    switch (tag) {
        case IdentityTag::C2: {
            // u (n) Dv = D(u (n) v) + n * u (n-1) v
            const unsigned n = indices[0];
            std::size_t u = ids[0], v = ids[1];
            std::size_t dv = cache.intern(d_action(cache.element(v)));
            ConformalElement lhs = cache.nprod(u, dv, n);
            ConformalElement rhs = d_action(cache.nprod(u, v, n));
            if (n > 0) rhs += cache.nprod(u, v, n - 1).scaled(Rat(static_cast<long>(n)));
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::C3: {
            // Du (n) v = -n * u (n-1) v
            const unsigned n = indices[0];
            std::size_t u = ids[0], v = ids[1];
            std::size_t du = cache.intern(d_action(cache.element(u)));
            ConformalElement lhs = cache.nprod(du, v, n);
            ConformalElement rhs = ConformalElement::zero(N);
            if (n > 0) rhs = cache.nprod(u, v, n - 1).scaled(Rat(-static_cast<long>(n)));
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::ConfAss: {
            // (u (n) v) (m) w = sum_s (-1)^s C(n,s) u (n-s) (v (m+s) w)
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.nprod(cache.nprod_id(u, v, n), w, m);
            ConformalElement rhs = ConformalElement::zero(N);
            for (unsigned s = 0; s <= n; ++s) {
                const ConformalElement& t = cache.nprod(u, cache.nprod_id(v, w, m + s), n - s);
                if (t.is_zero()) continue;
                if (s % 2 == 1)
                    rhs -= t.scaled(Rat(binomial(n, s)));
                else
                    rhs += t.scaled(Rat(binomial(n, s)));
            }
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::ConfAss1: {
            // u (n) (v (m) w) = sum_s C(n,s) (u (n-s) v) (m+s) w
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.nprod(u, cache.nprod_id(v, w, m), n);
            ConformalElement rhs = ConformalElement::zero(N);
            for (unsigned s = 0; s <= n; ++s) {
                const ConformalElement& t = cache.nprod(cache.nprod_id(u, v, n - s), w, m + s);
                if (!t.is_zero()) rhs += t.scaled(Rat(binomial(n, s)));
            }
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::Eq221: {
            // u (n) {v (m) w} = {(u (n) v) (m) w}
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.nprod(u, cache.curly_id(v, w, m), n);
            ConformalElement rhs = cache.curly(cache.nprod_id(u, v, n), w, m);
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::Eq222: {
            // {u (n) (v (m) w)} = sum_s (-1)^s C(m,s) {{u (m-s) v} (n+s) w}
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.curly(u, cache.nprod_id(v, w, m), n);
            ConformalElement rhs = ConformalElement::zero(N);
            for (unsigned s = 0; s <= m; ++s) {
                const ConformalElement& t = cache.curly(cache.curly_id(u, v, m - s), w, n + s);
                if (t.is_zero()) continue;
                if (s % 2 == 1)
                    rhs -= t.scaled(Rat(binomial(m, s)));
                else
                    rhs += t.scaled(Rat(binomial(m, s)));
            }
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::Eq223: {
            // {u (n) {v (m) w}} = sum_s (-1)^s C(m,s) {{u (n+s) v} (m-s) w}
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.curly(u, cache.curly_id(v, w, m), n);
            ConformalElement rhs = ConformalElement::zero(N);
            for (unsigned s = 0; s <= m; ++s) {
                const ConformalElement& t = cache.curly(cache.curly_id(u, v, n + s), w, m - s);
                if (t.is_zero()) continue;
                if (s % 2 == 1)
                    rhs -= t.scaled(Rat(binomial(m, s)));
                else
                    rhs += t.scaled(Rat(binomial(m, s)));
            }
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::Eq224: {
            // {u (n) v} (m) w = sum_s (-1)^s C(n,s) u (m+s) (v (n-s) w)
            const unsigned n = indices[0], m = indices[1];
            std::size_t u = ids[0], v = ids[1], w = ids[2];
            ConformalElement lhs = cache.nprod(cache.curly_id(u, v, n), w, m);
            ConformalElement rhs = ConformalElement::zero(N);
            for (unsigned s = 0; s <= n; ++s) {
                const ConformalElement& t = cache.nprod(u, cache.nprod_id(v, w, n - s), m + s);
                if (t.is_zero()) continue;
                if (s % 2 == 1)
                    rhs -= t.scaled(Rat(binomial(n, s)));
                else
                    rhs += t.scaled(Rat(binomial(n, s)));
            }
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::Commutativity: {
            // a (n) b = {b (n) a}
            const unsigned n = indices[0];
            ConformalElement lhs = cache.nprod(ids[0], ids[1], n);
            ConformalElement rhs = cache.curly(ids[1], ids[0], n);
            return verdict(tag, indices, lhs, rhs);
        }
        case IdentityTag::AntiIso: {
            const unsigned n = indices[0];
            const ConformalElement& a = cache.element(ids[0]);
            const ConformalElement& b = cache.element(ids[1]);
            OracleReport rep = check_anti_iso(a, b, n, standard_probes(N, 2));
            CheckReport r;
            r.identity = identity_name(tag);
            r.indices = indices;
            r.ok = rep.ok;
            r.note = rep.detail;
            return r;
        }
    }
    throw std::invalid_argument("check_identity: unknown identity tag");
}

CheckReport check_identity(IdentityTag tag, const std::vector<ConformalElement>& elements,
                           const std::vector<unsigned>& indices) {
    ProductCache cache;
    std::vector<std::size_t> ids;
    ids.reserve(elements.size());
    for (const auto& e : elements) ids.push_back(cache.intern(e));
    return check_identity_cached(tag, cache, ids, indices);
}

}  // namespace cenda
