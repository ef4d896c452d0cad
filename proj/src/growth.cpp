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

#include "cenda/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "cenda/errors.hpp"

namespace cenda {

std::string verdict_name(GrowthVerdict v) {
    switch (v) {
        case GrowthVerdict::Finite: return "finite";
        case GrowthVerdict::Linear: return "linear";
        case GrowthVerdict::SuperlinearOrUnknown: return "superlinear-or-unknown";
    }
    return "?";
}

namespace {

// Coordinate key on the monomial basis x^q E_ij.
using ColKey = std::tuple<unsigned, std::size_t, std::size_t>;

// Rows of k[D]-coordinates for a family of elements, over a shared ordered
// column set.
struct CoordRows {
    std::vector<ColKey> columns;
    std::vector<std::vector<Poly1>> rows;
};

CoordRows coordinatize(const std::vector<ConformalElement>& elements) {
    CoordRows out;
    std::set<ColKey> keys;
    for (const auto& e : elements)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                for (const auto& [exp, c] : e.entry(i, j).terms()) keys.insert({exp.second, i, j});
    out.columns.assign(keys.begin(), keys.end());
    std::map<ColKey, std::size_t> index;
    for (std::size_t k = 0; k < out.columns.size(); ++k) index[out.columns[k]] = k;

    for (const auto& e : elements) {
        std::vector<Poly1> row(out.columns.size(), Poly1(Var::D));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                for (const auto& [exp, c] : e.entry(i, j).terms())
                    row[index[{exp.second, i, j}]] += Poly1::monomial(Var::D, exp.first, c);
        out.rows.push_back(std::move(row));
    }
    return out;
}

ConformalElement element_from_row(const std::vector<Poly1>& row, const std::vector<ColKey>& columns, std::size_t n) {
    Matrix<Poly2> m(n, n);
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (row[k].is_zero()) continue;
        auto [xq, i, j] = columns[k];
        for (const auto& [exp, c] : row[k].terms()) m.at(i, j) += Poly2::monomial(exp, xq, c);
    }
    return ConformalElement(m);
}

// Fraction-free Bareiss elimination; returns the rank over the fraction
// field. Row swaps only; pivot = minimal degree, ties by lowest row.
unsigned bareiss_rank(std::vector<std::vector<Poly1>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Poly1 prev = Poly1::constant(Var::D, 1);
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (pivot == rows || m[i][c].degree() < m[pivot][c].degree()) pivot = i;
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Poly1 num = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                auto [q, rem] = Poly1::divmod(num, prev);
                if (!rem.is_zero()) throw std::logic_error("bareiss_rank: non-exact division");
                m[i][j] = q;
            }
            m[i][c] = Poly1(Var::D);
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// Row-echelon reduction over k[D] by invertible row operations only: the
// row span (as a module, not just a vector space) is preserved exactly.
// Returns the nonzero echelon rows.
std::vector<std::vector<Poly1>> hermite_rows(std::vector<std::vector<Poly1>> m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        while (true) {
            std::size_t pivot = m.size();
            for (std::size_t i = r; i < m.size(); ++i) {
                if (m[i][c].is_zero()) continue;
                if (pivot == m.size() || m[i][c].degree() < m[pivot][c].degree()) pivot = i;
            }
            if (pivot == m.size()) break;
            std::swap(m[r], m[pivot]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c].is_zero()) continue;
                Poly1 q = Poly1::divmod(m[i][c], m[r][c]).first;
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (!m[i][c].is_zero()) clean = false;
            }
            if (clean) {
                Rat lead = m[r][c].leading().inverse();
                for (std::size_t j = c; j < cols; ++j) m[r][j] = lead * m[r][j];
                ++r;
                break;
            }
        }
    }
    m.resize(r, std::vector<Poly1>());
    return m;
}

std::string format_log_estimate(unsigned d, unsigned n) {
    double v = (d == 0 || n < 2) ? 0.0 : std::log(static_cast<double>(d)) / std::log(static_cast<double>(n));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

GrowthVerdict classify(const std::vector<unsigned>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] == d[i + 1]) {
            // Torsion-free dichotomy: a stalled filtration stays stalled.
            for (std::size_t j = i + 1; j + 1 < d.size(); ++j)
                if (d[j] != d[j + 1]) throw std::logic_error("gk_profile: rank increased after stabilizing");
            return GrowthVerdict::Finite;
        }
    }
    if (d.size() >= 3) {
        unsigned c1 = d[d.size() - 1] - d[d.size() - 2];
        unsigned c2 = d[d.size() - 2] - d[d.size() - 3];
        if (c1 == c2 && c1 > 0) return GrowthVerdict::Linear;
    }
    return GrowthVerdict::SuperlinearOrUnknown;
}

void validate_generators(const std::vector<ConformalElement>& generators) {
    if (generators.empty()) throw std::invalid_argument("growth: empty generator list");
    for (const auto& g : generators)
        if (g.size() != generators.front().size()) throw std::invalid_argument("growth: generator size mismatch");
}

}  // namespace

std::vector<ConformalElement> span_Cn(const std::vector<ConformalElement>& generators, unsigned n, std::size_t cap) {
    validate_generators(generators);
    std::map<std::string, std::size_t> seen;
    std::vector<ConformalElement> words;
    std::vector<ConformalElement> level;

    auto admit = [&](const ConformalElement& e) -> bool {
        if (e.is_zero()) return false;
        auto [it, fresh] = seen.emplace(e.str_inline(), words.size());
        if (!fresh) return false;
        words.push_back(e);
        if (words.size() > cap) throw limit_error("span_Cn: span size cap exceeded");
        return true;
    };

    for (const auto& g : generators)
        if (admit(g)) level.push_back(g);

    for (unsigned len = 2; len <= n; ++len) {
        std::vector<ConformalElement> next;
        for (const auto& w : level)
            for (const auto& g : generators) {
                const unsigned bound = locality_bound(w, g);
                for (unsigned m = 0; m < bound; ++m) {
                    ConformalElement p = n_product(w, g, m);
                    if (admit(p)) next.push_back(std::move(p));
                }
            }
        level = std::move(next);
        if (level.empty()) break;
    }
    return words;
}

unsigned rank_over_H(const std::vector<ConformalElement>& elements) {
    if (elements.empty()) return 0;
    for (const auto& e : elements)
        if (e.size() != elements.front().size()) throw std::invalid_argument("rank_over_H: size mismatch");
    CoordRows coords = coordinatize(elements);
    if (coords.columns.empty()) return 0;
    return bareiss_rank(std::move(coords.rows));
}

GrowthProfile gk_profile(const std::vector<ConformalElement>& generators, unsigned n_max, std::size_t cap) {
    validate_generators(generators);
    if (n_max < 2) throw std::invalid_argument("gk_profile: n_max must be at least 2");
    const std::size_t N = generators.front().size();

    GrowthProfile profile;
    profile.generators = generators;
    profile.window = n_max;

    // Reduced spanning set of the current filtration step.
    std::vector<ConformalElement> basis;
    {
        CoordRows coords = coordinatize(generators);
        for (auto& row : hermite_rows(std::move(coords.rows)))
            basis.push_back(element_from_row(row, coords.columns, N));
    }
    profile.d.push_back(static_cast<unsigned>(basis.size()));

    try {
        for (unsigned len = 2; len <= n_max; ++len) {
            std::vector<ConformalElement> pool = basis;
            for (const auto& w : basis)
                for (const auto& g : generators) {
                    const unsigned bound = locality_bound(w, g);
                    for (unsigned m = 0; m < bound; ++m) {
                        ConformalElement p = n_product(w, g, m);
                        if (!p.is_zero()) pool.push_back(std::move(p));
                        if (pool.size() > cap) throw limit_error("gk_profile: span size cap exceeded");
                    }
                }
            CoordRows coords = coordinatize(pool);
            std::vector<ConformalElement> next;
            for (auto& row : hermite_rows(std::move(coords.rows)))
                next.push_back(element_from_row(row, coords.columns, N));
            basis = std::move(next);
            profile.d.push_back(static_cast<unsigned>(basis.size()));
        }
    } catch (const limit_error&) {
        profile.truncated = true;
    }

    profile.window = static_cast<unsigned>(profile.d.size());
    profile.verdict = classify(profile.d);
    profile.log_estimate = format_log_estimate(profile.d.back(), profile.window);
    return profile;
}

}  // namespace cenda
