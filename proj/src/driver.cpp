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

#include "cenda/driver.hpp"

#include <fstream>
#include <sstream>

#include "cenda/dist.hpp"
#include "cenda/errors.hpp"
#include "cenda/growth.hpp"
#include "cenda/identities.hpp"
#include "cenda/isom.hpp"
#include "cenda/parse.hpp"
#include "cenda/rng.hpp"
#include "cenda/smith.hpp"
#include "cenda/weyl.hpp"

namespace cenda {

namespace {

// Uniform "key: value" / "key=value" rendering so that the report and kv
// formats stay in lockstep.
struct Lines {
    bool kv;
    std::ostringstream os;

    explicit Lines(bool kv_mode) : kv(kv_mode) {}
    void put(const std::string& key, const std::string& value) { os << key << (kv ? "=" : ": ") << value << "\n"; }
    void raw(const std::string& line) { os << line << "\n"; }
    std::string str() const { return os.str(); }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join_polys(const std::vector<Poly1>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ",";
        s += ps[i].str();
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void put_matrix_entries(Lines& out, const std::string& prefix, const Matrix<Poly1>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                out.put(prefix + "." + std::to_string(i + 1) + "." + std::to_string(j + 1), m.at(i, j).str());
}

void put_matrix2_entries(Lines& out, const std::string& prefix, const Matrix<Poly2>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                out.put(prefix + "." + std::to_string(i + 1) + "." + std::to_string(j + 1), m.at(i, j).str());
}

std::vector<ConformalElement> parse_all_elements(const std::vector<std::string>& texts) {
    std::vector<ConformalElement> out;
    for (const auto& t : texts) {
        auto v = parse_elements(t);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// ------------------------------------------------------------- check sweeps

unsigned sweep_bound(IdentityTag tag, ProductCache& cache, const std::vector<std::size_t>& ids) {
    switch (tag) {
        case IdentityTag::C2:
        case IdentityTag::C3: return cache.locality(ids[0], ids[1]) + 3;
        case IdentityTag::Commutativity:
            return std::max(cache.locality(ids[0], ids[1]), cache.locality(ids[1], ids[0])) + 2;
        case IdentityTag::AntiIso: return cache.locality(ids[1], ids[0]) + 2;
        default: {
            unsigned b = 0;
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t c = 0; c < 3; ++c)
                    if (a != c) b = std::max(b, cache.locality(ids[a], ids[c]));
            return b + 2;
        }
    }
}

struct SweepOutcome {
    bool ok = true;
    unsigned long instances = 0;
    unsigned long fail_tuple = 0;
    CheckReport report;
};

// Runs the identity over the whole (n[, m]) grid for one element tuple.
bool sweep_tuple(IdentityTag tag, ProductCache& cache, const std::vector<std::size_t>& ids, SweepOutcome& out) {
    const unsigned bound = sweep_bound(tag, cache, ids);
    const bool two_indices = identity_index_count(tag) == 2;
    for (unsigned n = 0; n < bound; ++n) {
        if (!two_indices) {
            ++out.instances;
            CheckReport r = check_identity_cached(tag, cache, ids, {n});
            if (!r.ok) {
                out.ok = false;
                out.report = std::move(r);
                return false;
            }
        } else {
            for (unsigned m = 0; m < bound; ++m) {
                ++out.instances;
                CheckReport r = check_identity_cached(tag, cache, ids, {n, m});
                if (!r.ok) {
                    out.ok = false;
                    out.report = std::move(r);
                    return false;
                }
            }
        }
    }
    return true;
}

CmdResult render_check(const std::string& name, const std::string& mode, const std::vector<std::string>& params,
                       const SweepOutcome& out, bool kv) {
    Lines lines(kv);
    lines.put("identity", name);
    lines.put("mode", mode);
    for (std::size_t i = 0; i + 1 < params.size(); i += 2) lines.put(params[i], params[i + 1]);
    lines.put("instances", std::to_string(out.instances));
    lines.put("result", out.ok ? "pass" : "FAIL");
    if (!out.ok) {
        lines.put("fail.tuple", std::to_string(out.fail_tuple));
        std::string idx;
        for (std::size_t i = 0; i < out.report.indices.size(); ++i) {
            if (i) idx += ",";
            idx += std::to_string(out.report.indices[i]);
        }
        lines.put("fail.indices", idx);
        if (!out.report.lhs.empty()) lines.put("fail.lhs", out.report.lhs);
        if (!out.report.rhs.empty()) lines.put("fail.rhs", out.report.rhs);
        if (!out.report.note.empty()) lines.put("fail.note", out.report.note);
    }
    return {out.ok ? 0 : 1, lines.str()};
}

}  // namespace

// ---------------------------------------------------------------- commands

AlgebraSpec parse_algebra_spec(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    in >> kind;
    if (kind == "cend" || kind == "curr") {
        long n = -1;
        if (!(in >> n) || n <= 0 || n > 64) throw std::invalid_argument("algebra spec: bad size in '" + text + "'");
        std::string rest;
        if (in >> rest) throw std::invalid_argument("algebra spec: trailing input in '" + text + "'");
        return kind == "cend" ? AlgebraSpec::cend(static_cast<std::size_t>(n))
                              : AlgebraSpec::curr(static_cast<std::size_t>(n));
    }
    if (kind == "cendq") {
        long n = -1;
        if (!(in >> n) || n <= 0 || n > 64) throw std::invalid_argument("algebra spec: bad size in '" + text + "'");
        std::string path;
        std::getline(in, path);
        std::size_t lead = path.find_first_not_of(" \t");
        if (lead == std::string::npos) throw std::invalid_argument("algebra spec: missing matrix file");
        std::size_t tail = path.find_last_not_of(" \t\r");
        path = path.substr(lead, tail - lead + 1);
        Matrix<Poly1> q = parse_pmat(read_file(path));
        return AlgebraSpec::cendq(static_cast<std::size_t>(n), std::move(q));
    }
    throw std::invalid_argument("algebra spec: expected cend/curr/cendq, got '" + kind + "'");
}

CmdResult cmd_product(const std::vector<std::string>& element_texts, unsigned n, bool kv) {
    std::vector<ConformalElement> elems = parse_all_elements(element_texts);
    if (elems.size() != 2) throw std::invalid_argument("product: expected exactly two elements");
    ConformalElement r = n_product(elems[0], elems[1], n);
    if (kv) {
        Lines lines(true);
        lines.put("n", std::to_string(n));
        lines.put("size", std::to_string(r.size()));
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j)
                if (!r.entry(i, j).is_zero())
                    lines.put("entry." + std::to_string(i + 1) + "." + std::to_string(j + 1), r.entry(i, j).str());
        return {0, lines.str()};
    }
    if (r.size() == 1) return {0, r.entry(0, 0).str() + "\n"};
    return {0, r.str()};
}

CmdResult cmd_check_random(const std::string& identity, std::uint64_t seed, unsigned count, unsigned size_cap,
                           unsigned deg_cap, bool kv) {
    auto tag = identity_from_string(identity);
    if (!tag) throw std::invalid_argument("check: unknown identity tag '" + identity + "'");
    if (size_cap == 0 || size_cap > 6) throw std::invalid_argument("check: size cap must be in 1..6");

    SweepRng rng(seed);
    SweepOutcome out;
    const unsigned arity = identity_arity(*tag);
    for (unsigned t = 0; t < count; ++t) {
        ProductCache cache;
        std::size_t n = rng.uniform(1, size_cap);
        std::vector<std::size_t> ids;
        for (unsigned k = 0; k < arity; ++k) ids.push_back(cache.intern(rng.element(n, deg_cap, deg_cap)));
        out.fail_tuple = t;
        if (!sweep_tuple(*tag, cache, ids, out)) break;
    }
    return render_check(identity, "random",
                        {"count", std::to_string(count), "seed", std::to_string(seed), "size_cap",
                         std::to_string(size_cap), "deg_cap", std::to_string(deg_cap)},
                        out, kv);
}

CmdResult cmd_check_elems(const std::string& identity, const std::string& elems_text, bool kv) {
    auto tag = identity_from_string(identity);
    if (!tag) throw std::invalid_argument("check: unknown identity tag '" + identity + "'");
    std::vector<ConformalElement> elems = parse_elements(elems_text);
    for (const auto& e : elems)
        if (e.size() != elems.front().size()) throw std::invalid_argument("check: elements must share one size");

    const unsigned arity = identity_arity(*tag);
    ProductCache cache;
    std::vector<std::size_t> ids;
    for (const auto& e : elems) ids.push_back(cache.intern(e));

    SweepOutcome out;
    // All ordered tuples, lexicographic by position.
    std::vector<std::size_t> pick(arity, 0);
    unsigned long tuple_index = 0;
    bool done = false;
    while (!done) {
        std::vector<std::size_t> tuple;
        for (unsigned k = 0; k < arity; ++k) tuple.push_back(ids[pick[k]]);
        out.fail_tuple = tuple_index;
        if (!sweep_tuple(*tag, cache, tuple, out)) break;
        ++tuple_index;
        // advance odometer
        unsigned k = 0;
        for (; k < arity; ++k) {
            if (++pick[k] < elems.size()) break;
            pick[k] = 0;
        }
        done = k == arity;
    }
    return render_check(identity, "elements", {"elements", std::to_string(elems.size())}, out, kv);
}

namespace {

CmdResult render_gk(const GrowthProfile& p, bool kv) {
    Lines lines(kv);
    if (kv) {
        lines.put("window", std::to_string(p.window));
        for (std::size_t i = 0; i < p.d.size(); ++i) lines.put("d." + std::to_string(i + 1), std::to_string(p.d[i]));
        for (std::size_t i = 1; i < p.d.size(); ++i)
            lines.put("delta." + std::to_string(i + 1), std::to_string(p.d[i] - p.d[i - 1]));
        lines.put("verdict", verdict_name(p.verdict));
        lines.put("log_estimate", p.log_estimate);
        lines.put("truncated", bool_str(p.truncated));
    } else {
        lines.raw("n d_n delta");
        for (std::size_t i = 0; i < p.d.size(); ++i) {
            std::string delta = i == 0 ? "-" : std::to_string(p.d[i] - p.d[i - 1]);
            lines.raw(std::to_string(i + 1) + " " + std::to_string(p.d[i]) + " " + delta);
        }
        lines.raw("verdict: " + verdict_name(p.verdict) + " (window " + std::to_string(p.window) + ")");
        lines.raw("log_estimate: " + p.log_estimate);
        if (p.truncated) lines.raw("truncated: true (span size cap)");
    }
    return {p.truncated ? 3 : 0, lines.str()};
}

}  // namespace

CmdResult cmd_gk_spec(const std::string& spec_text, unsigned n_max, bool kv) {
    AlgebraSpec spec = parse_algebra_spec(spec_text);
    return render_gk(gk_profile(default_generators(spec), n_max), kv);
}

CmdResult cmd_gk_gens(const std::string& gens_text, unsigned n_max, bool kv) {
    return render_gk(gk_profile(parse_elements(gens_text), n_max), kv);
}

CmdResult cmd_iso(const std::string& p_text, const std::string& q_text, bool kv) {
    Matrix<Poly1> P = parse_pmat(p_text);
    Matrix<Poly1> Q = parse_pmat(q_text);
    IsoVerdict v = iso_test(P, Q);
    Lines lines(kv);
    lines.put("isomorphic", bool_str(v.isomorphic));
    if (v.alpha) lines.put("alpha", v.alpha->str());
    lines.put("canonical_p", join_polys(v.canonical_p));
    lines.put("canonical_q", join_polys(v.canonical_q));
    lines.put("reason", iso_reason_name(v.reason));
    return {v.isomorphic ? 0 : 1, lines.str()};
}

CmdResult cmd_member(const std::string& spec_text, const std::string& elem_text, bool kv) {
    AlgebraSpec spec = parse_algebra_spec(spec_text);
    ConformalElement e = parse_element(elem_text);
    MemberVerdict v = membership(spec, e);
    Lines lines(kv);
    lines.put("member", bool_str(v.member));
    if (!v.detail.empty()) lines.put("detail", v.detail);
    if (v.witness) put_matrix2_entries(lines, "witness", *v.witness);
    return {v.member ? 0 : 1, lines.str()};
}

CmdResult cmd_unit(const std::string& elem_text, const std::string& probes_text, bool kv) {
    ConformalElement e = parse_element(elem_text);
    std::vector<ConformalElement> probes;
    std::string probe_note;
    if (probes_text.empty()) {
        probes = default_generators(AlgebraSpec::cend(e.size()));
        probe_note = "default generators of cend " + std::to_string(e.size());
    } else {
        probes = parse_elements(probes_text);
        probe_note = std::to_string(probes.size()) + " user probes";
    }
    bool ok = is_unit(e, probes);
    Lines lines(kv);
    lines.put("unit", bool_str(ok));
    lines.put("probes", probe_note);
    return {ok ? 0 : 1, lines.str()};
}

CmdResult cmd_idem(const std::string& elem_text, bool kv) {
    ConformalElement e = parse_element(elem_text);
    bool ok = is_idempotent(e);
    Lines lines(kv);
    lines.put("idempotent", bool_str(ok));
    return {ok ? 0 : 1, lines.str()};
}

CmdResult cmd_snf(const std::string& mat_text, bool kv) {
    Matrix<Poly1> A = parse_pmat(mat_text);
    SNFResult r = smith_normal_form(A);
    Lines lines(kv);
    lines.put("rows", std::to_string(A.rows()));
    lines.put("cols", std::to_string(A.cols()));
    lines.put("invariant_factors", join_polys(r.invariant_factors));
    put_matrix_entries(lines, "u", r.U);
    put_matrix_entries(lines, "s", r.S);
    put_matrix_entries(lines, "v", r.V);
    return {0, lines.str()};
}

CmdResult cmd_oracle(std::uint64_t seed, unsigned count, unsigned size_cap, unsigned deg_cap, bool kv) {
    if (size_cap == 0 || size_cap > 6) throw std::invalid_argument("oracle: size cap must be in 1..6");
    SweepRng rng(seed);
    Lines lines(kv);
    lines.put("seed", std::to_string(seed));
    lines.put("count", std::to_string(count));
    bool all_ok = true;
    std::string first_fail;

    // Part 1: operator realization vs closed product formula.
    unsigned long weyl_checked = 0;
    for (unsigned t = 0; t < count && all_ok; ++t) {
        std::size_t n = rng.uniform(1, size_cap);
        ConformalElement a = rng.element(n, deg_cap, deg_cap);
        ConformalElement b = rng.element(n, deg_cap, deg_cap);
        unsigned np = rng.uniform(0, locality_bound(a, b));
        unsigned m = rng.uniform(0, deg_cap + 2);
        VNElement probe = rng.vn(n, 2);
        OracleReport rep = oracle_check_product(a, b, np, m, {probe});
        ++weyl_checked;
        if (!rep.ok) {
            all_ok = false;
            first_fail = "weyl: " + rep.detail;
        }
    }
    lines.put("weyl.checked", std::to_string(weyl_checked));

    // Part 2: residue closed form vs windowed expansion.
    unsigned long residue_checked = 0;
    unsigned residue_count = std::max(1u, count / 2);
    for (unsigned t = 0; t < residue_count && all_ok; ++t) {
        std::size_t n = rng.uniform(1, 2);
        DistSum a(rng.symbol(n, 3, 2));
        DistSum b(rng.symbol(n, 3, 2));
        unsigned m = rng.uniform(0, 5);
        std::string detail;
        ++residue_checked;
        if (!verify_residue_product(a, b, m, 12, &detail)) {
            all_ok = false;
            first_fail = "residue: " + detail;
        }
    }
    lines.put("residue.checked", std::to_string(residue_checked));

    // Part 3: 0-multiplication operators compose like the 0-product.
    unsigned long a0_checked = 0;
    unsigned a0_count = std::max(1u, count / 4);
    for (unsigned t = 0; t < a0_count && all_ok; ++t) {
        std::size_t n = rng.uniform(1, size_cap);
        ConformalElement a = rng.element(n, deg_cap, deg_cap);
        ConformalElement b = rng.element(n, deg_cap, deg_cap);
        ConformalElement probe = rng.element(n, deg_cap, deg_cap);
        auto lhs = zero_mult_operator(n_product(a, b, 0))(probe);
        auto rhs = zero_mult_operator(a)(zero_mult_operator(b)(probe));
        ++a0_checked;
        if (!(lhs == rhs)) {
            all_ok = false;
            first_fail = "a0: composition mismatch";
        }
    }
    lines.put("a0.checked", std::to_string(a0_checked));

    // Part 4: the distribution embedding intertwines the products on the
    // current subalgebra.
    unsigned long embed_checked = 0;
    unsigned embed_count = std::max(1u, count / 4);
    for (unsigned t = 0; t < embed_count && all_ok; ++t) {
        std::size_t n = rng.uniform(1, 2);
        ConformalElement a = rng.element(n, deg_cap, 0);
        ConformalElement b = rng.element(n, deg_cap, 0);
        DistSum ea = curr_embed_element(a);
        DistSum eb = curr_embed_element(b);
        unsigned bound = std::max(locality_bound(a, b), symbol_locality_bound(ea, eb)) + 1;
        for (unsigned r = 0; r < bound; ++r) {
            ++embed_checked;
            if (!(residue_n_product(ea, eb, r) == curr_embed_element(n_product(a, b, r)))) {
                all_ok = false;
                first_fail = "embed: residue product disagrees with the embedded product at index " +
                             std::to_string(r);
                break;
            }
        }
    }
    lines.put("embed.checked", std::to_string(embed_checked));

    lines.put("result", all_ok ? "pass" : "FAIL");
    if (!all_ok) lines.put("fail", first_fail);
    return {all_ok ? 0 : 1, lines.str()};
}

}  // namespace cenda
