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

#include "cenda.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cenda/conformal.hpp"
#include "cenda/driver.hpp"
#include "cenda/errors.hpp"
#include "cenda/parse.hpp"

struct cenda_elem {
    cenda::ConformalElement v;
};

struct cenda_pmat {
    cenda::Matrix<cenda::Poly1> v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cenda_status classify_current_exception() {
    try {
        throw;
    } catch (const cenda::parse_error& e) {
        g_last_error = e.what();
        return CENDA_INVALID_INPUT;
    } catch (const cenda::limit_error& e) {
        g_last_error = e.what();
        return CENDA_RESOURCE_LIMIT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CENDA_INVALID_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CENDA_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return CENDA_INTERNAL_ERROR;
    }
}

template <class Fn>
cenda_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (...) {
        return classify_current_exception();
    }
}

// Batch commands: translate CmdResult into (report text, status); a nonzero
// status still carries a report, while thrown failures turn into the
// exit-code discipline with the message in both channels.
template <class Fn>
cenda_status run_command(char** report, Fn&& fn) {
    if (report == nullptr) {
        g_last_error = "report output pointer is null";
        return CENDA_INVALID_INPUT;
    }
    *report = nullptr;
    try {
        g_last_error.clear();
        cenda::CmdResult r = fn();
        *report = dup_string(r.text);
        if (r.status != 0) g_last_error = "command reported status " + std::to_string(r.status);
        return static_cast<cenda_status>(r.status);
    } catch (...) {
        cenda_status st = classify_current_exception();
        *report = dup_string("error: " + g_last_error + "\n");
        return st;
    }
}

}  // namespace

extern "C" {

const char* cenda_version(void) { return "0.1.0"; }

const char* cenda_last_error(void) { return g_last_error.c_str(); }

void cenda_string_free(char* s) { std::free(s); }

cenda_status cenda_elem_parse(const char* text, cenda_elem** out) {
    if (text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new cenda_elem{cenda::parse_element(text)};
        return CENDA_OK;
    });
}

cenda_status cenda_elem_print(const cenda_elem* e, char** out) {
    if (e == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    return guarded([&]() {
        *out = dup_string(e->v.str());
        return CENDA_OK;
    });
}

cenda_status cenda_elem_size(const cenda_elem* e, size_t* out) {
    if (e == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    *out = e->v.size();
    return CENDA_OK;
}

void cenda_elem_free(cenda_elem* e) { delete e; }

cenda_status cenda_pmat_parse(const char* text, cenda_pmat** out) {
    if (text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new cenda_pmat{cenda::parse_pmat(text)};
        return CENDA_OK;
    });
}

cenda_status cenda_pmat_print(const cenda_pmat* m, char** out) {
    if (m == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    return guarded([&]() {
        *out = dup_string(cenda::pmat_str(m->v));
        return CENDA_OK;
    });
}

void cenda_pmat_free(cenda_pmat* m) { delete m; }

cenda_status cenda_elem_product(const cenda_elem* a, const cenda_elem* b, unsigned n, cenda_elem** out) {
    if (a == nullptr || b == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    *out = nullptr;
    return guarded([&]() {
        *out = new cenda_elem{cenda::n_product(a->v, b->v, n)};
        return CENDA_OK;
    });
}

cenda_status cenda_elem_locality(const cenda_elem* a, const cenda_elem* b, unsigned* bound) {
    if (a == nullptr || b == nullptr || bound == nullptr) {
        g_last_error = "null argument";
        return CENDA_INVALID_INPUT;
    }
    return guarded([&]() {
        *bound = cenda::locality_bound(a->v, b->v);
        return CENDA_OK;
    });
}

cenda_status cenda_cmd_product(const char* const* element_texts, size_t n_texts, unsigned n, int kv, char** report) {
    return run_command(report, [&]() {
        if (element_texts == nullptr || n_texts == 0) throw std::invalid_argument("product: no input");
        std::vector<std::string> texts;
        for (size_t i = 0; i < n_texts; ++i) {
            if (element_texts[i] == nullptr) throw std::invalid_argument("product: null input text");
            texts.emplace_back(element_texts[i]);
        }
        return cenda::cmd_product(texts, n, kv != 0);
    });
}

cenda_status cenda_cmd_check_random(const char* identity, uint64_t seed, unsigned count, unsigned size_cap,
                                    unsigned deg_cap, int kv, char** report) {
    return run_command(report, [&]() {
        if (identity == nullptr) throw std::invalid_argument("check: null identity");
        return cenda::cmd_check_random(identity, seed, count, size_cap, deg_cap, kv != 0);
    });
}

cenda_status cenda_cmd_check_elems(const char* identity, const char* elems_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (identity == nullptr || elems_text == nullptr) throw std::invalid_argument("check: null input");
        return cenda::cmd_check_elems(identity, elems_text, kv != 0);
    });
}

cenda_status cenda_cmd_gk_spec(const char* spec, unsigned n_max, int kv, char** report) {
    return run_command(report, [&]() {
        if (spec == nullptr) throw std::invalid_argument("gk: null spec");
        return cenda::cmd_gk_spec(spec, n_max, kv != 0);
    });
}

cenda_status cenda_cmd_gk_gens(const char* gens_text, unsigned n_max, int kv, char** report) {
    return run_command(report, [&]() {
        if (gens_text == nullptr) throw std::invalid_argument("gk: null generators");
        return cenda::cmd_gk_gens(gens_text, n_max, kv != 0);
    });
}

cenda_status cenda_cmd_iso(const char* p_text, const char* q_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (p_text == nullptr || q_text == nullptr) throw std::invalid_argument("iso: null input");
        return cenda::cmd_iso(p_text, q_text, kv != 0);
    });
}

cenda_status cenda_cmd_member(const char* spec, const char* elem_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (spec == nullptr || elem_text == nullptr) throw std::invalid_argument("member: null input");
        return cenda::cmd_member(spec, elem_text, kv != 0);
    });
}

cenda_status cenda_cmd_unit(const char* elem_text, const char* probes_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (elem_text == nullptr) throw std::invalid_argument("unit: null input");
        return cenda::cmd_unit(elem_text, probes_text == nullptr ? "" : probes_text, kv != 0);
    });
}

cenda_status cenda_cmd_idem(const char* elem_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (elem_text == nullptr) throw std::invalid_argument("idem: null input");
        return cenda::cmd_idem(elem_text, kv != 0);
    });
}

cenda_status cenda_cmd_snf(const char* mat_text, int kv, char** report) {
    return run_command(report, [&]() {
        if (mat_text == nullptr) throw std::invalid_argument("snf: null input");
        return cenda::cmd_snf(mat_text, kv != 0);
    });
}

cenda_status cenda_cmd_oracle(uint64_t seed, unsigned count, unsigned size_cap, unsigned deg_cap, int kv,
                              char** report) {
    return run_command(report, [&]() { return cenda::cmd_oracle(seed, count, size_cap, deg_cap, kv != 0); });
}

}  // extern "C"
