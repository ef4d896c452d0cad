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

#ifndef CENDA_IDENTITIES_HPP
#define CENDA_IDENTITIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cenda/conformal.hpp"

namespace cenda {

/// The checkable structural identities. C2/C3 are the two D-compatibility
/// rules, conf-ass/conf-ass1 the two equivalent associativity expansions,
/// eq2.2.1..eq2.2.4 the mixed plain/curly product identities, anti-iso the
/// left/right realization exchange, and commutativity the a (n) b = {b (n) a}
/// test.
enum class IdentityTag { C2, C3, ConfAss, ConfAss1, Eq221, Eq222, Eq223, Eq224, AntiIso, Commutativity };

std::optional<IdentityTag> identity_from_string(const std::string& s);
std::string identity_name(IdentityTag t);
unsigned identity_arity(IdentityTag t);         // number of elements
unsigned identity_index_count(IdentityTag t);   // number of product indices

/// Structured verdict: on failure carries the failing indices and both side
/// values in canonical form, so property-test output is actionable.
struct CheckReport {
    bool ok = true;
    std::string identity;
    std::vector<unsigned> indices;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/**
 * Memoizes n-products within a sweep. Elements are interned by canonical
 * form; the cache key is (left id, right id, n). Grid sweeps over (n, m)
 * revisit the same pair products constantly, which this makes cheap.
 */
class ProductCache {
   public:
    std::size_t intern(const ConformalElement& e);
    const ConformalElement& element(std::size_t id) const { return pool_[id]; }
    const ConformalElement& nprod(std::size_t a, std::size_t b, unsigned n);
    std::size_t nprod_id(std::size_t a, std::size_t b, unsigned n);
    const ConformalElement& curly(std::size_t a, std::size_t b, unsigned n);
    std::size_t curly_id(std::size_t a, std::size_t b, unsigned n);
    unsigned locality(std::size_t a, std::size_t b);

    bool known_zero(std::size_t id) const { return zero_[id]; }

   private:
    std::size_t zero_id(std::size_t n);

    std::vector<ConformalElement> pool_;
    std::vector<char> zero_;
    std::map<std::size_t, std::size_t> zero_ids_;  // size -> id of the zero element
    std::map<std::string, std::size_t> index_;
    std::map<std::tuple<std::size_t, std::size_t, unsigned>, std::size_t> prod_;
    std::map<std::tuple<std::size_t, std::size_t, unsigned>, std::size_t> curly_;
    std::map<std::pair<std::size_t, std::size_t>, unsigned> loc_;
};

/**
 * Evaluates one instance of the identity on the given elements and indices
 * (their counts must match the identity's arity and index count). All sums
 * are finite by locality; comparison is exact.
 */
CheckReport check_identity(IdentityTag tag, const std::vector<ConformalElement>& elements,
                           const std::vector<unsigned>& indices);

/// Same, reusing a caller-provided cache (ids refer to cache.intern results).
CheckReport check_identity_cached(IdentityTag tag, ProductCache& cache, const std::vector<std::size_t>& ids,
                                  const std::vector<unsigned>& indices);

}  // namespace cenda

#endif
