#include "latcount/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "latcount/reduce.hpp"
#include "json.hpp"

namespace latcount {

ClassKey classify(const Poset& p) {
    const ElementSet red = lattice_reducibles(p);
    ClassKey key;
    key.n = p.size();
    key.r = popcount(red);
    key.k = nullity(p);
    key.rc = is_rc(p);
    if (key.r >= 2) key.h = height(basic_block(p));
    return key;
}

int default_workers() {
    if (const char* env = std::getenv("LATCOUNT_WORKERS")) {
        const int value = std::atoi(env);
        if (value >= 1) return std::min(value, 256);
    }
    return 1;
}

namespace {

// Runs body(begin, end, out) over `workers` contiguous slices of [0, count)
// and returns the union of the per-slice key sets.
template <typename Body>
std::set<CanonicalForm> parallel_collect(std::size_t count, int workers, Body body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    std::vector<std::set<CanonicalForm>> parts(workers);
    if (workers == 1) {
        body(std::size_t{0}, count, parts[0]);
    } else {
        std::vector<std::jthread> threads;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(count, w * chunk);
            const std::size_t end = std::min(count, begin + chunk);
            threads.emplace_back([&, begin, end, w] { body(begin, end, parts[w]); });
        }
    }
    std::set<CanonicalForm> merged;
    for (auto& part : parts) merged.merge(part);
    return merged;
}

// A finite meet-semilattice with 0 stays one when a new maximal element m is
// put above the down-set of antichain A, as long as every x meets m: the
// set down(x) & down(A) needs a greatest element.
bool extension_keeps_meets(const Poset& s, ElementSet antichain) {
    ElementSet below = 0;
    for (Element a : elements_of(antichain)) below |= s.down_set(a);
    for (Element x = 0; x < s.size(); ++x) {
        const ElementSet common = s.down_set(x) & below;
        bool has_max = false;
        for (Element z : elements_of(common)) {
            if ((common & ~s.down_set(z)) == 0) {
                has_max = true;
                break;
            }
        }
        if (!has_max) return false;
    }
    return true;
}

bool is_antichain(const Poset& s, ElementSet set) {
    for (Element a : elements_of(set)) {
        if ((s.up_set(a) & set) != bit(a)) return false;
    }
    return true;
}

Poset with_new_element(const Poset& s, ElementSet lower_covers) {
    std::vector<Cover> covers = s.covers();
    for (Element a : elements_of(lower_covers)) covers.push_back({a, s.size()});
    return Poset(s.size() + 1, std::move(covers));
}

std::vector<CanonicalForm> next_semilattices(const std::vector<CanonicalForm>& level, int workers) {
    auto merged = parallel_collect(level.size(), workers, [&](std::size_t begin, std::size_t end, auto& out) {
        for (std::size_t i = begin; i < end; ++i) {
            const Poset s = level[i].poset();
            const ElementSet limit = bit(s.size());
            for (ElementSet a = 1; a < limit; ++a) {
                if (!is_antichain(s, a) || !extension_keeps_meets(s, a)) continue;
                out.insert(canonical_form(with_new_element(s, a)));
            }
        }
    });
    return {merged.begin(), merged.end()};
}

}  // namespace

std::vector<CanonicalForm> enumerate_all_lattices(int n, int workers) {
    if (n < 1 || n > kExhaustiveMaxN) {
        throw BudgetError("exhaustive enumeration supports 1 <= n <= " + std::to_string(kExhaustiveMaxN));
    }
    if (n == 1) return {canonical_form(chain(1))};
    // Lattices on n elements are meet-semilattices with 0 on n - 1 elements
    // plus a new top.
    std::vector<CanonicalForm> level = {canonical_form(chain(1))};
    for (int size = 1; size < n - 1; ++size) level = next_semilattices(level, workers);
    auto merged = parallel_collect(level.size(), workers, [&](std::size_t begin, std::size_t end, auto& out) {
        for (std::size_t i = begin; i < end; ++i) {
            const Poset s = level[i].poset();
            ElementSet maximal = 0;
            for (Element x = 0; x < s.size(); ++x) {
                if (s.upper_covers(x) == 0) maximal |= bit(x);
            }
            out.insert(canonical_form(with_new_element(s, maximal)));
        }
    });
    return {merged.begin(), merged.end()};
}

namespace {

Poset attach_chain(const Poset& l, Element a, Element b, int length) {
    std::vector<Cover> covers = l.covers();
    const int base = l.size();
    covers.push_back({a, base});
    for (int i = 0; i + 1 < length; ++i) covers.push_back({base + i, base + i + 1});
    covers.push_back({base + length - 1, b});
    return Poset(base + length, std::move(covers));
}

}  // namespace

std::vector<CanonicalForm> enumerate_adjunct_lattices(int n, int k_max, int workers) {
    if (n < 1 || n > kAdjunctMaxN) {
        throw BudgetError("adjunct enumeration supports 1 <= n <= " + std::to_string(kAdjunctMaxN));
    }
    if (k_max < 0 || k_max > kAdjunctMaxK) {
        throw BudgetError("adjunct enumeration supports 0 <= k_max <= " + std::to_string(kAdjunctMaxK));
    }
    // current[m]: adjuncts of l + 1 chains on m elements.
    std::vector<std::vector<CanonicalForm>> current(n + 1);
    for (int m = 1; m <= n; ++m) current[m] = {canonical_form(chain(m))};
    std::set<CanonicalForm> result(current[n].begin(), current[n].end());

    for (int l = 1; l <= k_max; ++l) {
        (void)l;
        const int largest = n;
        std::vector<std::pair<int, std::size_t>> jobs;
        for (int m = 1; m < largest; ++m) {
            for (std::size_t i = 0; i < current[m].size(); ++i) jobs.emplace_back(m, i);
        }
        std::vector<std::vector<CanonicalForm>> next(n + 1);
        std::mutex guard;
        std::vector<std::set<CanonicalForm>> by_size(n + 1);
        parallel_collect(jobs.size(), workers, [&](std::size_t begin, std::size_t end, auto&) {
            std::vector<std::set<CanonicalForm>> local(n + 1);
            for (std::size_t j = begin; j < end; ++j) {
                const auto [m, i] = jobs[j];
                const Poset base = current[m][i].poset();
                for (Element a = 0; a < m; ++a) {
                    for (Element b : elements_of(base.up_set(a) & ~bit(a) & ~base.upper_covers(a))) {
                        for (int c = 1; m + c <= largest; ++c) {
                            local[m + c].insert(canonical_form(attach_chain(base, a, b, c)));
                        }
                    }
                }
            }
            std::lock_guard lock(guard);
            for (int m = 1; m <= n; ++m) by_size[m].merge(local[m]);
        });
        for (int m = 1; m <= n; ++m) next[m].assign(by_size[m].begin(), by_size[m].end());
        result.insert(next[n].begin(), next[n].end());
        current = std::move(next);
    }
    return {result.begin(), result.end()};
}

std::string_view name_of(Oracle oracle) { return oracle == Oracle::Exhaustive ? "exhaustive" : "adjunct"; }

LatticeFacts lattice_facts(const Poset& lattice) {
    LatticeFacts facts;
    facts.key = canonical_form(lattice);
    const ElementSet red = lattice_reducibles(lattice);
    facts.cls.n = lattice.size();
    facts.cls.r = popcount(red);
    facts.cls.k = nullity(lattice);
    facts.cls.rc = is_rc(lattice);
    const Element bottom = *lattice.bottom();
    const Element top = *lattice.top();
    facts.maximal_block = (red & bit(bottom)) && (red & bit(top));
    facts.sandwiched = facts.cls.r >= 2 && !(red & bit(bottom)) && !(red & bit(top));
    facts.dismantlable = is_dismantlable(lattice);
    if (facts.cls.r >= 2) {
        const Poset block = basic_block(lattice);
        facts.cls.h = height(block);
        facts.block = identify_block(block);
        facts.block_type = three_reducible_type(block);
    }
    return facts;
}

Census take_census(int n, Oracle oracle, int workers) {
    Census census;
    census.n = n;
    census.oracle = oracle;
    std::vector<CanonicalForm> keys;
    if (oracle == Oracle::Exhaustive) {
        keys = enumerate_all_lattices(n, workers);
    } else {
        census.k_limit = kAdjunctMaxK;
        keys = enumerate_adjunct_lattices(n, kAdjunctMaxK, workers);
    }
    census.lattices.resize(keys.size());
    const int used = std::max(1, std::min<int>(workers, static_cast<int>(keys.size())));
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) census.lattices[i] = lattice_facts(keys[i].poset());
    };
    if (used == 1) {
        work(0, keys.size());
    } else {
        std::vector<std::jthread> threads;
        const std::size_t chunk = (keys.size() + used - 1) / used;
        for (int w = 0; w < used; ++w) {
            const std::size_t begin = std::min(keys.size(), w * chunk);
            threads.emplace_back(work, begin, std::min(keys.size(), begin + chunk));
        }
    }
    return census;
}

namespace {

struct ClassSpec {
    std::string id;
    bool takes_k = false;
    int fixed_k = 0;
    std::optional<int> h;
    int k_min = 1;
    std::function<bool(const LatticeFacts&, int k)> member;
};

std::vector<ClassSpec> build_specs() {
    std::vector<ClassSpec> out;
    out.push_back({"L2", true, 0, {}, 1, [](const LatticeFacts& f, int k) { return f.cls.r == 2 && f.cls.k == k; }});
    out.push_back({"L3", true, 0, {}, 2, [](const LatticeFacts& f, int k) { return f.cls.r == 3 && f.cls.k == k; }});
    out.push_back({"B3", true, 0, {}, 2, [](const LatticeFacts& f, int k) {
                       return f.maximal_block && f.cls.r == 3 && f.cls.k == k;
                   }});
    for (BasicBlockId id : {BasicBlockId::F1, BasicBlockId::F2, BasicBlockId::F3, BasicBlockId::F4}) {
        out.push_back({"B3." + std::string(name_of(id)), true, 0, {}, 2, [id](const LatticeFacts& f, int k) {
                           return f.maximal_block && f.cls.r == 3 && f.cls.k == k && f.block_type == id;
                       }});
    }
    out.push_back({"L42", false, 2, {}, 2, [](const LatticeFacts& f, int) { return f.cls.r == 4 && f.cls.k == 2; }});
    out.push_back({"B42", false, 2, {}, 2, [](const LatticeFacts& f, int) {
                       return f.maximal_block && f.cls.r == 4 && f.cls.k == 2;
                   }});
    for (int h = 3; h <= 5; ++h) {
        out.push_back({"B42." + std::to_string(h), false, 2, h, 2, [h](const LatticeFacts& f, int) {
                           return f.maximal_block && f.cls.r == 4 && f.cls.k == 2 && f.cls.h == h;
                       }});
    }
    out.push_back({"L22S", false, 2, {}, 2, [](const LatticeFacts& f, int) {
                       return f.sandwiched && f.cls.r == 2 && f.cls.k == 2;
                   }});
    out.push_back({"L43", false, 3, {}, 3, [](const LatticeFacts& f, int) {
                       return f.cls.r == 4 && f.cls.k == 3 && f.cls.rc;
                   }});
    out.push_back({"B43", false, 3, {}, 3, [](const LatticeFacts& f, int) {
                       return f.maximal_block && f.cls.r == 4 && f.cls.k == 3 && f.cls.rc;
                   }});
    for (int h = 3; h <= 6; ++h) {
        out.push_back({"B43." + std::to_string(h), false, 3, h, 3, [h](const LatticeFacts& f, int) {
                           return f.maximal_block && f.cls.r == 4 && f.cls.k == 3 && f.cls.rc && f.cls.h == h;
                       }});
    }
    for (BasicBlockId id : all_block_ids()) {
        if (!is_b_block(id)) continue;
        out.push_back({"BB43." + std::string(name_of(id).substr(1)), false, 3, {}, 3,
                       [id](const LatticeFacts& f, int) { return f.maximal_block && f.block == id; }});
    }
    return out;
}

const std::vector<ClassSpec>& class_specs() {
    static const std::vector<ClassSpec> specs = build_specs();
    return specs;
}

const ClassSpec& spec_for(const std::string& id) {
    for (const ClassSpec& spec : class_specs()) {
        if (spec.id == id) return spec;
    }
    throw std::invalid_argument("unknown class id: " + id);
}

constexpr int kFirstVerifiedSize = 4;

}  // namespace

const std::vector<std::string>& verifiable_classes() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const ClassSpec& spec : class_specs()) out.push_back(spec.id);
        return out;
    }();
    return ids;
}

bool VerifyReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& row) { return row.match; });
}

std::string VerifyReport::to_csv() const {
    std::string out = "formula_id,n,k,h,formula_value,oracle_value,match\n";
    for (const VerifyRow& row : rows) {
        out += row.formula_id + ',' + std::to_string(row.n) + ',';
        if (row.k) out += std::to_string(*row.k);
        out += ',';
        if (row.h) out += std::to_string(*row.h);
        out += ',' + row.formula_value.get_str() + ',' + row.oracle_value.get_str() + ',';
        out += row.match ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const VerifyRow& row : rows) {
        nlohmann::ordered_json item;
        item["formula_id"] = row.formula_id;
        item["n"] = row.n;
        item["k"] = row.k ? nlohmann::ordered_json(*row.k) : nlohmann::ordered_json(nullptr);
        item["h"] = row.h ? nlohmann::ordered_json(*row.h) : nlohmann::ordered_json(nullptr);
        item["formula_value"] = row.formula_value.get_str();
        item["oracle_value"] = row.oracle_value.get_str();
        item["match"] = row.match;
        item["oracle"] = std::string(name_of(row.oracle));
        rows_json.push_back(std::move(item));
    }
    nlohmann::ordered_json doc;
    doc["passed"] = passed();
    doc["rows"] = std::move(rows_json);
    return doc.dump(2) + "\n";
}

VerifyReport verify_against(const std::vector<Census>& censuses, const std::vector<std::string>& classes) {
    VerifyReport report;
    for (const std::string& id : classes) {
        const ClassSpec& spec = spec_for(id);
        const FormulaInfo* formula = find_formula(id);
        if (formula == nullptr) throw std::invalid_argument("no formula for class " + id);
        for (const Census& census : censuses) {
            const int n = census.n;
            if (n < kFirstVerifiedSize) continue;
            std::vector<int> ks;
            if (spec.takes_k) {
                for (int k = spec.k_min; k <= std::max(spec.k_min, n - 2); ++k) ks.push_back(k);
            } else {
                ks.push_back(spec.fixed_k);
            }
            for (int k : ks) {
                if (census.k_limit >= 0 && k > census.k_limit) continue;
                VerifyRow row;
                row.formula_id = id;
                row.n = n;
                row.k = k;
                row.h = spec.h;
                row.oracle = census.oracle;
                row.formula_value = formula->eval(n, k);
                row.oracle_value = static_cast<unsigned long>(
                    std::count_if(census.lattices.begin(), census.lattices.end(),
                                  [&](const LatticeFacts& f) { return spec.member(f, k); }));
                row.match = row.formula_value == row.oracle_value;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

VerifyReport verify(int n_max, const std::vector<std::string>& classes, OraclePolicy policy, int workers) {
    for (const std::string& id : classes) spec_for(id);
    if (classes.empty()) return {};
    const int limit = policy == OraclePolicy::Exhaustive ? kExhaustiveMaxN : kAdjunctMaxN;
    if (n_max > limit) {
        throw BudgetError("verify supports n_max <= " + std::to_string(limit) + " with the selected oracle");
    }
    std::vector<Census> censuses;
    for (int n = kFirstVerifiedSize; n <= n_max; ++n) {
        Oracle oracle = Oracle::Adjunct;
        if (policy == OraclePolicy::Exhaustive || (policy == OraclePolicy::Auto && n <= kExhaustiveMaxN)) {
            oracle = Oracle::Exhaustive;
        }
        censuses.push_back(take_census(n, oracle, workers));
    }
    return verify_against(censuses, classes);
}

}  // namespace latcount
