#include "seidel/tpenum.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "seidel/numthy.hpp"
#include "seidel/qinterval.hpp"

namespace seidel {

EnumSpec EnumSpec::trace_stratum(int degree, int trace, const SurdInterval& interval,
                                 bool binomial_parity, bool require_distinct) {
    EnumSpec s;
    s.degree = degree;
    s.fixed[1] = Int(-trace);
    s.interval = interval;
    s.require_distinct = require_distinct;
    if (binomial_parity) {
        for (int i = 2; i <= degree; ++i)
            s.parity[i] = mpz_odd_p(binomial(degree, i).get_mpz_t()) ? 1 : 0;
    }
    return s;
}

bool mckee_admissible(int d, int t) {
    if (d < 5) return true;
    // ceil(1.78839 d) computed exactly.
    Int num = Int(178839) * d;
    Int bound;
    mpz_cdiv_q(bound.get_mpz_t(), num.get_mpz_t(), Int(100000).get_mpz_t());
    return Int(t) >= bound;
}

const std::vector<IntPoly>& FactorPool::at(int d, int t) const {
    auto it = strata.find({d, t});
    if (it == strata.end())
        throw std::logic_error("FactorPool: missing stratum (" + std::to_string(d) + "," +
                               std::to_string(t) + "); trial division would be unsound");
    return it->second;
}

Classification classify_irreducible(const FactorPool& pool, const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("classify_irreducible: need a monic nonconstant polynomial");
    const int d = p.degree();
    const Int trace = -p.coeff_from_top(1);
    if (!trace.fits_sint_p()) throw std::invalid_argument("classify_irreducible: trace too large");
    const int t = static_cast<int>(trace.get_si());
    for (int d2 = 1; d2 <= d / 2; ++d2) {
        // A factor is itself totally positive with the binomial parity
        // profile, so its trace has the parity of its degree and the
        // cofactor needs trace at least its degree.
        for (int t2 = d2; t2 <= t - (d - d2); t2 += 2) {
            for (const IntPoly& q : pool.at(d2, t2)) {
                if (auto quot = exact_div(p, q)) {
                    (void)quot;
                    return Classification{false, q};
                }
            }
        }
    }
    return Classification{true, IntPoly()};
}

namespace {

struct Layer {
    IntPoly poly;
    std::vector<IntPoly> chain;
    int mult = 1;
};

struct Enclosure {
    RatInterval iv;
    int layer = -1;  // -1: exact rational point
    int mult = 1;
};

struct NodeState {
    IntPoly q;
    std::vector<Layer> layers;
    std::vector<Enclosure> encl;     // sorted; hulls may carry mult > 1
    std::vector<int> positions;      // size s: enclosure index per sorted root
};

QInterval interval_eval(const IntPoly& p, const RatInterval& iv) {
    QInterval x(iv.lo, iv.hi);
    QInterval acc = QInterval::point(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + QInterval::point(Rat(p.coeff(i)));
    return acc;
}

struct Searcher {
    const EnumSpec& spec;
    int d;
    QuadNum l, u;
    Rat lrat, urat;
    std::vector<IntPoly> out;
    std::uint64_t nodes = 0;

    explicit Searcher(const EnumSpec& s)
        : spec(s),
          d(s.degree),
          l(s.interval.lo),
          u(s.interval.hi),
          lrat(l.is_rational() ? l.rational_part() : Rat(l.floor())),
          urat(u.is_rational() ? u.rational_part() : Rat(u.ceil())) {}

    // Q_{s1} minus its constant term, from the path coefficients a_0..a_{s1-1}.
    IntPoly build_qq(int s1, const std::vector<Int>& a) const {
        std::vector<Int> c(s1 + 1, Int(0));
        for (int k = 1; k <= s1; ++k) {
            int i = s1 - k;
            c[k] = a[i] * binomial(d - i, k);
        }
        return IntPoly(std::move(c));
    }

    void refine(NodeState& node, Enclosure& e, const Rat& width) const {
        if (e.layer < 0 || e.iv.lo == e.iv.hi) return;
        Layer& layer = node.layers[e.layer];
        refine_enclosure(layer.chain, layer.poly, e.iv, width);
    }

    // Certified enclosures of the roots of q (with multiplicity) in the
    // outer rational box; false when fewer than s real roots are found,
    // which prunes the branch.
    bool build_node(int s, const IntPoly& q, NodeState& node) const {
        node.q = q;
        node.layers.clear();
        node.encl.clear();
        node.positions.clear();
        std::vector<IntPoly> sqf = squarefree_decomposition(q);
        long count = 0;
        for (size_t i = 0; i < sqf.size(); ++i) {
            if (sqf[i].degree() < 1) continue;
            if (spec.require_distinct && i > 0) return false;  // repeated roots propagate
            Layer layer;
            layer.poly = sqf[i];
            layer.chain = sturm_chain(sqf[i]);
            layer.mult = static_cast<int>(i) + 1;
            int idx = static_cast<int>(node.layers.size());
            node.layers.push_back(std::move(layer));
            auto roots = isolate_roots(node.layers[idx].poly, lrat, urat, make_rat(1, 16));
            for (const RatInterval& iv : roots) {
                node.encl.push_back(Enclosure{iv, idx, node.layers[idx].mult});
                count += node.layers[idx].mult;
            }
        }
        if (count < s) return false;

        auto by_lo = [](const Enclosure& a, const Enclosure& b) {
            if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
            return a.iv.hi < b.iv.hi;
        };
        std::sort(node.encl.begin(), node.encl.end(), by_lo);
        // Separate overlapping enclosures from different square-free layers
        // so the sorted order is certified; unresolved overlaps collapse
        // into a hull, which keeps every condition sound.
        for (int pass = 0; pass < 32; ++pass) {
            bool overlap = false;
            for (size_t i = 0; i + 1 < node.encl.size(); ++i) {
                if (node.encl[i].iv.hi > node.encl[i + 1].iv.lo) {
                    overlap = true;
                    Rat w1 = node.encl[i].iv.width() / 2;
                    Rat w2 = node.encl[i + 1].iv.width() / 2;
                    refine(node, node.encl[i], w1);
                    refine(node, node.encl[i + 1], w2);
                }
            }
            if (!overlap) break;
            std::sort(node.encl.begin(), node.encl.end(), by_lo);
            if (pass == 31) {
                // Merge what is left into hulls.
                std::vector<Enclosure> merged;
                for (const Enclosure& e : node.encl) {
                    if (!merged.empty() && merged.back().iv.hi > e.iv.lo) {
                        merged.back().iv.hi = std::max(merged.back().iv.hi, e.iv.hi);
                        merged.back().iv.lo = std::min(merged.back().iv.lo, e.iv.lo);
                        merged.back().mult += e.mult;
                        merged.back().layer = -2;  // hull: not refinable
                    } else {
                        merged.push_back(e);
                    }
                }
                node.encl = std::move(merged);
            }
        }
        for (size_t i = 0; i < node.encl.size(); ++i)
            for (int m = 0; m < node.encl[i].mult; ++m)
                node.positions.push_back(static_cast<int>(i));
        return true;
    }

    void validate_leaf(const IntPoly& p) {
        for (const auto& [i, v] : spec.fixed)
            if (p.coeff_from_top(i) != v) return;
        for (const auto& [i, par] : spec.parity)
            if ((mpz_odd_p(p.coeff_from_top(i).get_mpz_t()) ? 1 : 0) != par) return;

        std::vector<IntPoly> sqf = squarefree_decomposition(p);
        struct Counter {
            IntPoly poly;
            std::vector<IntPoly> chain;
            long mult;
        };
        std::vector<Counter> counters;
        for (size_t i = 0; i < sqf.size(); ++i) {
            if (sqf[i].degree() < 1) continue;
            counters.push_back({sqf[i], sturm_chain(sqf[i]), static_cast<long>(i + 1)});
        }
        auto count_upto = [&](const QuadNum& x, bool with_mult) {
            long total = 0;
            SurdInterval iv(l, x);
            for (const Counter& c : counters) {
                long roots = count_roots_squarefree(c.chain, c.poly, iv);
                total += with_mult ? roots * c.mult : roots;
            }
            return total;
        };
        if (count_upto(u, true) != d) return;
        if (spec.require_distinct && count_upto(u, false) != d) return;
        if (!spec.boxes.empty()) {
            for (int i = 1; i <= d; ++i) {
                const SurdInterval& box = spec.boxes[i - 1];
                if (count_upto(box.hi, true) < i) return;
                long below = count_upto(box.lo, true) - root_multiplicity_at(p, box.lo);
                if (below > i - 1) return;
            }
        }
        out.push_back(p);
    }

    struct ARange {
        Int lo, hi;
        bool empty = false;
        int step = 1;
    };

    ARange child_range(int s, const std::vector<Int>& a, NodeState& node, const IntPoly& qq) {
        const int s1 = s + 1;
        ARange r;
        bool has_lo = false, has_hi = false;
        Int lo, hi;
        auto add_lower = [&](const Int& v) {
            if (!has_lo || v > lo) lo = v;
            has_lo = true;
        };
        auto add_upper = [&](const Int& v) {
            if (!has_hi || v < hi) hi = v;
            has_hi = true;
        };

        // Conditions at certified root enclosures of p_s.
        std::vector<QInterval> vals(node.encl.size());
        for (size_t k = 0; k < node.encl.size(); ++k) {
            Enclosure& e = node.encl[k];
            QInterval iv = interval_eval(qq, e.iv);
            for (int iter = 0; iter < 200 && iv.width() > 1 && e.layer >= 0 &&
                               e.iv.lo != e.iv.hi;
                 ++iter) {
                refine(node, e, e.iv.width() / 2);
                iv = interval_eval(qq, e.iv);
            }
            vals[k] = iv;
        }
        for (size_t j = 1; j <= node.positions.size(); ++j) {
            const QInterval& iv = vals[node.positions[j - 1]];
            bool positive = ((s1 - static_cast<int>(j)) % 2 == 0);
            if (positive)
                add_lower(ceil_rat(-iv.hi));
            else
                add_upper(floor_rat(-iv.lo));
        }
        // Exact conditions at the interval endpoints.
        QuadNum ql = qq.eval(l), qu = qq.eval(u);
        if (s1 % 2 == 0)
            add_lower((-ql).ceil());
        else
            add_upper((-ql).floor());
        add_lower((-qu).ceil());

        if (!has_lo || !has_hi) throw std::logic_error("enumerate: unbounded coefficient range");
        auto fit = spec.fixed.find(s1);
        if (fit != spec.fixed.end()) {
            if (fit->second < lo || fit->second > hi) {
                r.empty = true;
                return r;
            }
            lo = hi = fit->second;
        }
        auto pit = spec.parity.find(s1);
        if (pit != spec.parity.end()) {
            int want = pit->second;
            Int rem = lo % 2;
            int lo_par = (rem == 0) ? 0 : 1;  // lo mod 2 in {0,1} regardless of sign
            if (rem < 0) lo_par = 1;
            if (lo_par != want) lo += 1;
            r.step = 2;
        }
        if (lo > hi) {
            r.empty = true;
            return r;
        }
        r.lo = lo;
        r.hi = hi;
        return r;
    }

    void descend(int s, std::vector<Int>& a, NodeState& node) {
        IntPoly qq = build_qq(s + 1, a);
        ARange range = child_range(s, a, node, qq);
        if (range.empty) return;
        for (Int A = range.lo; A <= range.hi; A += range.step) {
            ++nodes;
            IntPoly q_next = qq + IntPoly::constant(A);
            if (s + 1 == d) {
                validate_leaf(q_next);
                continue;
            }
            NodeState child;
            if (!build_node(s + 1, q_next, child)) continue;
            a.push_back(A);
            descend(s + 1, a, child);
            a.pop_back();
        }
    }
};

std::optional<std::string> spec_diagnostic(const EnumSpec& spec) {
    if (spec.degree < 1) return "degree must be >= 1";
    if (!spec.fixed.count(1)) return "a_1 (the trace) must be fixed";
    for (const auto& [i, v] : spec.fixed) {
        if (i < 1 || i > spec.degree) return "fixed coefficient index out of range";
        auto pit = spec.parity.find(i);
        if (pit != spec.parity.end()) {
            int vp = mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
            if (vp != pit->second) return "fixed coefficient conflicts with its parity constraint";
        }
    }
    for (const auto& [i, p] : spec.parity) {
        if (i < 1 || i > spec.degree) return "parity index out of range";
        if (p != 0 && p != 1) return "parity must be 0 or 1";
    }
    if (!spec.boxes.empty()) {
        if (static_cast<int>(spec.boxes.size()) != spec.degree)
            return "interlacing mode needs exactly one box per root";
        for (size_t i = 0; i + 1 < spec.boxes.size(); ++i) {
            if (spec.boxes[i + 1].lo < spec.boxes[i].lo)
                return "boxes must be ordered by lower endpoint";
        }
        for (const SurdInterval& b : spec.boxes) {
            if (b.lo < spec.interval.lo || b.hi > spec.interval.hi)
                return "boxes must lie inside the global interval";
        }
    }
    return std::nullopt;
}

}  // namespace

EnumResult enumerate_polynomials(const EnumSpec& spec, int jobs) {
    EnumResult result;
    if (auto diag = spec_diagnostic(spec)) {
        result.diagnostic = *diag;
        result.validated = true;
        return result;
    }
    const int d = spec.degree;
    const Int a1 = spec.fixed.at(1);

    if (d == 1) {
        Searcher s(spec);
        s.validate_leaf(IntPoly({a1, Int(1)}));
        result.polys = std::move(s.out);
        result.nodes_visited = 1;
        result.validated = true;
        return result;
    }

    // The mean of the roots must lie in the interval.
    Rat mean = make_rat(-a1, Int(d));
    if (QuadNum(mean) < spec.interval.lo || QuadNum(mean) > spec.interval.hi) {
        result.validated = true;
        return result;
    }

    Searcher root(spec);
    NodeState level1;
    level1.q = IntPoly({a1, Int(d)});
    level1.encl.push_back(Enclosure{RatInterval{mean, mean}, -1, 1});
    level1.positions.push_back(0);

    std::vector<Int> a{Int(1), a1};
    if (jobs <= 1) {
        root.descend(1, a, level1);
        result.polys = std::move(root.out);
        result.nodes_visited = root.nodes;
    } else {
        IntPoly qq = root.build_qq(2, a);
        Searcher::ARange range = root.child_range(1, a, level1, qq);
        std::vector<Int> values;
        if (!range.empty)
            for (Int A = range.lo; A <= range.hi; A += range.step) values.push_back(A);
        std::vector<std::future<std::pair<std::vector<IntPoly>, std::uint64_t>>> futs;
        for (int w = 0; w < jobs; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w]() {
                Searcher local(spec);
                std::vector<Int> path{Int(1), a1};
                for (size_t idx = w; idx < values.size(); idx += jobs) {
                    ++local.nodes;
                    IntPoly q2 = qq + IntPoly::constant(values[idx]);
                    if (d == 2) {
                        local.validate_leaf(q2);
                        continue;
                    }
                    NodeState child;
                    if (!local.build_node(2, q2, child)) continue;
                    path.push_back(values[idx]);
                    local.descend(2, path, child);
                    path.pop_back();
                }
                return std::make_pair(std::move(local.out), local.nodes);
            }));
        }
        result.nodes_visited = root.nodes;
        for (auto& f : futs) {
            auto [polys, count] = f.get();
            result.nodes_visited += count;
            result.polys.insert(result.polys.end(), polys.begin(), polys.end());
        }
    }
    std::sort(result.polys.begin(), result.polys.end());
    result.polys.erase(std::unique(result.polys.begin(), result.polys.end()),
                       result.polys.end());
    result.validated = true;
    return result;
}

namespace {

std::string quad_to_text(const QuadNum& q) { return q.str(); }

}  // namespace

std::string EnumSpec::to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [i, v] : fixed) f[std::to_string(i)] = v.get_str();
    j["fixed"] = f;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [i, v] : parity) p[std::to_string(i)] = v;
    j["parity"] = p;
    j["interval"] = {quad_to_text(interval.lo), quad_to_text(interval.hi)};
    nlohmann::json b = nlohmann::json::array();
    for (const SurdInterval& box : boxes) b.push_back({quad_to_text(box.lo), quad_to_text(box.hi)});
    j["boxes"] = b;
    j["require_distinct"] = require_distinct;
    return j.dump(2);
}

EnumSpec EnumSpec::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    EnumSpec s;
    s.degree = j.at("degree").get<int>();
    auto parse_int = [](const nlohmann::json& v) {
        if (v.is_string()) return Int(v.get<std::string>());
        return Int(v.get<long>());
    };
    if (j.contains("trace")) s.fixed[1] = -parse_int(j["trace"]);
    if (j.contains("fixed"))
        for (auto& [k, v] : j["fixed"].items()) s.fixed[std::stoi(k)] = parse_int(v);
    if (j.contains("parity"))
        for (auto& [k, v] : j["parity"].items()) s.parity[std::stoi(k)] = v.get<int>();
    auto iv = j.at("interval");
    auto parse_quad = [](const nlohmann::json& v) {
        if (v.is_string()) return QuadNum::parse(v.get<std::string>());
        return QuadNum(Rat(v.get<long>()));
    };
    s.interval = SurdInterval(parse_quad(iv.at(0)), parse_quad(iv.at(1)));
    if (j.contains("boxes"))
        for (const auto& b : j["boxes"])
            s.boxes.push_back(SurdInterval(parse_quad(b.at(0)), parse_quad(b.at(1))));
    s.require_distinct = j.value("require_distinct", false);
    return s;
}

}  // namespace seidel
