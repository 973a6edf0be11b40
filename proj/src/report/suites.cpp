#include "quatgrad/report/suites.hpp"

#include "quatgrad/commvar/bounds.hpp"
#include "quatgrad/commvar/css.hpp"
#include "quatgrad/commvar/roots.hpp"
#include "quatgrad/gradings/catalog.hpp"
#include "quatgrad/jordan/m2.hpp"
#include "quatgrad/jordan/short_grading.hpp"
#include "quatgrad/lie/elements.hpp"
#include "quatgrad/linalg/random.hpp"
#include "quatgrad/partitions/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <regex>

namespace quatgrad::report {

namespace {

using namespace partitions;

Json json_of(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json json_of(const Rational& q) {
    if (q.get_den() == 1) return json_of(q.get_num());
    return to_string(q);
}

Json json_of(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_of(x));
    return a;
}

Json json_of(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(json_of(m.row(i)));
    return a;
}

Json json_of(const NilpotentDatum& d) { return d.to_string(); }

int get_int(const std::optional<int>& v, int fallback, int lo, int hi, const std::string& name) {
    int x = v.value_or(fallback);
    if (x < lo || x > hi)
        throw UsageError(name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(x));
    return x;
}

// Catalog entries up to this matrix size keep every suite interactive.
constexpr std::size_t kMaxSize = 12;

template <class F>
auto as_usage_error(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

gradings::CatalogGrading load_grading(const std::string& id) {
    auto c = as_usage_error([&] { return gradings::catalog_grading(id); });
    if (c.grading.algebra()->size() > kMaxSize) throw UsageError(id + ": matrix size above " + std::to_string(kMaxSize));
    return c;
}

gradings::CatalogDecomposition load_decomposition(const std::string& id) {
    auto d = as_usage_error([&] { return gradings::catalog_decomposition(id); });
    if (d.qd.algebra()->size() > kMaxSize) throw UsageError(id + ": matrix size above " + std::to_string(kMaxSize));
    return d;
}

bool is_decomposition(const std::string& id) {
    try {
        gradings::catalog_decomposition(id);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// ---------------------------------------------------------------- partitions

int default_bound(PairTag tag) {
    switch (tag) {
        case PairTag::sl_so: return 10;
        case PairTag::sp_gl: return 8;
        case PairTag::so_gl: return 6;
        case PairTag::sl_sl: return 10;
        case PairTag::so_so: return 6;
        default: return 3;
    }
}

void suite_partitions(const SuiteConfig& cfg, Report& r) {
    const std::string name = cfg.pair.value_or("sl-so");
    const PairTag tag = as_usage_error([&] { return parse_pair(name); });
    const int bound = get_int(cfg.max_n, default_bound(tag), 1, has_closed_formula(tag) ? 24 : 8, "--max-n");
    r.config["pair"] = pair_name(tag);
    r.config["max_n"] = bound;
    SweepReport s = sweep(tag, bound);

    Json argmin = Json::array();
    for (const auto& d : s.argmin) argmin.push_back(json_of(d));
    Json violations = Json::array();
    for (const auto& v : s.violations) violations.push_back({{"datum", json_of(v.datum)}, {"reason", v.reason}});
    r.data = {{"pair", s.pair},         {"bound", s.bound},     {"method", s.method},       {"min_defect", s.min_defect},
              {"argmin", argmin},       {"instances_checked", s.instances_checked}, {"violations", violations}};

    r.check("violations", 0, s.violations.size(), violations.empty() ? Json(nullptr) : violations[0]);
    r.check_true("instances-checked", s.instances_checked > 0, s.instances_checked);
    if (s.instances_checked == 0) return;
    if (tag == PairTag::sl_so || tag == PairTag::sp_gl) {
        r.check("min-defect", 2, s.min_defect);
        std::vector<std::string> expect, got;
        const int lo = tag == PairTag::sl_so ? 3 : 2;
        for (int n = lo; n <= bound; ++n) {
            if (n >= 3) expect.push_back(NilpotentDatum{hook(3, n), Partition()}.to_string());
            if (tag == PairTag::sp_gl) expect.push_back(NilpotentDatum{hook(2, n), Partition()}.to_string());
        }
        for (const auto& d : s.argmin) got.push_back(d.to_string());
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        r.check("argmin", expect, got);
    } else if (tag == PairTag::so_gl) {
        r.check_true("g0-at-least-g1", s.violations.empty());
    } else {
        r.check_true("min-defect-at-least-2", s.min_defect >= 2, s.min_defect);
    }
}

// ---------------------------------------------------------------- oracle

void suite_oracle(const SuiteConfig& cfg, Report& r) {
    const int bound = get_int(cfg.max_n, 10, 2, 12, "--max-n");
    r.config["max_n"] = bound;
    Json rows = Json::array();
    struct Family {
        lie::Family fam;
        int max;
        std::function<bool(const Partition&)> admissible;
        std::function<long(const Partition&)> formula;
    };
    const std::vector<Family> fams{
        {lie::Family::gl, std::min(bound, 6), [](const Partition&) { return true; }, dim_cent_gl},
        {lie::Family::sl, std::min(bound, 6), [](const Partition&) { return true; }, dim_cent_sl},
        {lie::Family::so, bound, [](const Partition& p) { return p.admissible_so(); }, dim_cent_so},
        {lie::Family::sp, bound, [](const Partition& p) { return p.admissible_sp(); }, dim_cent_sp},
    };
    for (const auto& f : fams) {
        std::size_t checked = 0, agree = 0;
        Json first_bad = nullptr;
        for (int n = 1; n <= f.max; ++n) {
            if (f.fam == lie::Family::sp && n % 2) continue;
            if ((f.fam == lie::Family::sl || f.fam == lie::Family::so) && n < 2) continue;
            auto g = lie::build_algebra(f.fam, static_cast<std::size_t>(n));
            for (const auto& p : partitions_of(n)) {
                if (!f.admissible(p)) continue;
                auto e = lie::nilpotent_from_partition(g, p);
                long kernel = static_cast<long>(g->centralizer({e.matrix()}).dim());
                ++checked;
                if (kernel == f.formula(p)) ++agree;
                else if (first_bad.is_null()) first_bad = {{"partition", p.to_string()}, {"formula", f.formula(p)}, {"kernel", kernel}};
            }
        }
        r.check("centralizer/" + lie::family_name(f.fam), checked, agree, first_bad);
        rows.push_back({{"family", lie::family_name(f.fam)}, {"max_size", f.max}, {"checked", checked}});
    }
    // pair formulas on the same ambient range
    for (PairTag tag : {PairTag::sl_so, PairTag::sp_gl, PairTag::so_gl, PairTag::sl_sl}) {
        const int b = tag == PairTag::sl_so ? bound : tag == PairTag::sl_sl ? std::min(bound, 6) : bound / 2;
        std::size_t checked = 0, agree = 0;
        Json first_bad = nullptr;
        for (const auto& d : enumerate_data(tag, b)) {
            GradedDims a = formula_dims(tag, d), o = oracle_dims(tag, d);
            ++checked;
            if (a.g0 == o.g0 && a.g1 == o.g1 && a.rank == o.rank) ++agree;
            else if (first_bad.is_null())
                first_bad = {{"datum", d.to_string()}, {"formula", {a.g0, a.g1, a.rank}}, {"oracle", {o.g0, o.g1, o.rank}}};
        }
        r.check("pair/" + pair_name(tag), checked, agree, first_bad);
        rows.push_back({{"pair", pair_name(tag)}, {"bound", b}, {"checked", checked}});
    }
    r.data = {{"rows", rows}};
}

// ---------------------------------------------------------------- inequality

void suite_inequality(const SuiteConfig& cfg, Report& r) {
    const int bound = get_int(cfg.max_n, 10, 2, 20, "--max-n");
    r.config["max_n"] = bound;
    long min_f = -1;
    std::vector<std::string> argmin;
    std::size_t count = 0, positive = 0, recursion_checked = 0, recursion_ok = 0;
    Json bad = nullptr;
    for (int total = 3; total <= bound; ++total)
        for (int n = 1; n < total; ++n)
            for (const auto& l : partitions_of(n))
                for (const auto& m : partitions_of(total - n)) {
                    long f = F(l, m);
                    ++count;
                    if (f > 0) ++positive;
                    else if (bad.is_null()) bad = {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"F", f}};
                    if (min_f < 0 || f < min_f) {
                        min_f = f;
                        argmin.clear();
                    }
                    if (f == min_f) argmin.push_back(l.to_string() + ";" + m.to_string());
                    if (l.length() >= 2 && m.length() >= 2) {
                        ++recursion_checked;
                        if (F_recursion_value(l, m) == f) ++recursion_ok;
                    }
                }
    const Partition one({1});
    r.check("F((1);(1))", 0, F(one, one));
    r.check("F-positive", count, positive, bad);
    r.check("F-recursion", recursion_checked, recursion_ok);
    r.data = {{"pairs_checked", count}, {"min_F", min_f}, {"argmin", argmin}};
}

// ---------------------------------------------------------------- datapoints

void suite_datapoints(const SuiteConfig&, Report& r) {
    struct Point {
        std::vector<int> parts;
        long value;
    };
    Json rows = Json::array();
    for (const Point& p : {Point{{11, 2, 2, 1}, 16}, Point{{7, 5, 2, 2}, 22}, Point{{7, 4, 4, 1}, 22}}) {
        Partition lambda(p.parts);
        long v = dim_cent_so(lambda);
        r.check("so16/" + lambda.to_string(), p.value, v);
        rows.push_back({{"partition", lambda.to_string()}, {"dim_g0e", v}});
    }
    r.data = {{"algebra", "so16"}, {"rows", rows}};
}

// ---------------------------------------------------------------- gradings

void suite_gradings(const SuiteConfig& cfg, Report& r) {
    const int trials = get_int(cfg.trials, 50, 1, 10000, "--trials");
    r.config["trials"] = trials;
    std::vector<std::string> gids, dids;
    if (cfg.pair) {
        r.config["pair"] = *cfg.pair;
        if (is_decomposition(*cfg.pair)) dids.push_back(*cfg.pair);
        else gids.push_back(*cfg.pair);
    } else {
        gids = gradings::grading_ids();
        dids = gradings::decomposition_ids();
    }
    std::mt19937_64 rng(cfg.seed);
    Json rows = Json::array();
    for (const auto& id : gids) {
        auto c = load_grading(id);
        const auto& g = *c.grading.algebra();
        const bool maxrank = gradings::is_maximal_rank(c.grading);
        int orbit_ok = 0, rank_eq = 0;
        Json bad = nullptr;
        for (int t = 0; t < trials; ++t) {
            Matrix x = g.element(random_vector(c.grading.g1, rng, t % 3 == 0 ? 1 : 3));
            auto z = gradings::graded_centralizer_dims(c.grading, x);
            const std::size_t whole = g.centralizer({x}).dim();
            if (g.dim() - whole == 2 * (c.grading.g0.dim() - z[0]) && whole == z[0] + z[1]) ++orbit_ok;
            else if (bad.is_null()) bad = json_of(x);
            if (maxrank && z[1] == z[0] + g.rank()) ++rank_eq;
        }
        r.check("orbit-dim/" + id, trials, orbit_ok, bad);
        if (maxrank) r.check("max-rank-centralizer/" + id, trials, rank_eq);
        rows.push_back({{"id", id}, {"dim_g0", c.grading.g0.dim()}, {"dim_g1", c.grading.g1.dim()}, {"rank", g.rank()},
                        {"maximal_rank", maxrank}});
    }
    for (const auto& id : dids) {
        auto d = load_decomposition(id);
        auto inc = gradings::check_bracket_inclusions(d.qd);
        std::size_t holding = static_cast<std::size_t>(std::count_if(inc.begin(), inc.end(), [](const auto& b) { return b.holds; }));
        r.check("brackets/" + id, inc.size(), holding);
        auto dims = d.qd.dims();
        rows.push_back({{"id", id}, {"kind", gradings::kind_name(d.kind)}, {"dims", {dims[0], dims[1], dims[2], dims[3]}}});
    }
    r.data = {{"entries", rows}};
}

// ---------------------------------------------------------------- css

std::vector<std::string> decomposition_selection(const SuiteConfig& cfg, Report& r) {
    if (cfg.pair) {
        r.config["pair"] = *cfg.pair;
        return {*cfg.pair};
    }
    return gradings::decomposition_ids();
}

void suite_css(const SuiteConfig& cfg, Report& r) {
    using namespace commvar;
    std::mt19937_64 rng(cfg.seed);
    Json entries = Json::array();
    for (const auto& id : decomposition_selection(cfg, r)) {
        auto d = load_decomposition(id);
        const auto& g = *d.qd.algebra();
        auto c = conjugacy_criterion(d.qd, rng);
        Json vectors = Json::array(), standard = Json::array();
        bool certified = true, smooth = true, csa = true, full_std = true;
        for (const auto& h : c.homogeneous) {
            auto dv = h.dimension_vector();
            vectors.push_back({dv[0], dv[1]});
            std::size_t sd = standard_component_dim(d.qd, h);
            standard.push_back(sd);
            certified = certified && is_css(g, h.basis(), d.qd.odd_first());
            smooth = smooth && local_component_dim(d.qd, h, rng) == sd;
            csa = csa && g.centralizer(h.basis(), d.qd.piece(0, 1)).dim() == 0;
            full_std = full_std && sd == d.qd.dim(1, 1);
        }
        auto witness = dominance_witness(d.qd, standard_map(), rng);
        r.check_true("css-certified/" + id, certified);
        r.check_true("dimension-bounds/" + id, c.bounds_hold, vectors);
        r.check_true("smooth-point/" + id, smooth, standard);
        if (witness) r.check_true("dominance/" + id, true, Json{{"x", json_of(witness->first)}, {"y", json_of(witness->second)}});
        else r.check_true("dominance/" + id, false);

        auto c11 = build_css(g, d.qd.piece(1, 1), rng);
        if (gradings::is_maximal_rank(gradings::grading_of(d.qd.sigma1())))
            r.check("max-rank-coincidence/" + id, 0, g.centralizer(c11.basis, d.qd.piece(0, 1)).dim());
        if (d.kind == gradings::DecompositionKind::dyad) {
            r.check_true("dyad-coincidence/" + id, is_css(g, c11.basis, d.qd.odd_first()));
            r.check("dyad-surjective/" + id, d.qd.dim(0, 1), d.qd.dim(1, 0));
        }
        std::smatch mt;
        if (std::regex_match(id, mt, std::regex("so(\\d+)-chain"))) {
            const long n = std::stol(mt[1]);
            r.check("chain-vectors/" + id, Json::array({{1, 0}, {0, 1}}), vectors);
            r.check("chain-standard-dims/" + id, Json::array({n - 2, 1}), standard);
        }
        if (std::regex_match(id, std::regex("sp\\d+-sym-triad"))) {
            r.check_true("csa/" + id, csa);
            r.check_true("standard-dim-g11/" + id, full_std, standard);
        }
        Json dims = {{"c1star", c.dim_c1star}, {"c10", c.dim_c10}, {"c11", c.dim_c11}};
        entries.push_back({{"id", id},
                           {"dims", dims},
                           {"dimension_vectors", vectors},
                           {"standard_dims", standard},
                           {"unique_standard", c.unique_standard}});
    }
    r.data = {{"reports", entries}};
}

// ---------------------------------------------------------------- roots

struct ExpectedProfile {
    std::string label;
    std::size_t m_short, m_long;
};

const std::map<std::string, ExpectedProfile>& expected_profiles() {
    static const std::map<std::string, ExpectedProfile> table{
        {"sl4-sp4", {"A1", 4, 4}}, {"sl6-sp6", {"A2", 4, 4}}, {"sp4-gl2", {"C2", 1, 1}}, {"sp6-gl3", {"C3", 1, 1}},
        {"sl4-herm", {"C2", 2, 1}}, {"sl6-herm", {"C3", 2, 1}}, {"sl2-diag", {"A1", 1, 1}}, {"sl3-so3", {"A2", 1, 1}},
        {"sl4-so4", {"A3", 1, 1}},
    };
    return table;
}

Json root_report(const std::string& id, const commvar::RestrictedRootSystem& rs) {
    auto p = rs.profile();
    Json weights = Json::array(), mults = Json::array();
    for (const auto& root : rs.roots) {
        Json w = Json::array();
        for (const auto& x : root.integer_weight) w.push_back(json_of(x));
        weights.push_back(w);
        mults.push_back(root.multiplicity);
    }
    Json profile = {{"label", p.label}, {"type", p.type}, {"rank", p.rank}, {"m_short", p.m_short}, {"m_middle", p.m_middle},
                    {"m_long", p.m_long}, {"uniform", p.uniform_multiplicities}, {"reflection_closed", p.reflection_closed}};
    return {{"id", id},          {"weights", weights},         {"multiplicities", mults}, {"profile", profile},
            {"scale", json_of(rs.scale)}, {"zero_weight_dim", rs.zero_space.dim()}, {"dim_g", rs.algebra_dim}};
}

void suite_roots(const SuiteConfig& cfg, Report& r) {
    std::vector<std::string> ids;
    if (cfg.pair) {
        r.config["pair"] = *cfg.pair;
        ids.push_back(*cfg.pair);
    } else {
        ids = gradings::grading_ids();
    }
    Json entries = Json::array();
    for (const auto& id : ids) {
        lie::AlgebraPtr g;
        std::vector<Matrix> css;
        if (is_decomposition(id)) {
            auto cd = load_decomposition(id);
            g = cd.qd.algebra();
            css = cd.rational_css;
        } else {
            auto cg = load_grading(id);
            g = cg.grading.algebra();
            css = cg.rational_css;
        }
        auto rs = commvar::restricted_roots(*g, css);
        auto p = rs.profile();
        std::size_t sum = 0;
        for (const auto& root : rs.roots) sum += root.multiplicity;
        r.check("completeness/" + id, rs.algebra_dim, rs.zero_space.dim() + sum);
        r.check_true("paired/" + id, rs.paired());
        r.check_true("reflection-closed/" + id, p.reflection_closed);
        r.check_true("uniform-multiplicities/" + id, p.uniform_multiplicities);
        auto it = expected_profiles().find(id);
        if (it != expected_profiles().end())
            r.check("profile/" + id, Json{{"label", it->second.label}, {"m_short", it->second.m_short}, {"m_long", it->second.m_long}},
                    Json{{"label", p.label}, {"m_short", p.m_short}, {"m_long", p.m_long}});
        entries.push_back(root_report(id, rs));
    }
    r.data = {{"reports", entries}};
}

// ---------------------------------------------------------------- bounds

void add_bound_checks(Report& r, const std::string& prefix, const commvar::BoundResult& b) {
    for (const auto& c : b.checks)
        r.checks.push_back({prefix + "/" + c.id, c.pass ? Status::pass : Status::fail, c.expected, c.actual, nullptr});
}

Json bound_json(const std::string& id, const commvar::BoundResult& b) {
    Json j = {{"id", id},
              {"construction", b.construction},
              {"value", b.value},
              {"dim_g11", b.dim_g11},
              {"dim_c11", b.dim_c11},
              {"dim_ctilde", b.dim_ctilde},
              {"dim_z10", b.dim_z10},
              {"orbit_dim", b.orbit_dim}};
    if (b.construction == "single-root") {
        j["mu"] = json_of(b.mu);
        j["m_mu"] = b.m_mu;
    } else {
        j["r"] = b.r;
        j["m_short"] = b.m_short;
    }
    return j;
}

void suite_bounds(const SuiteConfig& cfg, Report& r) {
    std::mt19937_64 rng(cfg.seed);
    Json entries = Json::array();
    for (const auto& id : decomposition_selection(cfg, r)) {
        auto d = load_decomposition(id);
        if (!(d.css_piece == gradings::PieceIndex{1, 1})) {
            r.skip("bounds/" + id, "catalog CSS is not in g11");
            continue;
        }
        using Builder = commvar::BoundResult (*)(const gradings::QuaternionicDecomposition&, const std::vector<Matrix>&,
                                                 std::mt19937_64&);
        for (auto [name, fn] : {std::pair<std::string, Builder>{"single-root", commvar::lower_bound_single_root},
                                std::pair<std::string, Builder>{"kernel", commvar::lower_bound_kernel_construction}}) {
            try {
                auto b = fn(d.qd, d.rational_css, rng);
                add_bound_checks(r, name + "/" + id, b);
                entries.push_back(bound_json(id, b));
            } catch (const std::invalid_argument& e) {
                r.skip(name + "/" + id, e.what());
            }
        }
    }
    r.data = {{"reports", entries}};
}

// ---------------------------------------------------------------- jordan

std::string short_grading_id(jordan::JordanFamily f, int n) {
    switch (f) {
        case jordan::JordanFamily::full: return "sl" + std::to_string(2 * n) + "-full";
        case jordan::JordanFamily::sym: return "sp" + std::to_string(2 * n) + "-sym";
        case jordan::JordanFamily::skew: return "so" + std::to_string(4 * n) + "-skew";
        case jordan::JordanFamily::spin: return "so" + std::to_string(n + 3) + "-spin";
        default: return "";
    }
}

std::size_t table_dim(jordan::JordanFamily f, int n) {
    const std::size_t m = static_cast<std::size_t>(n);
    switch (f) {
        case jordan::JordanFamily::full: return m * m;
        case jordan::JordanFamily::sym: return m * (m + 1) / 2;
        case jordan::JordanFamily::skew: return m * (2 * m - 1);
        case jordan::JordanFamily::spin: return m + 1;
        default: return 0;
    }
}

// TKK identity and transport on random pairs of g(-1).
void tkk_checks(Report& r, const std::string& prefix, const jordan::ShortGrading& sg, int trials, std::mt19937_64& rng) {
    auto J = jordan::from_short_grading(sg);
    int holds = 0, nonzero = 0, c2_fails = 0, transport = 0, commuting = 0;
    Json bad = nullptr;
    for (int t = 0; t < trials; ++t) {
        Vector cx = random_vector(Subspace::full(J.dim()), rng), cy = random_vector(Subspace::full(J.dim()), rng);
        // every fourth pair is taken from the Jordan centralizer so that both directions are exercised
        if (t % 4 == 3) {
            Subspace z = jordan::jordan_centralizer(J, cx);
            cy = z.dim() ? random_vector(z, rng) : Vector(J.dim());
        }
        Matrix x = jordan::minus_element(sg, cx), y = jordan::minus_element(sg, cy);
        if (jordan::tkk_identity_check(sg, x, y)) ++holds;
        else if (bad.is_null()) bad = {{"x", json_of(cx)}, {"y", json_of(cy)}};
        const bool zero = is_zero(J.product(cx, cy));
        if (!zero) {
            ++nonzero;
            if (!jordan::tkk_identity_check(sg, x, y, 2)) ++c2_fails;
        } else {
            ++commuting;
        }
        if (jordan::commuting_pair_transport(sg, x, y).commute == zero) ++transport;
    }
    r.check(prefix + "/tkk-identity", trials, holds, bad);
    r.check(prefix + "/tkk-constant-2-fails", nonzero, c2_fails, "constant 2 checked on pairs with nonzero product");
    r.check(prefix + "/transport", trials, transport, Json{{"commuting_pairs", commuting}});
}

void suite_jordan(const SuiteConfig& cfg, Report& r) {
    const auto fam = as_usage_error([&] { return jordan::parse_jordan_family(cfg.family.value_or("full")); });
    if (fam == jordan::JordanFamily::short_grading) throw UsageError("--family must be full, sym, skew or spin");
    const int n = get_int(cfg.n, 3, 1, 4, "--n");
    const int trials = get_int(cfg.trials, 100, 1, 10000, "--trials");
    r.config["family"] = jordan::family_name(fam);
    r.config["n"] = n;
    r.config["trials"] = trials;
    std::mt19937_64 rng(cfg.seed);

    auto J = jordan::make_jordan(fam, n);
    r.check("dim", table_dim(fam, n), J.dim());
    r.check_true("axioms", jordan::validate(J, rng, 20).ok());

    Json bound = nullptr, centralizer = nullptr;
    if (fam == jordan::JordanFamily::full) {
        if (n >= 2) {
            auto f = jordan::fiber_bound_report(static_cast<std::size_t>(n), rng);
            for (const auto& c : f.checks)
                r.checks.push_back({"fiber/" + c.id, c.pass ? Status::pass : Status::fail, c.expected, c.actual, nullptr});
            r.check("fiber/expected-bound", static_cast<std::size_t>(n * n + n / 2), f.bound);
            bound = f.bound;
            centralizer = f.jordan_centralizer_dim;
        } else {
            r.skip("fiber", "needs n >= 2");
        }
    }
    jordan::ShortGrading sg;
    bool have_sg = true;
    try {
        sg = jordan::short_grading(short_grading_id(fam, n));
    } catch (const std::invalid_argument& e) {
        have_sg = false;
        r.skip("short-grading", e.what());
    }
    if (have_sg) {
        r.check_true("short-grading/" + sg.id, jordan::check_short_grading(sg).ok());
        r.check("short-grading-dim/" + sg.id, table_dim(fam, n), jordan::from_short_grading(sg).dim());
        tkk_checks(r, sg.id, sg, trials, rng);
        if (sg.algebra->size() <= kMaxSize) {
            auto d = gradings::catalog_decomposition(sg.id + "-triad");
            try {
                auto b = commvar::lower_bound_kernel_construction(d.qd, d.rational_css, rng);
                add_bound_checks(r, "kernel/" + d.id, b);
                if (bound.is_null()) bound = b.value;
                else r.check("kernel-matches-fiber", bound, b.value);
            } catch (const std::invalid_argument& e) {
                r.skip("kernel/" + d.id, e.what());
            }
        } else {
            r.skip("kernel", "matrix size above " + std::to_string(kMaxSize));
        }
    }
    r.data = {{"family", jordan::family_name(fam)}, {"n", n}, {"dim", J.dim()}, {"centralizer_dim", centralizer}, {"bound", bound}};
}

// ---------------------------------------------------------------- triad

void suite_triad(const SuiteConfig& cfg, Report& r) {
    const int trials = get_int(cfg.trials, 100, 1, 10000, "--trials");
    r.config["trials"] = trials;
    std::vector<std::string> ids;
    if (cfg.pair) {
        r.config["pair"] = *cfg.pair;
        ids.push_back(*cfg.pair);
    } else {
        for (const auto& s : jordan::short_grading_ids()) ids.push_back(s + "-triad");
    }
    std::mt19937_64 rng(cfg.seed);
    Json entries = Json::array();
    for (const auto& id : ids) {
        std::smatch mt;
        if (!std::regex_match(id, mt, std::regex("(.+)-triad"))) throw UsageError("not a triad id: " + id);
        const std::string sg_id = mt[1];
        jordan::ShortGrading sg = as_usage_error([&] { return jordan::short_grading(sg_id); });
        if (sg.algebra->size() > kMaxSize) throw UsageError(id + ": matrix size above " + std::to_string(kMaxSize));
        auto t = jordan::build_jordan_triad(sg);
        auto tc = jordan::check_triad(t);
        r.check_true("triad-structure/" + id, tc.ok());
        auto inc = gradings::check_bracket_inclusions(t.qd);
        r.check_true("brackets/" + id, std::all_of(inc.begin(), inc.end(), [](const auto& b) { return b.holds; }));
        auto J = jordan::from_short_grading(sg);
        r.check("jordan-dim/" + id, table_dim(sg.family, sg.family_n), J.dim());
        tkk_checks(r, id, sg, trials, rng);
        Json entry = {{"id", id}, {"family", jordan::family_name(sg.family)}, {"family_n", sg.family_n}, {"dim_J", J.dim()}};
        auto d = load_decomposition(id);
        try {
            auto b = commvar::lower_bound_kernel_construction(d.qd, d.rational_css, rng);
            add_bound_checks(r, "kernel/" + id, b);
            if (sg.family == jordan::JordanFamily::sym) r.check("sym-bound-is-dim-J/" + id, J.dim(), b.value);
            entry["bound"] = b.value;
            entry["r"] = b.r;
            entry["m_short"] = b.m_short;
        } catch (const std::invalid_argument& e) {
            r.skip("kernel/" + id, e.what());
        }
        entries.push_back(entry);
    }
    r.data = {{"reports", entries}};
}

using Runner = void (*)(const SuiteConfig&, Report&);

const std::vector<std::pair<SuiteInfo, Runner>>& registry() {
    static const std::vector<std::pair<SuiteInfo, Runner>> reg{
        {{"partitions", "minimal defect sweeps over nilpotent data of a pair (--pair, --max-n)"}, suite_partitions},
        {{"oracle", "closed centralizer formulas against kernels of explicit nilpotents (--max-n)"}, suite_oracle},
        {{"inequality", "positivity and recursion of F(lambda; mu) for n + m <= max-n"}, suite_inequality},
        {{"datapoints", "centralizer dimensions of three nilpotents in so16"}, suite_datapoints},
        {{"gradings", "orbit dimension identity, maximal-rank centralizers, bracket inclusions (--pair, --trials)"},
         suite_gradings},
        {{"css", "homogeneous Cartan subspaces and standard components (--pair)"}, suite_css},
        {{"roots", "restricted root systems of catalog Cartan subspaces (--pair/--catalog)"}, suite_roots},
        {{"bounds", "single-root and kernel lower bounds (--pair)"}, suite_bounds},
        {{"jordan", "Jordan algebra of a family, M<2> fibre bound, TKK identity (--family, --n, --trials)"}, suite_jordan},
        {{"triad", "Jordan triads: structure, TKK identity, transport, kernel bound (--pair, --trials)"}, suite_triad},
    };
    return reg;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> out = [] {
        std::vector<SuiteInfo> v;
        for (const auto& [info, _] : registry()) v.push_back(info);
        v.push_back({"list", "this listing"});
        return v;
    }();
    return out;
}

Report list_report() {
    Report r;
    r.suite = "list";
    Json rows = Json::array();
    for (const auto& s : suites()) rows.push_back({{"name", s.name}, {"description", s.description}});
    r.data = {{"suites", rows}};
    return r;
}

Report run_suite(const SuiteConfig& config) {
    if (config.suite == "list") return list_report();
    for (const auto& [info, fn] : registry()) {
        if (info.name != config.suite) continue;
        Report r;
        r.suite = info.name;
        r.config["seed"] = config.seed;
        fn(config, r);
        return r;
    }
    throw UsageError("unknown suite: " + config.suite);
}

}  // namespace quatgrad::report
