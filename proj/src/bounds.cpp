#include <algorithm>
#include <charconv>
#include <cmath>
#include <thread>

#include "ghsimplex/error.hpp"
#include "ghsimplex/format.hpp"
#include "ghsimplex/simplex_distance.hpp"

namespace ghs {

std::string_view to_string(CaseTag c) {
    switch (c) {
        case CaseTag::BiggerSimplex: return "BiggerSimplex";
        case CaseTag::EqualCardinality: return "EqualCardinality";
        case CaseTag::AlphaZero: return "AlphaZero";
        case CaseTag::DmEqualsDiam: return "DmEqualsDiam";
        case CaseTag::Case1: return "1";
        case CaseTag::Case2: return "2";
        case CaseTag::Case3_1: return "3.1";
        case CaseTag::Case3_2: return "3.2";
    }
    return "unknown";
}

std::string_view to_string(Region r) {
    switch (r) {
        case Region::Left: return "Left";
        case Region::Middle: return "Middle";
        case Region::Right: return "Right";
    }
    return "unknown";
}

GhBound GhBound::interval(double lo, double hi, CaseTag c, Region r) {
    if (lo > hi) {
        // The interval formulas are consistent in exact arithmetic; only
        // rounding at a region threshold can flip them.
        const Tolerance tol;
        if (!tol.le(lo, hi))
            throw Error(ErrorCode::InvalidCharacteristics, "empty interval [" + format_number(lo) + ", " + format_number(hi) + "]");
        hi = lo;
    }
    return GhBound(lo, hi, false, c, r);
}

namespace {

double finite_alpha(const Spacing& s, const char* which) {
    if (s.is_unbounded())
        throw Error(ErrorCode::InvalidCharacteristics, std::string(which) + " is inf; the general cases need m >= 2");
    return s.value();
}

}  // namespace

CaseTag classify_case(const Characteristics& c, const Tolerance& tol) {
    c.validate(tol);
    if (tol.eq(c.d_minus, c.diam)) return CaseTag::DmEqualsDiam;

    const double am = finite_alpha(c.alpha_minus, "alpha_minus");
    const double ap = finite_alpha(c.alpha_plus, "alpha_plus");
    const double a_height2 = c.diam - am;  // twice the height of A
    const double b_height2 = c.diam - ap;  // twice the height of B

    CaseTag general = CaseTag::Case3_2;
    if (tol.le(a_height2, 2 * c.d_minus)) general = CaseTag::Case1;
    else if (tol.le(a_height2, 2 * c.d_plus)) general = CaseTag::Case2;
    else if (tol.le(b_height2, 2 * c.d_plus)) general = CaseTag::Case3_1;

    if (general != CaseTag::Case3_2 && tol.eq(ap, 0.0)) return CaseTag::AlphaZero;
    return general;
}

GhBound bounds_for_case(const Characteristics& c, CaseTag tag, double lambda, const Tolerance& tol) {
    if (!(lambda > 0) || !std::isfinite(lambda))
        throw Error(ErrorCode::NonPositiveLambda, "lambda = " + format_number(lambda));
    const double diam = c.diam;
    const double d = c.d_minus;
    const double dp = c.d_plus;

    switch (tag) {
        case CaseTag::BiggerSimplex: return bigger_simplex_bound(diam, lambda, tol);
        case CaseTag::EqualCardinality: return equal_cardinality_bound(diam, c.eps, lambda, tol);
        case CaseTag::DmEqualsDiam: {
            const double value = c.alpha_plus.max_with_difference(diam, lambda);
            const bool left = c.alpha_plus.is_unbounded() || tol.le(lambda, diam + c.alpha_plus.value());
            return GhBound::exact(value, tag, left ? Region::Left : Region::Right);
        }
        case CaseTag::AlphaZero: {
            const double value = std::max({d, lambda, diam - lambda});
            Region r = Region::Right;
            if (tol.le(d, diam / 2)) {
                if (tol.le(lambda, diam / 2)) r = Region::Left;
            } else if (tol.le(lambda, diam - d)) {
                r = Region::Left;
            } else if (tol.le(lambda, d)) {
                r = Region::Middle;
            }
            return GhBound::exact(value, tag, r);
        }
        default: break;
    }

    const double am = finite_alpha(c.alpha_minus, "alpha_minus");
    const double ap = finite_alpha(c.alpha_plus, "alpha_plus");
    const double right_edge = ap + dp;

    switch (tag) {
        case CaseTag::Case1:
            if (tol.le(lambda, am + d)) return GhBound::exact(std::max(diam - lambda, d), tag, Region::Left);
            if (tol.le(lambda, right_edge))
                return GhBound::interval(std::max(lambda - ap, d), std::min(lambda - am, dp), tag, Region::Middle);
            return GhBound::exact(lambda - ap, tag, Region::Right);
        case CaseTag::Case2:
            if (tol.le(lambda, (am + diam) / 2)) return GhBound::exact(diam - lambda, tag, Region::Left);
            if (tol.le(lambda, right_edge))
                return GhBound::interval(std::max({diam - lambda, lambda - ap, d}), std::min(lambda - am, dp), tag,
                                         Region::Middle);
            return GhBound::exact(lambda - ap, tag, Region::Right);
        case CaseTag::Case3_1:
            if (tol.le(lambda, diam - dp)) return GhBound::exact(diam - lambda, tag, Region::Left);
            if (tol.le(lambda, right_edge))
                return GhBound::interval(std::max({diam - lambda, lambda - ap, d}), dp, tag, Region::Middle);
            return GhBound::exact(lambda - ap, tag, Region::Right);
        case CaseTag::Case3_2: {
            const Region r = tol.le(lambda, (diam + ap) / 2) ? Region::Left : Region::Right;
            return GhBound::exact(std::max(diam - lambda, lambda - ap), tag, r);
        }
        default: break;
    }
    throw Error(ErrorCode::InvalidCharacteristics, "unhandled case tag");
}

GhBound bounds_from_characteristics(const Characteristics& c, double lambda, const Tolerance& tol) {
    return bounds_for_case(c, classify_case(c, tol), lambda, tol);
}

GhBound bigger_simplex_bound(double diam, double lambda, const Tolerance& tol) {
    const Region r = tol.le(lambda, diam / 2) ? Region::Left : Region::Right;
    return GhBound::exact(std::max(lambda, diam - lambda), CaseTag::BiggerSimplex, r);
}

GhBound equal_cardinality_bound(double diam, double eps, double lambda, const Tolerance& tol) {
    const Region r = tol.le(lambda, (diam + eps) / 2) ? Region::Left : Region::Right;
    return GhBound::exact(std::max(lambda - eps, diam - lambda), CaseTag::EqualCardinality, r);
}

// ---------------------------------------------------------------------------

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw Error(ErrorCode::BadGrid, "lambda grid is empty");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] > 0) || !std::isfinite(grid[k]))
            throw Error(ErrorCode::BadGrid, "lambda grid value " + format_number(grid[k]) + " is not positive");
        if (k && !(grid[k] > grid[k - 1])) throw Error(ErrorCode::BadGrid, "lambda grid is not strictly increasing");
    }
}

std::vector<double> make_grid(double min, double max, double step) {
    if (!(step > 0) || !std::isfinite(step)) throw Error(ErrorCode::BadGrid, "lambda step must be positive");
    if (!std::isfinite(min) || !std::isfinite(max)) throw Error(ErrorCode::BadGrid, "lambda bounds must be finite");
    std::vector<double> grid;
    // Index-based so the grid does not drift with accumulated rounding.
    const double slack = 1e-9 * step;
    for (std::size_t k = 0;; ++k) {
        const double v = min + static_cast<double>(k) * step;
        if (v > max + slack) break;
        grid.push_back(v);
    }
    check_grid(grid);
    return grid;
}

namespace {

template <class Fill>
std::vector<SweepRow> run_rows(const std::vector<double>& grid, unsigned threads, Fill fill) {
    std::vector<SweepRow> rows(grid.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, grid.size()));
    if (workers == 1) {
        for (std::size_t k = 0; k < grid.size(); ++k) rows[k] = fill(grid[k]);
        return rows;
    }
    // Each worker owns a strided set of indices; rows land at their grid
    // position, so output order does not depend on scheduling.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < grid.size(); k += workers) rows[k] = fill(grid[k]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep(const Characteristics& c, const std::vector<double>& grid, const SweepOptions& opts) {
    check_grid(grid);
    c.validate(opts.tolerance);
    return run_rows(grid, opts.threads, [&](double lambda) {
        return SweepRow{lambda, bounds_from_characteristics(c, lambda, opts.tolerance), std::nullopt};
    });
}

std::vector<SweepRow> sweep(const FiniteMetricSpace& x, std::size_t m, const std::vector<double>& grid,
                            const SweepOptions& opts) {
    check_grid(grid);
    if (m == 0) throw Error(ErrorCode::BadCardinality, "m must be at least 1");
    const std::size_t n = x.size();
    std::optional<Characteristics> chars;
    if (m < n || m == 1) chars = characteristics(x, m, opts.cap);
    return run_rows(grid, opts.threads, [&](double lambda) {
        SweepRow row{lambda, GhBound::exact(0.0, CaseTag::Case1, Region::Left), std::nullopt};
        if (m > n) row.bound = bigger_simplex_bound(x.diam(), lambda, opts.tolerance);
        else if (chars) row.bound = bounds_from_characteristics(*chars, lambda, opts.tolerance);
        else row.bound = equal_cardinality_bound(x.diam(), x.eps(), lambda, opts.tolerance);
        row.value = gh_to_simplex(x, m, lambda, opts.cap);
        return row;
    });
}

// ---------------------------------------------------------------------------

namespace {

Spacing spacing_from_json(const nlohmann::json& v, const char* name) {
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "+inf")) return Spacing::unbounded();
    if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string(name) + " must be a number or \"inf\"");
    return Spacing(v.get<double>());
}

double number_from_json(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name)) throw Error(ErrorCode::ParseError, std::string("missing \"") + name + "\"");
    if (!doc[name].is_number()) throw Error(ErrorCode::ParseError, std::string(name) + " must be a number");
    return doc[name].get<double>();
}

nlohmann::json spacing_to_json(const Spacing& s) {
    if (s.is_unbounded()) return "inf";
    return s.value();
}

}  // namespace

Characteristics characteristics_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "characteristics must be a JSON object");
    Characteristics c;
    if (!doc.contains("m") || !doc["m"].is_number_integer() || doc["m"].get<long long>() < 1)
        throw Error(ErrorCode::ParseError, "\"m\" must be a positive integer");
    c.m = static_cast<std::size_t>(doc["m"].get<long long>());
    c.diam = number_from_json(doc, "diam");
    c.eps = doc.contains("eps") ? number_from_json(doc, "eps") : 0.0;
    for (const char* k : {"alpha_minus", "alpha_plus"})
        if (!doc.contains(k)) throw Error(ErrorCode::ParseError, std::string("missing \"") + k + "\"");
    c.alpha_minus = spacing_from_json(doc["alpha_minus"], "alpha_minus");
    c.alpha_plus = spacing_from_json(doc["alpha_plus"], "alpha_plus");
    c.d_minus = number_from_json(doc, "d_minus");
    c.d_plus = number_from_json(doc, "d_plus");
    c.validate();
    return c;
}

nlohmann::json to_json(const Characteristics& c) {
    nlohmann::ordered_json j;
    j["m"] = c.m;
    j["diam"] = c.diam;
    j["eps"] = c.eps;
    j["alpha_minus"] = spacing_to_json(c.alpha_minus);
    j["alpha_plus"] = spacing_to_json(c.alpha_plus);
    j["d_minus"] = c.d_minus;
    j["d_plus"] = c.d_plus;
    return nlohmann::json(j);
}

Characteristics preset_characteristics(std::string_view name, std::optional<std::size_t> m) {
    if (name == "circle-m2") {
        if (m && *m != 2) throw Error(ErrorCode::BadParams, "preset circle-m2 is defined for m = 2 only");
        // Unit circle: connected, so alpha_2 = 0; every 2-block partition has a
        // block containing an antipodal pair, so d_2 = diam = 2.
        Characteristics c;
        c.m = 2;
        c.diam = 2.0;
        c.eps = 0.0;
        c.alpha_minus = Spacing(0.0);
        c.alpha_plus = Spacing(0.0);
        c.d_minus = 2.0;
        c.d_plus = 2.0;
        return c;
    }
    constexpr std::string_view prefix = "simplex-";
    if (name.substr(0, prefix.size()) == prefix) {
        const auto rest = name.substr(prefix.size());
        const auto dash = rest.find('-');
        std::size_t n = 0;
        double lambda = 0;
        bool ok = dash != std::string_view::npos;
        if (ok) {
            const auto ns = rest.substr(0, dash);
            const auto ls = rest.substr(dash + 1);
            auto r1 = std::from_chars(ns.data(), ns.data() + ns.size(), n);
            auto r2 = std::from_chars(ls.data(), ls.data() + ls.size(), lambda);
            ok = r1.ec == std::errc{} && r1.ptr == ns.data() + ns.size() && r2.ec == std::errc{} &&
                 r2.ptr == ls.data() + ls.size() && n >= 1 && lambda > 0 && std::isfinite(lambda);
        }
        if (!ok) throw Error(ErrorCode::BadParams, "preset must look like simplex-<n>-<lambda>, got " + std::string(name));
        if (!m) throw Error(ErrorCode::BadParams, "preset " + std::string(name) + " needs --m");
        detail::check_cardinality(n, *m);
        Characteristics c;
        c.m = *m;
        c.diam = n >= 2 ? lambda : 0.0;
        c.eps = c.diam;
        if (*m == 1) {
            c.alpha_minus = c.alpha_plus = Spacing::unbounded();
            c.d_minus = c.d_plus = c.diam;
        } else {
            c.alpha_minus = c.alpha_plus = Spacing(lambda);
            // Some block holds two points unless every block is a singleton.
            c.d_minus = c.d_plus = *m < n ? lambda : 0.0;
        }
        return c;
    }
    throw Error(ErrorCode::BadParams, "unknown preset " + std::string(name));
}

}  // namespace ghs
