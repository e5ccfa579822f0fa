#include "fer/json_io.hpp"

#include <cctype>
#include <sstream>

namespace fer {

namespace {

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ArgumentError("malformed integer list entry: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw ArgumentError("malformed integer list entry: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

const char* kind_name(NegKind k) { return k == NegKind::MinusOne ? "-1" : "-2"; }

} // namespace

json divclass_to_json(const DivClass& d) {
    json j;
    j["a"] = d.a;
    j["b"] = d.b;
    j["m"] = d.m;
    if (d.has_x)
        j["mx"] = d.mx;
    else
        j["mx"] = nullptr;
    return j;
}

DivClass divclass_from_json(const json& j) {
    DivClass d;
    d.a = j.at("a").get<long long>();
    d.b = j.at("b").get<long long>();
    d.m = j.at("m").get<std::vector<long long>>();
    if (j.contains("mx") && !j.at("mx").is_null()) {
        d.has_x = true;
        d.mx = j.at("mx").get<long long>();
    }
    return d;
}

json surface_to_json(const SurfaceModel& S) {
    json j;
    j["e"] = S.e;
    j["r"] = S.r;
    j["with_x"] = S.with_x;
    if (S.config.is_very_general()) {
        j["config"] = "very_general";
    } else {
        json c;
        c["on_ce"] = S.config.on_ce;
        c["fiber"] = S.config.fiber_id;
        j["config"] = c;
    }
    return j;
}

SurfaceModel surface_from_json(const json& j) {
    long long e = j.at("e").get<long long>();
    int r = j.at("r").get<int>();
    bool with_x = j.value("with_x", false);
    PointConfig cfg = PointConfig::very_general();
    if (j.contains("config") && j.at("config").is_object()) {
        const json& c = j.at("config");
        cfg = PointConfig::configured(c.at("on_ce").get<std::vector<bool>>(),
                                      c.at("fiber").get<std::vector<int>>());
    }
    return SurfaceModel(e, r, with_x, cfg);
}

json negclass_to_json(const NegCurveClass& nc) {
    json j;
    j["class"] = divclass_to_json(nc.cls);
    j["kind"] = kind_name(nc.kind);
    j["passes_irreducibility"] = nc.passes_irreducibility;
    j["passes_very_general"] = nc.passes_very_general;
    j["passes_effectivity"] = nc.passes_effectivity;
    return j;
}

json seshadri_to_json(const SeshadriResult& r) {
    json j;
    j["value"] = rational_str(r.value);
    j["witness"] = r.witness.str();
    j["mult_x"] = r.witness_mult;
    j["method"] = seshadri_method_name(r.method);
    j["certified"] = r.certified;
    return j;
}

json linsys_report_to_json(const LinSysReport& r) {
    json j;
    j["e"] = r.spec.e;
    j["a"] = r.spec.a;
    j["b"] = r.spec.b;
    j["mults"] = r.spec.mults;
    j["virtual"] = r.virtual_dim;
    j["expected"] = r.expected_dim;
    j["actual"] = r.actual_dim;
    j["actual_by_seed"] = r.actual_by_seed;
    j["seed_stable"] = r.seed_stable;
    j["special"] = r.special;
    j["minus_one_special"] = r.minus_one_special;
    if (r.ce_fixed.has_value())
        j["ce_fixed"] = *r.ce_fixed;
    else
        j["ce_fixed"] = nullptr;
    json steps = json::array();
    for (const auto& s : r.reduction.log) {
        json st;
        st["kind"] = s.kind == ReductionStep::Kind::Ce ? "ce" : "minus_one";
        st["class"] = s.subtracted.str();
        st["t"] = s.t;
        st["v_before"] = s.v_before;
        st["v_after"] = s.v_after;
        steps.push_back(st);
    }
    j["reduction"] = {{"final", r.reduction.reduced.str()},
                      {"empty_stop", r.reduction.empty_stop},
                      {"steps", steps}};
    return j;
}

json scan_report_to_json(const ScanReport& r) {
    json j;
    j["grid"] = {{"e", {r.grid.e.lo, r.grid.e.hi}},  {"r", {r.grid.r.lo, r.grid.r.hi}},
                 {"a", {r.grid.a.lo, r.grid.a.hi}},  {"b", {r.grid.b.lo, r.grid.b.hi}},
                 {"m", {r.grid.m.lo, r.grid.m.hi}},  {"seeds", r.grid.seeds}};

    json cells = json::array();
    long long specials = 0, m1specials = 0, equiv_disagree = 0, reduced_violations = 0;
    long long shadow_violations = 0, unstable = 0;
    long long forward_violations = 0, backward_disagreements = 0;
    for (const auto& c : r.cells) {
        json jc;
        jc["e"] = c.e;
        jc["r"] = c.r;
        jc["a"] = c.a;
        jc["b"] = c.b;
        jc["m"] = c.m;
        jc["virtual"] = c.virtual_dim;
        jc["expected"] = c.expected_dim;
        jc["actual"] = c.actual_dim;
        jc["actual_by_seed"] = c.actual_by_seed;
        jc["seed_stable"] = c.seed_stable;
        jc["special"] = c.special;
        jc["minus_one_special"] = c.minus_one_special;
        jc["nonreduced_proxy"] = c.nonreduced_proxy;
        if (c.ce_fixed.has_value())
            jc["ce_fixed"] = *c.ce_fixed;
        else
            jc["ce_fixed"] = nullptr;
        jc["reduction_steps"] = c.reduction_steps;
        jc["empty_stop"] = c.empty_stop;
        jc["shadow_ok"] = c.shadow_ok;
        jc["v_t1_preserved"] = c.v_t1_preserved;
        jc["standard_range"] = c.standard_range;
        jc["conj_equiv_agree"] = c.conj_equiv_agree;
        jc["conj_reduced_violation"] = c.conj_reduced_violation;
        cells.push_back(jc);
        specials += c.special;
        m1specials += c.minus_one_special;
        equiv_disagree += !c.conj_equiv_agree;
        reduced_violations += c.conj_reduced_violation;
        shadow_violations += !c.shadow_ok;
        unstable += !c.seed_stable;
        forward_violations += c.special && !c.minus_one_special;
        backward_disagreements += c.minus_one_special && !c.special &&
                                  c.actual_dim >= 0 && c.standard_range;
    }
    j["cells"] = cells;

    json surfaces = json::array();
    long long exception_total = 0;
    for (const auto& s : r.surfaces) {
        json js;
        js["e"] = s.e;
        js["r"] = s.r;
        json ex = json::array();
        for (const auto& d : s.exceptions) ex.push_back(d.str());
        js["negative_non_minus_one_non_ce"] = ex;
        js["bounds_note"] = s.bounds_note;
        surfaces.push_back(js);
        exception_total += static_cast<long long>(s.exceptions.size());
    }
    j["surfaces"] = surfaces;

    j["summary"] = {{"cells", r.cells.size()},
                    {"special", specials},
                    {"minus_one_special", m1specials},
                    {"special_not_minus_one_special", forward_violations},
                    {"minus_one_special_not_special_nonempty_standard",
                     backward_disagreements},
                    {"equivalence_disagreements", equiv_disagree},
                    {"reduced_nonspecial_violations", reduced_violations},
                    {"shadow_violations", shadow_violations},
                    {"seed_unstable", unstable},
                    {"negative_class_exceptions", exception_total}};
    return j;
}

std::string scan_report_to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "e,r,a,b,m,virtual,expected,actual,seed_stable,special,minus_one_special,"
           "nonreduced_proxy,ce_fixed,reduction_steps,empty_stop,shadow_ok,"
           "v_t1_preserved,standard_range,conj_equiv_agree,conj_reduced_violation\n";
    for (const auto& c : r.cells) {
        out << c.e << ',' << c.r << ',' << c.a << ',' << c.b << ',' << c.m << ','
            << c.virtual_dim << ',' << c.expected_dim << ',' << c.actual_dim << ','
            << c.seed_stable << ',' << c.special << ',' << c.minus_one_special << ','
            << c.nonreduced_proxy << ','
            << (c.ce_fixed.has_value() ? (*c.ce_fixed ? "1" : "0") : "") << ','
            << c.reduction_steps << ',' << c.empty_stop << ',' << c.shadow_ok << ','
            << c.v_t1_preserved << ',' << c.standard_range << ','
            << c.conj_equiv_agree << ',' << c.conj_reduced_violation << '\n';
    }
    return out.str();
}

std::string families_to_csv(const std::vector<ClassFamily>& fams) {
    std::ostringstream out;
    out << "family,a,b,mx,pattern,kind,count\n";
    int idx = 0;
    for (const auto& f : fams) {
        out << ++idx << ',' << f.a << ',' << f.b << ',' << f.mx << ',';
        for (size_t i = 0; i < f.pattern.size(); ++i) {
            if (i) out << ' ';
            out << f.pattern[i];
        }
        out << ',' << kind_name(f.kind) << ',' << f.members.size() << '\n';
    }
    return out.str();
}

DivClass parse_class_string(const std::string& text, const SurfaceModel& S) {
    std::vector<long long> vals = parse_ll_list(text);
    size_t want = 2 + static_cast<size_t>(S.r) + (S.with_x ? 1 : 0);
    if (vals.size() != want)
        throw ArgumentError("class string has " + std::to_string(vals.size()) +
                            " entries, expected " + std::to_string(want) +
                            " (a,b,m1..mr" + (S.with_x ? ",mx)" : ")"));
    DivClass d;
    d.a = vals[0];
    d.b = vals[1];
    d.m.assign(vals.begin() + 2, vals.begin() + 2 + S.r);
    if (S.with_x) {
        d.has_x = true;
        d.mx = vals.back();
    }
    return d;
}

ScanGrid scan_grid_from_json(const json& j) {
    auto range = [&](const char* key) {
        const json& v = j.at(key);
        if (!v.is_array() || v.size() != 2)
            throw ArgumentError(std::string("grid range '") + key +
                                "' must be [lo, hi]");
        return ScanRange{v[0].get<long long>(), v[1].get<long long>()};
    };
    ScanGrid g;
    g.e = range("e");
    g.r = range("r");
    g.a = range("a");
    g.b = range("b");
    g.m = range("m");
    g.seeds = j.at("seeds").get<std::vector<unsigned long long>>();
    return g;
}

} // namespace fer
