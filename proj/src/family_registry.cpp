#include <pfcy/family_registry.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef PFCY_DATA_DIR
#define PFCY_DATA_DIR "data/registry"
#endif

namespace pfcy {

using nlohmann::json;

Rat FamilySpec::invariant(const std::string &key) const
{
    auto it = invariants.find(key);
    if (it == invariants.end())
        throw error("family " + name + " has no invariant '" + key + "'");
    return it->second;
}

EnumerativeInputs FamilySpec::enumerative_inputs() const
{
    EnumerativeInputs in;
    in.deg = (long)invariant("deg").get_num().get_si();
    in.c2H = (long)invariant("c2H").get_num().get_si();
    in.chi = (long)invariant("chi").get_num().get_si();
    in.h11 = (long)invariant("h11").get_num().get_si();
    return in;
}

json operator_to_json(const ThetaOperator &L)
{
    json rows = json::array();
    for (int i = 0; i <= L.order(); ++i) {
        json row = json::array();
        for (int j = 0; j <= L.phi_degree(); ++j)
            row.push_back(int_to_string(L.coeff(i, j)));
        rows.push_back(row);
    }
    return json{{"order", L.order()}, {"coeffs", rows}};
}

ThetaOperator operator_from_json(const json &j)
{
    std::vector<std::vector<Int>> rows;
    for (const auto &row : j.at("coeffs")) {
        std::vector<Int> r;
        for (const auto &v : row)
            r.push_back(int_from_string(v.get<std::string>()));
        rows.push_back(std::move(r));
    }
    if ((int)rows.size() - 1 != j.at("order").get<int>())
        throw error("operator JSON: order does not match row count");
    return ThetaOperator::from_integer(rows);
}

json gv_to_json(const GVTable &t)
{
    json inv = json::object();
    for (const auto &[d, v] : t.entries)
        inv[std::to_string(d)] = rat_to_string(v);
    json as = json::object();
    for (const auto &[k, v] : t.assumptions)
        as[k] = v;
    return json{{"family", t.family},
                {"genus", t.genus},
                {"invariants", inv},
                {"assumptions", as}};
}

json series_to_json(const Series &s)
{
    json c = json::array();
    for (int i = 0; i <= s.order(); ++i)
        c.push_back(rat_to_string(s[i]));
    return json{{"truncation_order", s.order()}, {"coefficients", c}};
}

std::vector<TransformStep> steps_from_json(const json &j)
{
    std::vector<TransformStep> steps;
    for (const auto &s : j) {
        std::string op = s.at("op").get<std::string>();
        if (op == "invert")
            steps.push_back(TransformStep::invert());
        else if (op == "negate")
            steps.push_back(TransformStep::negate());
        else if (op == "rescale")
            steps.push_back(
                TransformStep::rescale(rat_from_string(s.at("c").get<std::string>())));
        else if (op == "gauge")
            steps.push_back(
                TransformStep::gauge(rat_from_string(s.at("c").get<std::string>())));
        else
            throw error("unknown transform step '" + op + "'");
    }
    return steps;
}

namespace {

QPoly qpoly_from_json(const json &j)
{
    QPoly p;
    for (const auto &v : j)
        p.push_back(rat_from_string(v.get<std::string>()));
    return qp_trim(p);
}

MultiPoly multipoly_from_terms(const json &terms)
{
    MultiPoly p;
    for (const auto &t : terms) {
        Int c = int_from_string(t.at(0).get<std::string>());
        ExpVec e{};
        const auto &ev = t.at(1);
        for (int i = 0; i < kNumVars; ++i)
            e[i] = ev.at(i).get<int>();
        p = p + MultiPoly::monomial(c, e);
    }
    return p;
}

FamilySpec parse_family(const json &j)
{
    FamilySpec f;
    f.name = j.at("name").get<std::string>();
    f.display = j.value("display", "");
    f.notes = j.value("notes", "");
    if (j.contains("weights"))
        for (const auto &w : j["weights"])
            f.weights.push_back(w.get<int>());
    if (j.contains("bundle") && !j["bundle"].is_null()) {
        f.has_bundle = true;
        for (const auto &e : j["bundle"]["twists"])
            f.bundle_twists.push_back(e.get<int>());
        f.bundle_t = j["bundle"]["t"].get<int>();
    }
    f.period_rule = j.value("period_rule", "");
    f.period_disputed = j.value("period_disputed", false);
    if (j.contains("operator") && !j["operator"].is_null())
        f.op = operator_from_json(j["operator"]);
    if (j.contains("printed_variant") && !j["printed_variant"].is_null())
        f.printed_variant = operator_from_json(j["printed_variant"]);
    if (j.contains("invariants"))
        for (auto it = j["invariants"].begin(); it != j["invariants"].end(); ++it)
            f.invariants[it.key()] = rat_from_string(it.value().get<std::string>());
    if (j.contains("effective_power") && !j["effective_power"].is_null()) {
        f.effective_power = j["effective_power"]["value"].get<int>();
        f.effective_power_suspect = j["effective_power"].value("suspect", false);
    }
    if (j.contains("i2_resolution") && !j["i2_resolution"].is_null()) {
        GradedResolution res;
        for (const auto &pos : j["i2_resolution"]) {
            std::vector<std::pair<int, int>> p;
            for (const auto &tm : pos)
                p.emplace_back(tm.at(0).get<int>(), tm.at(1).get<int>());
            res.positions.push_back(std::move(p));
        }
        f.i2_resolution = std::move(res);
    }
    if (j.contains("mirror_matrix") && !j["mirror_matrix"].is_null()) {
        int n = j["mirror_matrix"]["size"].get<int>();
        std::vector<MultiPoly> upper;
        for (const auto &entry : j["mirror_matrix"]["upper"])
            upper.push_back(multipoly_from_terms(entry));
        f.mirror_matrix = SkewPolyMatrix::from_upper(n, upper);
    }
    if (j.contains("disc"))
        f.disc = qpoly_from_json(j["disc"]);
    if (j.contains("transforms"))
        for (auto it = j["transforms"].begin(); it != j["transforms"].end(); ++it) {
            TransformRecipe r;
            r.steps = steps_from_json(it.value().at("steps"));
            if (it.value().contains("target") && !it.value()["target"].is_null())
                r.target = it.value()["target"].get<std::string>();
            f.transforms[it.key()] = std::move(r);
        }
    if (j.contains("virtual_deg_expected") && !j["virtual_deg_expected"].is_null())
        f.virtual_deg_expected =
            rat_from_string(j["virtual_deg_expected"].get<std::string>());
    if (j.contains("virtual_inputs"))
        for (auto it = j["virtual_inputs"].begin(); it != j["virtual_inputs"].end();
             ++it)
            f.virtual_inputs[it.key()] =
                rat_from_string(it.value().get<std::string>());
    f.golden = j.value("golden", json::object());
    return f;
}

} // namespace

FamilyRegistry::FamilyRegistry(std::string dir) : dir_(std::move(dir))
{
    if (dir_.empty()) {
        if (const char *env = std::getenv("PFCY_REGISTRY_DIR"))
            dir_ = env;
        else
            dir_ = PFCY_DATA_DIR;
    }
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir_))
        throw error("registry directory not found: " + dir_);
    for (const auto &entry : fs::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json")
            continue;
        std::ifstream in(entry.path());
        json j = json::parse(in);
        FamilySpec f = parse_family(j);
        specs_.emplace(f.name, std::move(f));
    }
    if (specs_.empty())
        throw error("registry directory has no family files: " + dir_);
}

const FamilyRegistry &FamilyRegistry::instance()
{
    static FamilyRegistry reg;
    return reg;
}

const FamilySpec &FamilyRegistry::get(const std::string &name) const
{
    auto it = specs_.find(name);
    if (it == specs_.end())
        throw error("unknown family '" + name + "'");
    return it->second;
}

bool FamilyRegistry::has(const std::string &name) const
{
    return specs_.count(name) != 0;
}

std::vector<std::string> FamilyRegistry::names() const
{
    std::vector<std::string> out;
    for (const auto &[k, v] : specs_)
        out.push_back(k);
    return out;
}

Rat closed_form_coefficient(const std::string &rule, long n)
{
    auto B = [](long a, long b) {
        return b < 0 || b > a ? Int(0) : binomial((unsigned long)a, (unsigned long)b);
    };
    Int s(0);
    if (rule == "x13") {
        for (long k = 0; k <= n; ++k)
            s += B(2 * n + k, n) * B(n, k) * B(n, k);
        return Rat(B(2 * n, n) * B(2 * n, n) * s);
    }
    if (rule == "x5") {
        for (long k = 0; k <= n; ++k)
            s += B(n, k) * B(n + k, n) * B(2 * n + 2 * k, n + k) * B(2 * n + k, 2 * n - k);
        return Rat(B(2 * n, n) * s);
    }
    if (rule == "x7") {
        for (long k = 0; k <= 2 * n; ++k)
            s += B(n + k, k) * B(2 * n, k) * B(2 * n, k);
        return Rat(B(2 * n, n) * s);
    }
    if (rule == "x10") {
        for (long k = 0; k <= 2 * n; ++k) {
            Int t = B(2 * n, k);
            t = t * t;
            t = t * t;
            s += ((k + n) % 2 ? -t : t);
        }
        return Rat(B(2 * n, n) * s);
    }
    if (rule == "x9") {
        Int t = B(3 * n, n) * B(2 * n, n);
        return Rat(t * t);
    }
    throw error("no closed-form period rule '" + rule + "'");
}

Series closed_form_period(const FamilySpec &spec, int order)
{
    if (spec.period_rule.empty())
        throw error("family " + spec.name + " has no closed-form period rule");
    Series s(order);
    for (int n = 0; n <= order; ++n)
        s.mut(n) = closed_form_coefficient(spec.period_rule, n);
    return s;
}

} // namespace pfcy
