#ifndef PFCY_FAMILY_REGISTRY_HPP
#define PFCY_FAMILY_REGISTRY_HPP

#include <pfcy/enumerative.hpp>
#include <pfcy/geometry.hpp>
#include <pfcy/series.hpp>
#include <pfcy/theta_operator.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfcy {

struct TransformRecipe {
    std::vector<TransformStep> steps;
    std::string target; // family whose operator the chain should reach; "" if none
};

struct FamilySpec {
    std::string name;
    std::string display;
    std::string notes;
    std::vector<int> weights;
    std::vector<int> bundle_twists;
    int bundle_t = 0;
    bool has_bundle = false;
    std::string period_rule; // "", "x13", "x5", "x7", "x10", "x9"
    bool period_disputed = false;
    std::optional<ThetaOperator> op;
    std::optional<ThetaOperator> printed_variant;
    std::map<std::string, Rat> invariants; // deg, c2H, h11, h12, chi
    std::optional<int> effective_power;
    bool effective_power_suspect = false;
    std::optional<GradedResolution> i2_resolution;
    std::optional<SkewPolyMatrix> mirror_matrix;
    QPoly disc; // normalized, disc(0) = 1; empty if none
    std::map<std::string, TransformRecipe> transforms;
    std::optional<Rat> virtual_deg_expected;
    std::map<std::string, Rat> virtual_inputs; // c2H, chi, deg for tilde genus 1
    nlohmann::json golden; // published reference tables, used by report --check and acceptance

    Rat invariant(const std::string &key) const;
    EnumerativeInputs enumerative_inputs() const;
};

class FamilyRegistry {
public:
    // dir empty: $PFCY_REGISTRY_DIR, else the compiled-in data directory
    explicit FamilyRegistry(std::string dir = "");
    static const FamilyRegistry &instance();

    const FamilySpec &get(const std::string &name) const;
    bool has(const std::string &name) const;
    std::vector<std::string> names() const; // sorted
    const std::string &directory() const { return dir_; }

private:
    std::string dir_;
    std::map<std::string, FamilySpec> specs_;
};

// Direct binomial-sum evaluation of the closed-form period coefficient.
Rat closed_form_coefficient(const std::string &rule, long n);
Series closed_form_period(const FamilySpec &spec, int order);

// JSON (de)serialization; integers and rationals as decimal strings.
nlohmann::json operator_to_json(const ThetaOperator &L);
ThetaOperator operator_from_json(const nlohmann::json &j);
nlohmann::json gv_to_json(const GVTable &t);
nlohmann::json series_to_json(const Series &s);
std::vector<TransformStep> steps_from_json(const nlohmann::json &j);

} // namespace pfcy

#endif
