#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esrn/sample.hpp"

namespace esrn {

inline constexpr double kGravity = 9.81;  // m/s^2

/// Published closed-form predictors of the longitudinal dispersion
/// coefficient, plus the evolved result. Formulas that require inputs
/// outside the w/d/U/Ustar schema (pipe radius, energy slope, velocity
/// profiles) are not representable here and are absent by design.
enum class ModelId : int {
    elder1959 = 0,
    fischer1979,
    liu1977,
    seo_cheong1998,
    koussis1998,
    deng2001,
    kashefipour2002,
    zeng_huai2014,
    disley2014,
    sahay_dutta2009,
    li2013,
    sattar_a,
    sattar_b,
    wang_huai2016,
    wang_huai2017,
    alizadeh2017,
    riahi2019,
    memarzadeh_a,
    memarzadeh_b,
    riahi2020_a,
    riahi2020_b,
    esrn_final,
};
inline constexpr int kModelCount = 22;

struct ModelInfo {
    ModelId id;
    std::string name;      // stable id string, e.g. "fischer1979"
    std::string citation;  // author / year
    std::string formula;   // printed form
    bool known_poor = false;  // reproduced for evaluation despite known overfit
    std::string note;         // transcription remarks
};

/// Catalog of all 22 models in sequence order.
const std::vector<ModelInfo>& model_catalog();

const ModelInfo& model_info(ModelId id);
std::optional<ModelId> model_by_name(const std::string& name);

struct Prediction {
    ModelId id;
    double dl = 0.0;  // m^2/s
    /// Dimensionless intermediate Dl/(d*Ustar) for normalized formulas;
    /// unset for direct forms.
    std::optional<double> dimensionless;
    bool negative = false;  // flagged, never clipped
};

/// Froude number U / sqrt(g*d).
double froude(double U, double d);

/// Mixing-coefficient term of the deng2001 model:
/// 0.145 + (w/d)^1.38 * (U/Ustar) / 3520.
double deng_epsilon(double wd, double uu);

/// Evaluate one model at a sample (fields must be positive; Dl unused).
Prediction predict(ModelId id, const Sample& sample);

}  // namespace esrn
