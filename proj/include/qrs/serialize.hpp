#pragma once

// vendored single-header nlohmann/json
#include "json.hpp"

#include "qrs/element.hpp"

namespace qrs {

class TensorElement;

nlohmann::json to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);

// {algebra, terms: [{coeff: {num, den as exponent/coefficient lists}, exps: [...]}]}
nlohmann::json to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

// mirrors Element with paired exponent vectors
nlohmann::json to_json(const TensorElement& x);

}  // namespace qrs
